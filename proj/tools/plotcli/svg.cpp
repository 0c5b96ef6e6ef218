#include "plotcli/svg.hpp"

#include "plotcli/csv.hpp"

namespace plotcli {

SvgBuilder::SvgBuilder(double min_x, double min_y, double width,
                       double height) {
  header_ = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
            format_double(min_x) + " " + format_double(min_y) + " " +
            format_double(width) + " " + format_double(height) + "\">\n";
}

void SvgBuilder::add_line(SvgPoint a, SvgPoint b, const std::string& color,
                          double stroke_width) {
  body_ += "<line x1=\"" + format_double(a.x) + "\" y1=\"" +
           format_double(a.y) + "\" x2=\"" + format_double(b.x) + "\" y2=\"" +
           format_double(b.y) + "\" stroke=\"" + color + "\" stroke-width=\"" +
           format_double(stroke_width) + "\"/>\n";
}

void SvgBuilder::add_path(const std::vector<SvgPoint>& points,
                          const std::string& color, double stroke_width) {
  if (points.empty()) return;
  std::string d;
  for (size_t i = 0; i < points.size(); ++i) {
    d += (i == 0) ? "M " : " L ";
    d += format_double(points[i].x);
    d += ' ';
    d += format_double(points[i].y);
  }
  body_ += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"" + format_double(stroke_width) +
           "\" stroke-linejoin=\"round\"/>\n";
}

std::string SvgBuilder::str() const { return header_ + body_ + "</svg>\n"; }

}  // namespace plotcli
