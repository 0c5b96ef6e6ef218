#pragma once

#include <string>
#include <vector>

namespace plotcli {

struct SvgPoint {
  double x;
  double y;
};

// Tiny SVG document assembler.  Coordinates are final SVG user units
// (y grows downward); callers do their own data-to-canvas transform.
class SvgBuilder {
 public:
  SvgBuilder(double min_x, double min_y, double width, double height);

  void add_line(SvgPoint a, SvgPoint b, const std::string& color,
                double stroke_width);
  // One polyline path element per call.
  void add_path(const std::vector<SvgPoint>& points, const std::string& color,
                double stroke_width);

  std::string str() const;

 private:
  std::string header_;
  std::string body_;
};

}  // namespace plotcli
