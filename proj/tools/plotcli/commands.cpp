#include "plotcli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "cornu/darboux.hpp"
#include "cornu/fresnel.hpp"
#include "cornu/spiral.hpp"
#include "plotcli/csv.hpp"
#include "plotcli/svg.hpp"

namespace plotcli {

namespace {

constexpr double kPi = std::numbers::pi;

bool wants_svg(OutputFormat f) { return f != OutputFormat::csv; }
bool wants_csv(OutputFormat f) { return f != OutputFormat::svg; }

std::string strip_known_extension(const std::string& path) {
  for (const char* ext : {".svg", ".csv"}) {
    if (path.size() > 4 && path.ends_with(ext))
      return path.substr(0, path.size() - 4);
  }
  return path;
}

// File-name fragment for a numeric value: "-1.5" -> "m1p5".
std::string value_tag(double v) {
  std::string s = format_double(v);
  for (char& ch : s) {
    if (ch == '-') ch = 'm';
    if (ch == '.') ch = 'p';
  }
  return s;
}

// Phases are tagged in units of pi, rounded to 9 decimals: "0p25pi".
std::string phase_tag(double phi) {
  double v = std::round(phi / kPi * 1e9) / 1e9;
  if (v == 0.0) v = 0.0;  // normalize -0
  return value_tag(v) + "pi";
}

std::string fmt_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

// Argand plot: fixed square viewBox, y axis flipped to keep the
// mathematical orientation.
std::string argand_svg(const std::vector<cornu::SampledCurve>& curves) {
  SvgBuilder svg(-1.2, -1.2, 2.4, 2.4);
  svg.add_line({-1.2, 0.0}, {1.2, 0.0}, "#cccccc", 0.005);
  svg.add_line({0.0, -1.2}, {0.0, 1.2}, "#cccccc", 0.005);
  const char* colors[] = {"#1f77b4", "#d62728", "#7f7f7f"};
  for (size_t i = 0; i < curves.size(); ++i) {
    std::vector<SvgPoint> pts;
    pts.reserve(curves[i].points.size());
    for (const auto& p : curves[i].points) pts.push_back({p.x, -p.y});
    svg.add_path(pts, colors[std::min<size_t>(i, 2)], 0.015);
  }
  return svg.str();
}

CsvTable argand_csv(const cornu::SampledCurve& curve) {
  CsvTable t;
  t.header = {"z", "x", "y", "modulus_sq"};
  t.rows.reserve(curve.points.size());
  for (const auto& p : curve.points)
    t.rows.push_back({format_double(p.arclength), format_double(p.x),
                      format_double(p.y), format_double(p.modulus_sq)});
  return t;
}

}  // namespace

PlotJob parse_cli(const std::vector<std::string>& args) {
  CLI::App app{"Deformed Cornu spirals: figure data, plots, verification"};
  app.require_subcommand(1);

  double a = 1.0, b = 0.0;
  double scale = 0.0;
  std::vector<double> avalues = {-1.0, 0.0, 1.0};
  std::vector<double> bvalues = {-1.0, 0.0, 1.0};
  std::vector<double> phases = {0.0, 0.25 * kPi, -0.25 * kPi, 0.5 * kPi,
                                -0.5 * kPi};
  std::string out;
  std::string format;
  int samples = 0;
  double zmin = 0.0, zmax = 0.0;
  bool have_zmin = false, have_zmax = false;
  double clip = 200.0;

  auto add_common = [&](CLI::App* sub, bool with_range = true) {
    sub->add_option("--out", out, "Output path (base name or directory)");
    sub->add_option("--format", format, "Output format: svg, csv or both")
        ->check(CLI::IsMember({"svg", "csv", "both"}));
    sub->add_option("--samples", samples, "Samples per curve (>= 2)");
    if (with_range) {
      sub->add_option("--zmin", zmin, "Lower end of the z range")
          ->trigger_on_parse()
          ->each([&](const std::string&) { have_zmin = true; });
      sub->add_option("--zmax", zmax, "Upper end of the z range")
          ->trigger_on_parse()
          ->each([&](const std::string&) { have_zmax = true; });
    }
  };

  CLI::App* argand = app.add_subcommand(
      "argand", "Single deformed spiral in the Argand plane");
  argand->add_option("--a", a, "Re(theta)");
  argand->add_option("--b", b, "Im(theta)");
  argand->add_option("--scale", scale,
                     "Override the default scale 1/sqrt(a^2+b^2)");
  add_common(argand);

  CLI::App* fig1 = app.add_subcommand(
      "fig1", "Grid of deformed spirals over (a, b) values");
  fig1->add_option("--avalues", avalues, "Grid values for Re(theta)");
  fig1->add_option("--bvalues", bvalues, "Grid values for Im(theta)");
  add_common(fig1);

  CLI::App* fig2 = app.add_subcommand(
      "fig2", "Darboux distortion profiles for a set of phases");
  fig2->add_option("--phases", phases, "Phase shifts in radians");
  fig2->add_option("--clip", clip, "Display clip for |delta| in the SVG");
  add_common(fig2);

  CLI::App* fig3 = app.add_subcommand(
      "fig3", "Partner and near-standard spirals against the standard one");
  add_common(fig3);

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the residual verification suite");
  (void)verify;

  std::vector<const char*> argv;
  argv.push_back("cornu");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  PlotJob job;
  if (app.got_subcommand(argand)) {
    job.kind = JobKind::single_spiral;
    job.parameters = {scale > 0.0
                          ? cornu::DeformationParameter::from_theta_scaled(
                                a, b, scale)
                          : cornu::DeformationParameter::from_theta(a, b)};
    job.output_path = out.empty() ? "argand" : out;
  } else if (app.got_subcommand(fig1)) {
    job.kind = JobKind::argand_grid;
    if (avalues.empty() || bvalues.empty())
      throw UsageError("fig1: the (a, b) grid must be non-empty");
    for (double av : avalues)
      for (double bv : bvalues)
        job.parameters.push_back(cornu::DeformationParameter::from_theta(av, bv));
    job.output_path = out.empty() ? "fig1" : out;
  } else if (app.got_subcommand(fig2)) {
    job.kind = JobKind::distortion;
    if (phases.empty()) throw UsageError("fig2: need at least one phase");
    job.phases = phases;
    job.clip = clip;
    job.z_min = 0.05;
    job.z_max = 3.2;
    job.output_path = out.empty() ? "fig2" : out;
  } else if (app.got_subcommand(fig3)) {
    job.kind = JobKind::comparison;
    job.parameters = {cornu::DeformationParameter::from_theta(0.0, 0.0),
                      cornu::DeformationParameter::from_theta(10.0, 0.0)};
    job.output_path = out.empty() ? "fig3" : out;
  } else {
    job.kind = JobKind::residual_report;
    return job;
  }

  if (have_zmin) job.z_min = zmin;
  if (have_zmax) job.z_max = zmax;
  if (samples != 0) job.samples_per_curve = samples;
  if (job.samples_per_curve < 2)
    throw UsageError("--samples must be at least 2");
  if (!(job.z_min < job.z_max))
    throw UsageError("--zmin must be smaller than --zmax");
  if (job.kind == JobKind::distortion && !(job.z_min > 0.0))
    throw UsageError("fig2: --zmin must be positive");
  if (job.kind == JobKind::distortion && !(job.clip > 0.0))
    throw UsageError("fig2: --clip must be positive");
  if (job.output_path.empty()) throw UsageError("--out must not be empty");

  if (format == "svg") {
    job.format = OutputFormat::svg;
  } else if (format == "csv") {
    job.format = OutputFormat::csv;
  } else if (format == "both") {
    job.format = OutputFormat::both;
  } else {
    // No --format: take the hint from the --out extension.
    if (job.output_path.ends_with(".svg"))
      job.format = OutputFormat::svg;
    else if (job.output_path.ends_with(".csv"))
      job.format = OutputFormat::csv;
    else
      job.format = OutputFormat::both;
  }
  return job;
}

std::vector<std::string> run_argand_grid(const PlotJob& job) {
  if (job.parameters.empty())
    throw UsageError("argand: empty parameter grid");
  std::vector<std::string> written;
  for (const auto& param : job.parameters) {
    cornu::SampledCurve curve = cornu::sample_spiral(
        param, job.z_min, job.z_max, job.samples_per_curve);
    std::string base;
    if (job.kind == JobKind::single_spiral) {
      base = strip_known_extension(job.output_path);
    } else {
      base = strip_known_extension(job.output_path) + "/argand_a" +
             value_tag(param.a) + "_b" + value_tag(param.b);
    }
    if (wants_svg(job.format)) {
      std::string path = base + ".svg";
      write_text_file(path, argand_svg({curve}));
      written.push_back(path);
    }
    if (wants_csv(job.format)) {
      std::string path = base + ".csv";
      write_text_file(path, render_csv(argand_csv(curve)));
      written.push_back(path);
    }
  }
  return written;
}

std::vector<std::string> run_distortion(const PlotJob& job) {
  if (job.phases.empty()) throw UsageError("fig2: empty phase list");
  std::vector<std::string> written;
  std::set<std::string> used_tags;
  double step = (job.z_max - job.z_min) / (job.samples_per_curve - 1);
  for (double phi : job.phases) {
    cornu::DistortionProfile profile = cornu::sample_distortion(
        phi, job.z_min, job.z_max, job.samples_per_curve);

    std::string tag = phase_tag(phi);
    while (!used_tags.insert(tag).second) tag += "x";
    std::string base = strip_known_extension(job.output_path) +
                       "/distortion_phi_" + tag;

    if (wants_csv(job.format)) {
      // One row per grid point; points swallowed by a pole break keep
      // their z but carry delta = nan and break = 1.
      CsvTable t;
      t.header = {"z", "delta", "break"};
      size_t next = 0;
      for (int i = 0; i < job.samples_per_curve; ++i) {
        double z = (i == job.samples_per_curve - 1) ? job.z_max
                                                    : job.z_min + i * step;
        if (next < profile.samples.size() &&
            std::abs(profile.samples[next].z - z) < 0.25 * step) {
          t.rows.push_back({format_double(z),
                            format_double(profile.samples[next].delta), "0"});
          ++next;
        } else {
          t.rows.push_back({format_double(z),
                            format_double(std::nan("")), "1"});
        }
      }
      std::string path = base + ".csv";
      write_text_file(path, render_csv(t));
      written.push_back(path);
    }

    if (wants_svg(job.format)) {
      // 800x500 canvas, 40px margin, delta clamped to +-clip, one path
      // per branch between pole breaks.
      const double w = 800, h = 500, m = 40;
      auto to_px = [&](double z, double delta) -> SvgPoint {
        double cx = m + (z - job.z_min) / (job.z_max - job.z_min) * (w - 2 * m);
        double clamped = std::clamp(delta, -job.clip, job.clip);
        double cy = m + (job.clip - clamped) / (2 * job.clip) * (h - 2 * m);
        return {cx, cy};
      };
      SvgBuilder svg(0, 0, w, h);
      svg.add_line(to_px(job.z_min, 0), to_px(job.z_max, 0), "#cccccc", 1);
      std::vector<SvgPoint> branch;
      double prev_z = job.z_min;
      for (const auto& s : profile.samples) {
        if (!branch.empty() && s.z - prev_z > 1.5 * step) {
          svg.add_path(branch, "#1f77b4", 1.5);
          branch.clear();
        }
        branch.push_back(to_px(s.z, s.delta));
        prev_z = s.z;
      }
      svg.add_path(branch, "#1f77b4", 1.5);
      std::string path = base + ".svg";
      write_text_file(path, svg.str());
      written.push_back(path);
    }
  }
  return written;
}

std::string run_comparison(const PlotJob& job) {
  if (job.parameters.size() != 2)
    throw UsageError("fig3: expected exactly two parameter sets");
  const auto& partner = job.parameters[0];
  const auto& deformed = job.parameters[1];
  int n = job.samples_per_curve;
  double step = (job.z_max - job.z_min) / (n - 1);

  cornu::SampledCurve partner_curve =
      cornu::sample_spiral(partner, job.z_min, job.z_max, n);
  cornu::SampledCurve deformed_curve =
      cornu::sample_spiral(deformed, job.z_min, job.z_max, n);

  std::string base = strip_known_extension(job.output_path);
  std::string primary;

  if (wants_csv(job.format)) {
    CsvTable t;
    t.header = {"z",          "x_partner",  "y_partner", "x_deformed",
                "y_deformed", "x_standard", "y_standard", "sup_dev"};
    for (int i = 0; i < n; ++i) {
      double z = (i == n - 1) ? job.z_max : job.z_min + i * step;
      const auto& pp = partner_curve.points[static_cast<size_t>(i)];
      const auto& dp = deformed_curve.points[static_cast<size_t>(i)];
      cornu::FresnelPair f = cornu::fresnel_cs(z);
      double dev = std::max(std::abs(dp.x - f.c), std::abs(dp.y - f.s));
      t.rows.push_back({format_double(z), format_double(pp.x),
                        format_double(pp.y), format_double(dp.x),
                        format_double(dp.y), format_double(f.c),
                        format_double(f.s), format_double(dev)});
    }
    std::string path = base + ".csv";
    write_text_file(path, render_csv(t));
    primary = path;
  }

  if (wants_svg(job.format)) {
    cornu::SampledCurve standard;
    standard.parameter = cornu::DeformationParameter::from_theta_scaled(
        1.0, 0.0, 1.0);
    standard.points.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      double z = (i == n - 1) ? job.z_max : job.z_min + i * step;
      cornu::FresnelPair f = cornu::fresnel_cs(z);
      standard.points.push_back({z, f.c, f.s, f.c * f.c + f.s * f.s});
    }
    std::string path = base + ".svg";
    write_text_file(path,
                    argand_svg({partner_curve, deformed_curve, standard}));
    primary = path;
  }
  return primary;
}

int run_verify(std::ostream& os) {
  bool all_pass = true;
  for (const auto& r : cornu::run_residual_suite()) {
    all_pass = all_pass && r.pass;
    os << cornu::equation_name(r.equation) << ": max residual "
       << fmt_sci(r.max_residual) << " tolerance " << fmt_sci(r.tolerance)
       << " over " << r.samples.size() << " samples -> "
       << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  return all_pass ? 0 : 3;
}

int run(const PlotJob& job, std::ostream& os) {
  switch (job.kind) {
    case JobKind::residual_report:
      return run_verify(os);
    case JobKind::comparison:
      os << run_comparison(job) << "\n";
      return 0;
    case JobKind::distortion:
      for (const auto& p : run_distortion(job)) os << p << "\n";
      return 0;
    case JobKind::argand_grid:
    case JobKind::single_spiral:
      for (const auto& p : run_argand_grid(job)) os << p << "\n";
      return 0;
  }
  throw UsageError("unknown job kind");
}

}  // namespace plotcli
