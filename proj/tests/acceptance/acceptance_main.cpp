#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cornu/darboux.hpp"
#include "cornu/fresnel.hpp"
#include "cornu/riccati.hpp"
#include "cornu/spiral.hpp"
#include "plotcli/csv.hpp"
#include "support/xml_check.hpp"

namespace fs = std::filesystem;
using cornu::Complex;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Shared theta grid: finite values only, so the reconstruction comparison
// stays meaningful at its tighter tolerance.
const std::vector<Complex> kThetas = {
    {0.0, 0.0}, {1.0, 0.0},  {-1.0, 0.0},    {0.0, 1.0},    {0.0, -1.0},
    {2.0, 1.0}, {0.5, 0.5},  {-0.3, 0.7},    {1.5, -0.5}};

// 20 z values in [0.1, 3] keeping every theta at distance >= 0.1 from the
// pole of the Moebius map.
std::vector<double> riccati_grid() {
  std::vector<double> zs;
  for (int i = 0; i < 33 && zs.size() < 20; ++i) {
    double z = 0.1 + (3.0 - 0.1) * i / 32.0;
    Complex e = std::exp(Complex(0.0, kPi * z * z));
    bool clear = true;
    for (const Complex& th : kThetas)
      clear = clear && std::abs(th * e + 1.0) >= 0.1;
    if (clear) zs.push_back(z);
  }
  return zs;
}

// First `want` z values in [lo, hi] with |cos(pi z^2/2 + phi)| >= 0.15.
std::vector<double> pole_free(double phi, double lo, double hi, int want) {
  std::vector<double> out;
  for (int i = 0; i < 400 && static_cast<int>(out.size()) < want; ++i) {
    double z = lo + (hi - lo) * i / 399.0;
    if (std::abs(std::cos(0.5 * kPi * z * z + phi)) >= 0.15) out.push_back(z);
  }
  return out;
}

cornu::SmoothRealFn secant_kernel(double phi) {
  cornu::SmoothRealFn g;
  g.value = [=](double z) {
    return std::sqrt(z) / std::cos(0.5 * kPi * z * z + phi);
  };
  g.d1 = [=](double z) {
    double w = 0.5 * kPi * z * z + phi;
    return (0.5 / std::sqrt(z) + kPi * z * std::sqrt(z) * std::tan(w)) /
           std::cos(w);
  };
  return g;
}

const double kPhases[] = {0.0, 0.25 * kPi, -0.25 * kPi, 0.5 * kPi,
                          -0.5 * kPi};

Outcome check_fresnel_oracle() {
  auto t0 = std::chrono::steady_clock::now();
  double max_dev = 0.0;
  for (int i = 0; i < 200; ++i) {
    double z = -5.0 + 10.0 * i / 199.0;
    cornu::FresnelPair f = cornu::fresnel_cs(z);
    double oc = cornu::quadrature_oracle(
        {cornu::IntegrandId::cos_half_pi_s2, 0.0, z, 1e-13});
    double os = cornu::quadrature_oracle(
        {cornu::IntegrandId::sin_half_pi_s2, 0.0, z, 1e-13});
    max_dev = std::max({max_dev, std::abs(f.c - oc), std::abs(f.s - os)});
  }
  double dt = seconds_since(t0);
  return {max_dev <= 1e-11 && dt < 5.0,
          "max dev " + sci(max_dev) + " over 200 pts in " + sci(dt) + " s"};
}

Outcome check_riccati_residual() {
  std::vector<double> zs = riccati_grid();
  if (zs.size() != 20) return {false, "pole-avoiding grid came up short"};

  double max_res = 0.0;
  for (const Complex& th : kThetas) {
    cornu::DifferentiableComplexFn y;
    y.value = [th](double z) { return cornu::riccati_general(z, th); };
    y.derivative = [th](double z) {
      return cornu::riccati_general_derivative(z, th);
    };
    for (double z : zs) max_res = std::max(max_res, cornu::riccati_residual(y, z));
  }

  double max_limit = 0.0;
  for (double z : {0.3, 0.8, 1.7, 2.6}) {
    Complex ipz(0.0, kPi * z);
    max_limit = std::max(max_limit,
                         std::abs(cornu::riccati_general(z, {0.0, 0.0}) + ipz));
    max_limit = std::max(
        max_limit, std::abs(cornu::riccati_general(z, {1e12, 0.0}) - ipz));
  }
  {
    double z = 0.6, w = 0.5 * kPi * z * z;
    max_limit = std::max(max_limit,
                         std::abs(cornu::riccati_general(z, {1.0, 0.0}) +
                                  Complex(kPi * z * std::tan(w), 0.0)));
  }
  {
    double z = 0.9, w = 0.5 * kPi * z * z;
    max_limit = std::max(max_limit,
                         std::abs(cornu::riccati_general(z, {-1.0, 0.0}) -
                                  Complex(kPi * z / std::tan(w), 0.0)));
  }

  return {max_res <= 1e-10 && max_limit <= 1e-10,
          "max residual " + sci(max_res) + ", limiting forms " +
              sci(max_limit)};
}

Outcome check_u_reconstruction() {
  std::vector<double> zs = riccati_grid();
  if (zs.size() != 20) return {false, "pole-avoiding grid came up short"};
  double max_dev = 0.0;
  for (const Complex& th : kThetas) {
    Complex gamma = cornu::gamma_from_theta(th);
    for (double z : zs)
      max_dev = std::max(max_dev,
                         std::abs(cornu::riccati_general_via_u(z, gamma) -
                                  cornu::riccati_general(z, th)));
  }
  return {max_dev <= 1e-12, "max dev " + sci(max_dev)};
}

Outcome check_deformation_limits() {
  cornu::DeformationParameter zero = cornu::DeformationParameter::from_theta(
      0.0, 0.0);
  double max_zero = 0.0;
  for (int i = 0; i < 200; ++i) {
    double z = -5.0 + 10.0 * i / 199.0;
    cornu::SpiralPoint p = cornu::deformed_point(z, zero);
    cornu::FresnelPair f = cornu::fresnel_cs(z);
    max_zero = std::max({max_zero, std::abs(p.x - f.c), std::abs(p.y + f.s)});
  }

  cornu::DeformationParameter ten = cornu::DeformationParameter::from_theta(
      10.0, 0.0);
  double sup = 0.0;
  for (int i = 0; i < 1001; ++i) {
    double z = -5.0 + 10.0 * i / 1000.0;
    cornu::SpiralPoint p = cornu::deformed_point(z, ten);
    cornu::FresnelPair f = cornu::fresnel_cs(z);
    sup = std::max({sup, std::abs(p.x - f.c), std::abs(p.y - f.s)});
  }

  return {max_zero <= 1e-12 && sup <= 0.08,
          "reflected dev " + sci(max_zero) + ", near-standard sup " +
              sci(sup)};
}

Outcome check_foci() {
  const cornu::DeformationParameter params[] = {
      cornu::DeformationParameter::from_theta(1e12, 0.0),
      cornu::DeformationParameter::from_theta(0.0, 0.0),
      cornu::DeformationParameter::from_theta(1.0, 1.0),
      cornu::DeformationParameter::from_theta(2.0, -1.0),
      cornu::DeformationParameter::from_theta(3.0, 0.0)};
  double max_dist = 0.0;
  for (const auto& p : params) {
    cornu::SpiralPoint pt = cornu::deformed_point(200.0, p);
    cornu::PlanePoint focus =
        cornu::asymptotic_focus(p, cornu::FocusSign::positive);
    max_dist = std::max(max_dist, std::hypot(pt.x - focus.x, pt.y - focus.y));
  }
  cornu::PlanePoint std_focus = cornu::asymptotic_focus(
      params[0], cornu::FocusSign::positive);
  double std_dev = std::max(std::abs(std_focus.x - 0.5),
                            std::abs(std_focus.y - 0.5));
  return {max_dist <= 0.002 && std_dev <= 1e-9,
          "max focus distance " + sci(max_dist) + " across 5 params"};
}

Outcome check_curvature_growth() {
  cornu::DeformationParameter p = cornu::DeformationParameter::from_theta(
      1e12, 0.0);
  double max_dev = 0.0;
  for (double z : {0.5, 1.0, 2.0})
    max_dev = std::max(max_dev,
                       std::abs(cornu::curvature(p, z) / (kPi * z) - 1.0));
  return {max_dev <= 1e-6, "max |kappa/(pi z) - 1| " + sci(max_dev)};
}

Outcome check_factorization() {
  double max_dev = 0.0;
  for (double phi : kPhases) {
    std::vector<double> zs = pole_free(phi, 0.2, 3.0, 40);
    cornu::SmoothRealFn cosk = cornu::cosine_solution(phi);
    cornu::SmoothRealFn seck = secant_kernel(phi);
    const cornu::SmoothRealFn second_order[] = {
        cornu::cosine_solution(phi), cornu::sine_solution(phi),
        cornu::cosine_solution(0.3), cornu::sine_solution(1.1)};
    const cornu::SmoothRealFn partners[] = {
        cornu::partner_psi_solution(phi, 2.0, 0.0),
        cornu::partner_psi_solution(phi, 0.0, 1.0),
        cornu::partner_psi_solution(phi, 1.0, 0.5)};
    for (double z : zs) {
      max_dev = std::max(max_dev, std::abs(cornu::apply_A_plus(cosk, z, phi)));
      max_dev = std::max(max_dev,
                         std::abs(cornu::apply_A_minus(seck, z, phi)));
      for (const auto& f : second_order)
        max_dev = std::max(max_dev,
                           std::abs(cornu::apply_A_minus_A_plus(f, z, phi)));
      for (const auto& g : partners)
        max_dev = std::max(max_dev,
                           std::abs(cornu::apply_A_plus_A_minus(g, z, phi)));
    }
  }
  return {max_dev <= 1e-8, "max annihilation residual " + sci(max_dev)};
}

Outcome check_distortion_forms() {
  const cornu::DistortionPhase kinds[] = {
      cornu::DistortionPhase::phi0, cornu::DistortionPhase::plus_pi4,
      cornu::DistortionPhase::minus_pi4, cornu::DistortionPhase::plus_pi2,
      cornu::DistortionPhase::minus_pi2};
  double max_form = 0.0;
  for (cornu::DistortionPhase which : kinds) {
    double phi = cornu::distortion_phase_value(which);
    std::vector<double> zs = pole_free(phi, 0.2, 3.0, 50);
    if (zs.size() != 50) return {false, "pole-avoiding grid came up short"};
    for (double z : zs)
      max_form = std::max(max_form,
                          std::abs(cornu::darboux_distortion(z, phi) -
                                   cornu::darboux_distortion_special(z, which)));
  }

  double max_env = 0.0;
  for (double phi : kPhases) {
    for (int k = 0; k <= 4; ++k) {
      double zsq = 2.0 * k - 2.0 * phi / kPi;
      if (zsq < 0.05) continue;
      double z = std::sqrt(zsq);
      if (z > 3.05) continue;
      double envelope = -2.0 * kPi * kPi * z * z + 0.75 / (z * z);
      max_env = std::max(max_env,
                         std::abs(cornu::darboux_distortion(z, phi) -
                                  envelope));
    }
  }

  return {max_form <= 1e-10 && max_env <= 1e-12,
          "forms " + sci(max_form) + ", tan-zero envelope " + sci(max_env)};
}

Outcome check_partner_solution() {
  double max_form = 0.0, max_res = 0.0;
  for (double phi : kPhases) {
    cornu::SmoothRealFn psi = cornu::partner_psi_solution(phi, 2.0, 0.0);
    for (double z : pole_free(phi, 0.2, 3.0, 40)) {
      double w = 0.5 * kPi * z * z + phi;
      double closed = std::sqrt(z) * (z + cornu::fresnel_shifted(z, phi)) /
                      std::cos(w);
      max_form = std::max(max_form,
                          std::abs(cornu::partner_psi(z, phi, 2.0, 0.0) -
                                   closed));
      max_res = std::max(
          max_res,
          cornu::ode_residual(cornu::EquationId::partner, psi, z, phi));
    }
  }
  return {max_form <= 1e-11 && max_res <= 1e-8,
          "closed form " + sci(max_form) + ", residual " + sci(max_res)};
}

Outcome check_figures() {
  auto t0 = std::chrono::steady_clock::now();
  fs::path root = fs::temp_directory_path() / "cornu_acceptance";
  std::error_code ec;
  fs::remove_all(root, ec);

  auto cli = [](const std::string& args) {
    std::string cmd = std::string("\"") + CORNU_CLI_PATH + "\" " + args +
                      " > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };

  for (int run = 1; run <= 2; ++run) {
    fs::path d = root / ("run" + std::to_string(run));
    if (cli("fig1 --out " + (d / "fig1").string() + " --samples 301") != 0)
      return {false, "fig1 invocation failed"};
    if (cli("fig2 --out " + (d / "fig2").string()) != 0)
      return {false, "fig2 invocation failed"};
    if (cli("fig3 --out " + (d / "fig3" / "fig3").string()) != 0)
      return {false, "fig3 invocation failed"};
  }

  auto gather = [&](int run, const std::string& ext) {
    std::map<std::string, std::string> out;
    fs::path base = root / ("run" + std::to_string(run));
    for (const auto& e : fs::recursive_directory_iterator(base))
      if (e.is_regular_file() && e.path().extension() == ext)
        out[fs::relative(e.path(), base).string()] = slurp(e.path().string());
    return out;
  };

  auto csv1 = gather(1, ".csv");
  auto csv2 = gather(2, ".csv");
  if (csv1.size() != 15 || csv2.size() != 15)
    return {false, "expected 15 csv files per run, saw " +
                       std::to_string(csv1.size()) + "/" +
                       std::to_string(csv2.size())};
  if (csv1 != csv2) return {false, "csv output differs between runs"};

  auto svgs = gather(1, ".svg");
  if (svgs.size() != 15)
    return {false, "expected 15 svg files, saw " +
                       std::to_string(svgs.size())};
  for (const auto& [name, doc] : svgs) {
    std::string why;
    if (!testsupport::xml_well_formed(doc, &why))
      return {false, name + ": " + why};
  }

  plotcli::CsvTable dist = plotcli::parse_csv(
      csv1.at(std::string("fig2/distortion_phi_0pi.csv")));
  int breaks = 0;
  for (const auto& row : dist.rows)
    if (row.size() == 3 && row[2] == "1") ++breaks;
  if (breaks < 2) return {false, "fig2 csv shows no pole breaks"};
  if (testsupport::count_elements(svgs.at("fig2/distortion_phi_0pi.svg"),
                                  "path") < 2)
    return {false, "fig2 svg not split at poles"};

  double dt = seconds_since(t0);
  return {dt < 10.0, "15 csv identical across runs, 15 svg well-formed, " +
                         std::to_string(breaks) + " pole breaks, " + sci(dt) +
                         " s"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<Outcome()> fn;
  };
  const std::vector<Criterion> criteria = {
      {"fresnel integrals vs independent quadrature (1e-11)",
       check_fresnel_oracle},
      {"riccati general solution residual + limits (1e-10)",
       check_riccati_residual},
      {"u-substitution reconstruction equality (1e-12)",
       check_u_reconstruction},
      {"deformation limits: reflection exact, a=10 near-standard",
       check_deformation_limits},
      {"late-arclength points approach the foci (2e-3)", check_foci},
      {"standard-limit curvature grows as pi*z (1e-6)",
       check_curvature_growth},
      {"ladder kernels and composite annihilation (1e-8)",
       check_factorization},
      {"simplified distortion forms and tan-zero envelope",
       check_distortion_forms},
      {"partner solution closed form and residual", check_partner_solution},
      {"figure pipeline: svg, deterministic csv, pole breaks",
       check_figures}};

  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && o.pass;
    std::printf("%2zu. %-56s %s  %s\n", i + 1, criteria[i].label,
                o.detail.c_str(), o.pass ? "PASS" : "FAIL");
  }
  return all_pass ? 0 : 1;
}
