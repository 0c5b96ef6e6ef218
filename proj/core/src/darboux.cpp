#include "cornu/darboux.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cornu/fresnel.hpp"
#include "cornu/riccati.hpp"

namespace cornu {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCosGuard = 1e-10;
constexpr double kSpecialGuard = 1e-12;

void require_positive(double z, const char* who) {
  if (!std::isfinite(z) || !(z > 0.0))
    throw DomainError(std::string(who) + ": z must be positive");
}

double phase_cos(double z, double phi) {
  return std::cos(0.5 * kPi * z * z + phi);
}

void require_off_pole(double z, double c, const char* who) {
  if (std::abs(c) < kCosGuard)
    throw PoleError(std::string(who) + ": cos(pi z^2/2 + phi) vanishes", z);
}

double eval(const std::function<double(double)>& f, double z, const char* who,
            const char* order) {
  if (!f)
    throw DomainError(std::string(who) + ": solution lacks " + order);
  return f(z);
}

// Superpotential T(z) = pi sqrt(z) tan(pi z^2/2 + phi) and its derivative
// T' = pi tan(.)/(2 sqrt(z)) + pi^2 z^{3/2} / cos^2(.).
struct Superpotential {
  double value;
  double deriv;
};

Superpotential superpotential(double z, double phi) {
  double w = 0.5 * kPi * z * z + phi;
  double c = std::cos(w), s = std::sin(w);
  double tn = s / c;
  double rz = std::sqrt(z);
  return {kPi * rz * tn,
          0.5 * kPi * tn / rz + kPi * kPi * z * rz / (c * c)};
}

}  // namespace

SmoothRealFn finite_difference_adapter(std::function<double(double)> f) {
  auto h_at = [](double z) { return 1e-5 * std::max(1.0, std::abs(z)); };
  SmoothRealFn out;
  out.value = f;
  out.d1 = [f, h_at](double z) {
    double h = h_at(z);
    return (f(z + h) - f(z - h)) / (2.0 * h);
  };
  out.d2 = [f, h_at](double z) {
    double h = h_at(z);
    return (f(z + h) - 2.0 * f(z) + f(z - h)) / (h * h);
  };
  out.d3 = [f, h_at](double z) {
    double h = h_at(z);
    return (f(z + 2.0 * h) - 2.0 * f(z + h) + 2.0 * f(z - h) -
            f(z - 2.0 * h)) /
           (2.0 * h * h * h);
  };
  return out;
}

double apply_A_plus(const SmoothRealFn& f, double z, double phi) {
  require_positive(z, "apply_A_plus");
  double c = phase_cos(z, phi);
  require_off_pole(z, c, "apply_A_plus");
  Superpotential t = superpotential(z, phi);
  return eval(f.d1, z, "apply_A_plus", "d1") / std::sqrt(z) +
         t.value * eval(f.value, z, "apply_A_plus", "value");
}

double apply_A_minus(const SmoothRealFn& g, double z, double phi) {
  require_positive(z, "apply_A_minus");
  double c = phase_cos(z, phi);
  require_off_pole(z, c, "apply_A_minus");
  Superpotential t = superpotential(z, phi);
  double rz = std::sqrt(z);
  double gz = eval(g.value, z, "apply_A_minus", "value");
  return eval(g.d1, z, "apply_A_minus", "d1") / rz - gz / (2.0 * z * rz) -
         t.value * gz;
}

double apply_A_minus_A_plus(const SmoothRealFn& f, double z, double phi) {
  require_positive(z, "apply_A_minus_A_plus");
  double c = phase_cos(z, phi);
  require_off_pole(z, c, "apply_A_minus_A_plus");
  Superpotential t = superpotential(z, phi);
  double rz = std::sqrt(z);
  double fz = eval(f.value, z, "apply_A_minus_A_plus", "value");
  double f1 = eval(f.d1, z, "apply_A_minus_A_plus", "d1");
  double f2 = eval(f.d2, z, "apply_A_minus_A_plus", "d2");
  // h = A+ f, with h' expanded in closed form.
  double h = f1 / rz + t.value * fz;
  double h1 = f2 / rz - f1 / (2.0 * z * rz) + t.deriv * fz + t.value * f1;
  return h1 / rz - h / (2.0 * z * rz) - t.value * h;
}

double apply_A_plus_A_minus(const SmoothRealFn& g, double z, double phi) {
  require_positive(z, "apply_A_plus_A_minus");
  double c = phase_cos(z, phi);
  require_off_pole(z, c, "apply_A_plus_A_minus");
  Superpotential t = superpotential(z, phi);
  double rz = std::sqrt(z);
  double gz = eval(g.value, z, "apply_A_plus_A_minus", "value");
  double g1 = eval(g.d1, z, "apply_A_plus_A_minus", "d1");
  double g2 = eval(g.d2, z, "apply_A_plus_A_minus", "d2");
  // k = A- g, with k' expanded in closed form.
  double k = g1 / rz - gz / (2.0 * z * rz) - t.value * gz;
  double k1 = g2 / rz - g1 / (z * rz) + 0.75 * gz / (z * z * rz) -
              t.deriv * gz - t.value * g1;
  return k1 / rz + t.value * k;
}

double darboux_distortion(double z, double phi) {
  require_positive(z, "darboux_distortion");
  double w = 0.5 * kPi * z * z + phi;
  double c = std::cos(w);
  require_off_pole(z, c, "darboux_distortion");
  double tn = std::sin(w) / c;
  return -2.0 * kPi * kPi * z * z + 0.75 / (z * z) - kPi * tn -
         2.0 * kPi * kPi * z * z * tn * tn;
}

double distortion_phase_value(DistortionPhase which) {
  switch (which) {
    case DistortionPhase::phi0:
      return 0.0;
    case DistortionPhase::plus_pi4:
      return 0.25 * kPi;
    case DistortionPhase::minus_pi4:
      return -0.25 * kPi;
    case DistortionPhase::plus_pi2:
      return 0.5 * kPi;
    case DistortionPhase::minus_pi2:
      return -0.5 * kPi;
  }
  return 0.0;
}

double darboux_distortion_special(double z, DistortionPhase which) {
  require_positive(z, "darboux_distortion_special");
  double p2 = kPi * z * z;
  double head = 0.75 / (z * z);
  double c = std::cos(p2), s = std::sin(p2);
  // Half-angle forms of the general expression at the special phases;
  // the two half-pi cases coincide because tan has period pi.
  switch (which) {
    case DistortionPhase::phi0: {
      double den = c + 1.0;
      if (std::abs(den) < kSpecialGuard)
        throw PoleError("darboux_distortion_special: cos(pi z^2) + 1 vanishes",
                        z);
      return head - kPi * (s + 4.0 * p2) / den;
    }
    case DistortionPhase::plus_pi4: {
      double den = s - 1.0;
      if (std::abs(den) < kSpecialGuard)
        throw PoleError("darboux_distortion_special: sin(pi z^2) - 1 vanishes",
                        z);
      return head + kPi * (c + 4.0 * p2) / den;
    }
    case DistortionPhase::minus_pi4: {
      double den = s + 1.0;
      if (std::abs(den) < kSpecialGuard)
        throw PoleError("darboux_distortion_special: sin(pi z^2) + 1 vanishes",
                        z);
      return head + kPi * (c - 4.0 * p2) / den;
    }
    case DistortionPhase::plus_pi2:
    case DistortionPhase::minus_pi2: {
      double den = c - 1.0;
      if (std::abs(den) < kSpecialGuard)
        throw PoleError("darboux_distortion_special: cos(pi z^2) - 1 vanishes",
                        z);
      return head - kPi * (s - 4.0 * p2) / den;
    }
  }
  throw DomainError("darboux_distortion_special: unknown case");
}

double partner_phi(double z, double phi, double amplitude) {
  return amplitude * std::cos(0.5 * kPi * z * z + phi);
}

double partner_psi(double z, double phi, double b1, double b2) {
  require_positive(z, "partner_psi");
  double c = phase_cos(z, phi);
  require_off_pole(z, c, "partner_psi");
  double m = b2 + 2.0 * b1 * z + 2.0 * b1 * fresnel_shifted(z, phi);
  return 0.25 * std::sqrt(z) * m / c;
}

SmoothRealFn cosine_solution(double phi, double amplitude) {
  SmoothRealFn f;
  f.value = [=](double z) { return amplitude * std::cos(0.5 * kPi * z * z + phi); };
  f.d1 = [=](double z) {
    return -amplitude * kPi * z * std::sin(0.5 * kPi * z * z + phi);
  };
  f.d2 = [=](double z) {
    double w = 0.5 * kPi * z * z + phi;
    return -amplitude * (kPi * std::sin(w) + kPi * kPi * z * z * std::cos(w));
  };
  f.d3 = [=](double z) {
    double w = 0.5 * kPi * z * z + phi;
    return -amplitude * kPi * kPi * z *
           (3.0 * std::cos(w) - kPi * z * z * std::sin(w));
  };
  return f;
}

SmoothRealFn sine_solution(double phi, double amplitude) {
  SmoothRealFn f;
  f.value = [=](double z) { return amplitude * std::sin(0.5 * kPi * z * z + phi); };
  f.d1 = [=](double z) {
    return amplitude * kPi * z * std::cos(0.5 * kPi * z * z + phi);
  };
  f.d2 = [=](double z) {
    double w = 0.5 * kPi * z * z + phi;
    return amplitude * (kPi * std::cos(w) - kPi * kPi * z * z * std::sin(w));
  };
  f.d3 = [=](double z) {
    double w = 0.5 * kPi * z * z + phi;
    return -amplitude * kPi * kPi * z *
           (3.0 * std::sin(w) + kPi * z * z * std::cos(w));
  };
  return f;
}

SmoothRealFn fresnel_c_solution() {
  SmoothRealFn f;
  f.value = [](double z) { return fresnel_c(z); };
  f.d1 = [](double z) { return std::cos(0.5 * kPi * z * z); };
  f.d2 = [](double z) { return -kPi * z * std::sin(0.5 * kPi * z * z); };
  f.d3 = [](double z) {
    double w = 0.5 * kPi * z * z;
    return -kPi * (std::sin(w) + kPi * z * z * std::cos(w));
  };
  return f;
}

SmoothRealFn fresnel_s_solution() {
  SmoothRealFn f;
  f.value = [](double z) { return fresnel_s(z); };
  f.d1 = [](double z) { return std::sin(0.5 * kPi * z * z); };
  f.d2 = [](double z) { return kPi * z * std::cos(0.5 * kPi * z * z); };
  f.d3 = [](double z) {
    double w = 0.5 * kPi * z * z;
    return kPi * (std::cos(w) - kPi * z * z * std::sin(w));
  };
  return f;
}

SmoothRealFn partner_psi_solution(double phi, double b1, double b2) {
  // Psi = N / cos(w) with N = sqrt(z) M / 4,
  // M = b2 + 2 b1 z + 2 b1 Ct(z; phi), M' = 2 b1 (1 + cos(pi z^2 + 2 phi)),
  // M'' = -4 b1 pi z sin(pi z^2 + 2 phi).
  struct Parts {
    double n, n1, n2, c, s, z;
  };
  auto parts = [phi, b1, b2](double z) {
    require_positive(z, "partner_psi_solution");
    double w = 0.5 * kPi * z * z + phi;
    double c = std::cos(w);
    require_off_pole(z, c, "partner_psi_solution");
    double a2 = kPi * z * z + 2.0 * phi;
    double m = b2 + 2.0 * b1 * z + 2.0 * b1 * fresnel_shifted(z, phi);
    double m1 = 2.0 * b1 * (1.0 + std::cos(a2));
    double m2 = -4.0 * b1 * kPi * z * std::sin(a2);
    double rz = std::sqrt(z);
    double n = 0.25 * rz * m;
    double n1 = 0.125 * m / rz + 0.25 * rz * m1;
    double n2 = -0.0625 * m / (z * rz) + 0.25 * m1 / rz + 0.25 * rz * m2;
    return Parts{n, n1, n2, c, std::sin(w), z};
  };
  SmoothRealFn f;
  f.value = [parts](double z) {
    Parts p = parts(z);
    return p.n / p.c;
  };
  f.d1 = [parts](double z) {
    Parts p = parts(z);
    return p.n1 / p.c + p.n * kPi * p.z * p.s / (p.c * p.c);
  };
  f.d2 = [parts](double z) {
    Parts p = parts(z);
    double c2 = p.c * p.c;
    double pz = kPi * p.z;
    return p.n2 / p.c + 2.0 * p.n1 * pz * p.s / c2 + p.n * kPi * p.s / c2 +
           p.n * pz * pz / p.c + 2.0 * p.n * pz * pz * p.s * p.s / (c2 * p.c);
  };
  return f;
}

double ode_residual(EquationId eq, const SmoothRealFn& f, double z, double phi) {
  switch (eq) {
    case EquationId::ode3: {
      if (z == 0.0 || !std::isfinite(z))
        throw DomainError("ode_residual: ode3 is singular at z = 0");
      double w1 = eval(f.d1, z, "ode_residual", "d1");
      double w2 = eval(f.d2, z, "ode_residual", "d2");
      double w3 = eval(f.d3, z, "ode_residual", "d3");
      return std::abs(z * w3 - w2 + kPi * kPi * z * z * z * w1);
    }
    case EquationId::ode2: {
      if (z == 0.0 || !std::isfinite(z))
        throw DomainError("ode_residual: ode2 is singular at z = 0");
      double v = eval(f.value, z, "ode_residual", "value");
      double v1 = eval(f.d1, z, "ode_residual", "d1");
      double v2 = eval(f.d2, z, "ode_residual", "d2");
      return std::abs(v2 - v1 / z + kPi * kPi * z * z * v);
    }
    case EquationId::riccati: {
      if (z == 0.0 || !std::isfinite(z))
        throw DomainError("ode_residual: riccati form is singular at z = 0");
      double y = eval(f.value, z, "ode_residual", "value");
      double y1 = eval(f.d1, z, "ode_residual", "d1");
      return std::abs(y1 + y * y - y / z + kPi * kPi * z * z);
    }
    case EquationId::partner: {
      require_positive(z, "ode_residual (partner)");
      double delta = darboux_distortion(z, phi);
      double p = eval(f.value, z, "ode_residual", "value");
      double p1 = eval(f.d1, z, "ode_residual", "d1");
      double p2 = eval(f.d2, z, "ode_residual", "d2");
      return std::abs(p2 - p1 / z + (kPi * kPi * z * z + delta) * p);
    }
  }
  throw DomainError("ode_residual: unknown equation");
}

DistortionProfile sample_distortion(double phase, double z_min, double z_max,
                                    int count) {
  if (!std::isfinite(phase))
    throw DomainError("sample_distortion: non-finite phase");
  if (!std::isfinite(z_min) || !std::isfinite(z_max) || !(0.0 < z_min) ||
      !(z_min < z_max))
    throw DomainError("sample_distortion: need 0 < z_min < z_max");
  if (count < 2) throw DomainError("sample_distortion: need count >= 2");

  DistortionProfile profile;
  profile.phase = phase;
  double step = (z_max - z_min) / (count - 1);

  // Tan poles sit at z^2 = 2k + 1 - 2 phase/pi.  Collect those near the
  // range and block out one grid step on each side.
  double lo_sq = (z_min - step) * (z_min - step);
  double hi_sq = (z_max + step) * (z_max + step);
  double shift = 1.0 - 2.0 * phase / kPi;
  int k_lo = static_cast<int>(std::ceil((lo_sq - shift) / 2.0)) - 1;
  int k_hi = static_cast<int>(std::floor((hi_sq - shift) / 2.0)) + 1;
  for (int k = k_lo; k <= k_hi; ++k) {
    double zsq = 2.0 * k + shift;
    if (zsq <= 0.0) continue;
    double zp = std::sqrt(zsq);
    if (zp < z_min - step || zp > z_max + step) continue;
    DistortionProfile::Interval iv{std::max(zp - step, z_min),
                                   std::min(zp + step, z_max)};
    if (!profile.pole_breaks.empty() &&
        iv.lo <= profile.pole_breaks.back().hi) {
      profile.pole_breaks.back().hi = std::max(profile.pole_breaks.back().hi,
                                               iv.hi);
    } else if (iv.lo <= iv.hi) {
      profile.pole_breaks.push_back(iv);
    }
  }

  auto in_break = [&](double z) {
    for (const auto& iv : profile.pole_breaks)
      if (z > iv.lo && z < iv.hi) return true;
    return false;
  };

  profile.samples.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    double z = (i == count - 1) ? z_max : z_min + i * step;
    if (in_break(z)) continue;
    profile.samples.push_back({z, darboux_distortion(z, phase)});
  }
  return profile;
}

namespace {

ResidualReport finalize(EquationId eq, std::vector<ResidualReport::Sample> xs,
                        double tol) {
  ResidualReport r;
  r.equation = eq;
  r.samples = std::move(xs);
  r.tolerance = tol;
  r.max_residual = 0.0;
  for (const auto& s : r.samples)
    r.max_residual = std::max(r.max_residual, s.residual);
  r.pass = r.max_residual <= r.tolerance;
  return r;
}

}  // namespace

std::vector<ResidualReport> run_residual_suite() {
  std::vector<ResidualReport> out;

  // Fresnel integrals in the third-order equation.
  {
    std::vector<ResidualReport::Sample> xs;
    for (const auto& sol : {fresnel_c_solution(), fresnel_s_solution()}) {
      for (int i = 0; i < 25; ++i) {
        double z = 0.2 + i * (3.0 - 0.2) / 24.0;
        xs.push_back({z, ode_residual(EquationId::ode3, sol, z)});
      }
    }
    out.push_back(finalize(EquationId::ode3, std::move(xs), 1e-10));
  }

  // Cosine/sine modes and a mixed combination in the second-order form.
  {
    std::vector<ResidualReport::Sample> xs;
    SmoothRealFn cosf = cosine_solution(0.0);
    SmoothRealFn sinf = sine_solution(0.0);
    SmoothRealFn mixed;
    mixed.value = [=](double z) { return 0.7 * cosf.value(z) - 1.3 * sinf.value(z); };
    mixed.d1 = [=](double z) { return 0.7 * cosf.d1(z) - 1.3 * sinf.d1(z); };
    mixed.d2 = [=](double z) { return 0.7 * cosf.d2(z) - 1.3 * sinf.d2(z); };
    for (const auto& sol : {cosf, sinf, mixed}) {
      for (int i = 0; i < 25; ++i) {
        double z = 0.2 + i * (3.0 - 0.2) / 24.0;
        xs.push_back({z, ode_residual(EquationId::ode2, sol, z)});
      }
    }
    out.push_back(finalize(EquationId::ode2, std::move(xs), 1e-11));
  }

  // General Riccati solution over a theta grid, analytic derivative.
  {
    std::vector<ResidualReport::Sample> xs;
    const Complex thetas[] = {{0.0, 0.0}, {1.0, 0.0},  {-1.0, 0.0},
                              {0.0, 1.0}, {0.0, -1.0}, {2.0, 1.0},
                              {0.5, 0.5}, {-0.3, 0.7}, {1e12, 0.0}};
    for (const Complex& theta : thetas) {
      for (int i = 0; i < 20; ++i) {
        double z = 0.1 + i * (3.0 - 0.1) / 19.0;
        Complex e = std::exp(Complex{0.0, kPi * z * z});
        // Stay clear of the movable poles: residual roundoff scales with
        // |y|^2, so a generous margin keeps it near machine level.
        if (std::abs(theta) < 1e10 && std::abs(theta * e + 1.0) < 0.1)
          continue;
        DifferentiableComplexFn y{
            [theta](double t) { return riccati_general(t, theta); },
            [theta](double t) { return riccati_general_derivative(t, theta); }};
        xs.push_back({z, riccati_residual(y, z)});
      }
    }
    out.push_back(finalize(EquationId::riccati, std::move(xs), 1e-10));
  }

  // Partner solutions across the five special phases.
  {
    std::vector<ResidualReport::Sample> xs;
    const double phis[] = {0.0, 0.25 * kPi, -0.25 * kPi, 0.5 * kPi,
                           -0.5 * kPi};
    const double coeffs[][2] = {{2.0, 0.0}, {0.0, 1.0}, {1.0, 0.5}};
    for (double phi : phis) {
      for (const auto& bc : coeffs) {
        SmoothRealFn psi = partner_psi_solution(phi, bc[0], bc[1]);
        for (int i = 0; i < 20; ++i) {
          double z = 0.15 + i * (2.9 - 0.15) / 19.0;
          if (std::abs(phase_cos(z, phi)) < 0.1) continue;
          xs.push_back({z, ode_residual(EquationId::partner, psi, z, phi)});
        }
      }
    }
    out.push_back(finalize(EquationId::partner, std::move(xs), 1e-8));
  }

  return out;
}

const char* equation_name(EquationId eq) {
  switch (eq) {
    case EquationId::ode3:
      return "ode3";
    case EquationId::ode2:
      return "ode2";
    case EquationId::riccati:
      return "riccati";
    case EquationId::partner:
      return "partner";
  }
  return "unknown";
}

}  // namespace cornu
