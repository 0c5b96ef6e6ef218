#include "cornu/riccati.hpp"

#include <cmath>
#include <numbers>

namespace cornu {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kThetaInfinity = 1e10;
constexpr double kDenominatorGuard = 1e-13;
constexpr double kTanGuard = 1e-10;

const Complex kI{0.0, 1.0};

void require_finite(double z, const char* who) {
  if (!std::isfinite(z)) throw DomainError(std::string(who) + ": non-finite z");
}

}  // namespace

double default_scale(double a, double b) {
  if (a == 0.0 && b == 0.0) return 1.0;
  return 1.0 / std::hypot(a, b);
}

DeformationParameter DeformationParameter::from_theta(double a, double b) {
  return {a, b, default_scale(a, b), std::nullopt};
}

DeformationParameter DeformationParameter::from_theta(Complex theta) {
  return from_theta(theta.real(), theta.imag());
}

DeformationParameter DeformationParameter::from_theta_scaled(double a, double b,
                                                             double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw DomainError("DeformationParameter: scale must be positive");
  return {a, b, scale, std::nullopt};
}

DeformationParameter DeformationParameter::from_phase(double phi, double r) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw DomainError("DeformationParameter: modulus must be positive");
  return {std::cos(phi) / r, std::sin(phi) / r, r, phi};
}

Complex riccati_particular(double z) {
  require_finite(z, "riccati_particular");
  return {0.0, kPi * z};
}

Complex integrating_factor(double z) {
  require_finite(z, "integrating_factor");
  return z * std::exp(Complex{0.0, -kPi * z * z});
}

Complex integrating_factor_integral(double z) {
  require_finite(z, "integrating_factor_integral");
  return (1.0 - std::exp(Complex{0.0, -kPi * z * z})) / (2.0 * kPi * kI);
}

Complex linear_u_solution(double z, Complex gamma) {
  require_finite(z, "linear_u_solution");
  if (z == 0.0)
    throw SingularityError("linear_u_solution: mu(0) = 0, u singular at 0");
  return (gamma + integrating_factor_integral(z)) / integrating_factor(z);
}

Complex linear_u_derivative(double z, Complex gamma) {
  if (z == 0.0)
    throw SingularityError("linear_u_derivative: singular at z = 0");
  Complex u = linear_u_solution(z, gamma);
  return 1.0 - u * Complex{1.0 / z, -2.0 * kPi * z};
}

Complex theta_from_gamma(Complex gamma) { return -2.0 * kPi * kI * gamma - 1.0; }

Complex gamma_from_theta(Complex theta) { return kI * (theta + 1.0) / (2.0 * kPi); }

Complex riccati_general(double z, Complex theta) {
  require_finite(z, "riccati_general");
  if (std::abs(theta) >= kThetaInfinity) return {0.0, kPi * z};
  Complex e = std::exp(Complex{0.0, kPi * z * z});
  Complex den = theta * e + 1.0;
  if (std::abs(den) < kDenominatorGuard)
    throw PoleError("riccati_general: theta e^{i pi z^2} + 1 vanishes", z);
  return kI * kPi * z * (theta * e - 1.0) / den;
}

Complex riccati_general_derivative(double z, Complex theta) {
  require_finite(z, "riccati_general_derivative");
  if (std::abs(theta) >= kThetaInfinity) return {0.0, kPi};
  Complex e = std::exp(Complex{0.0, kPi * z * z});
  Complex den = theta * e + 1.0;
  if (std::abs(den) < kDenominatorGuard)
    throw PoleError("riccati_general_derivative: pole of the solution", z);
  return kI * kPi * (theta * e - 1.0) / den -
         4.0 * kPi * kPi * z * z * theta * e / (den * den);
}

Complex riccati_general_via_u(double z, Complex gamma) {
  Complex u = linear_u_solution(z, gamma);
  if (std::abs(u) < kDenominatorGuard)
    throw PoleError("riccati_general_via_u: u vanishes", z);
  return riccati_particular(z) + 1.0 / u;
}

Complex riccati_general_trig(double z, double phi) {
  require_finite(z, "riccati_general_trig");
  double w = 0.5 * kPi * z * z + phi;
  double c = std::cos(w);
  if (std::abs(c) < kTanGuard)
    throw PoleError("riccati_general_trig: tan pole", z);
  return {-kPi * z * std::sin(w) / c, 0.0};
}

Complex v_general(double z, Complex theta, double amplitude) {
  require_finite(z, "v_general");
  if (!(amplitude > 0.0))
    throw DomainError("v_general: amplitude must be positive");
  Complex e = std::exp(Complex{0.0, 0.5 * kPi * z * z});
  return amplitude * (1.0 / e + theta * e);
}

Complex v_general_derivative(double z, Complex theta, double amplitude) {
  require_finite(z, "v_general_derivative");
  if (!(amplitude > 0.0))
    throw DomainError("v_general_derivative: amplitude must be positive");
  Complex e = std::exp(Complex{0.0, 0.5 * kPi * z * z});
  return amplitude * kI * kPi * z * (theta * e - 1.0 / e);
}

double riccati_residual(const DifferentiableComplexFn& y, double z) {
  if (z == 0.0) throw SingularityError("riccati_residual: z = 0");
  if (!y.value) throw DomainError("riccati_residual: missing value function");
  Complex yz = y.value(z);
  Complex dy;
  if (y.derivative) {
    dy = y.derivative(z);
  } else {
    double h = std::max(1e-6, 1e-6 * std::abs(z));
    dy = (y.value(z + h) - y.value(z - h)) / (2.0 * h);
  }
  Complex r = dy + yz * yz - yz / z + kPi * kPi * z * z;
  return std::abs(r);
}

}  // namespace cornu
