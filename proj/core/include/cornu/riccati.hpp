#pragma once

#include <complex>
#include <functional>
#include <optional>

#include "cornu/errors.hpp"

namespace cornu {

using Complex = std::complex<double>;

// Deformation parameter theta = a + i b of the general Riccati solution
// family, plus the plotting scale R applied to the deformed spiral.
// Default R = 1 / sqrt(a^2 + b^2), except theta = 0 where R = 1 (the one
// curve drawn unscaled).  The trigonometric labeling theta = (1/R) e^{i
// phi} is kept in `phase` when the parameter is built from an angle.
struct DeformationParameter {
  double a = 1.0;
  double b = 0.0;
  double scale = 1.0;
  std::optional<double> phase{};

  Complex theta() const { return {a, b}; }

  static DeformationParameter from_theta(double a, double b);
  static DeformationParameter from_theta(Complex theta);
  // Explicit scale override (figure captions pin R in a few places).
  static DeformationParameter from_theta_scaled(double a, double b,
                                                double scale);
  // theta = (1/r) e^{i phi}; default r = 1 gives the unimodular slice.
  static DeformationParameter from_phase(double phi, double r = 1.0);
};

// Default plotting scale for theta = a + i b.
double default_scale(double a, double b);

// Particular solution y_p(z) = i pi z of the Riccati equation
//   y' + y^2 - y / z + pi^2 z^2 = 0.
Complex riccati_particular(double z);

// Integrating factor mu(z) = z e^{-i pi z^2} of the linearized equation,
// and its exact antiderivative int_0^z mu = (1 - e^{-i pi z^2})/(2 i pi).
Complex integrating_factor(double z);
Complex integrating_factor_integral(double z);

// Solution u(z) = (gamma + int_0^z mu) / mu(z) of the linear equation
//   u' + (1/z - 2 i pi z) u = 1
// reached from the substitution y = y_p + 1/u.  Exact derivative
// u' = 1 - u (1/z - 2 i pi z).  Throws SingularityError at z = 0 where
// mu vanishes.
Complex linear_u_solution(double z, Complex gamma);
Complex linear_u_derivative(double z, Complex gamma);

// Maps between the integration constant gamma of the u-equation and the
// deformation parameter: theta = -2 i pi gamma - 1, gamma = i (theta +
// 1) / (2 pi).
Complex theta_from_gamma(Complex gamma);
Complex gamma_from_theta(Complex theta);

// General solution of the Riccati equation,
//   y(z; theta) = i pi z (theta E - 1) / (theta E + 1),  E = e^{i pi z^2}.
// Limits: theta = 0 gives -i pi z; |theta| >= 1e10 is treated as the
// theta -> infinity limit and returns i pi z exactly; theta = 1 gives
// -pi z tan(pi z^2/2) and theta = -1 gives pi z cot(pi z^2/2).
// Throws PoleError when |theta E + 1| < 1e-13 (movable poles).
Complex riccati_general(double z, Complex theta);

// d/dz of riccati_general, in closed form:
//   y' = i pi (theta E - 1)/(theta E + 1)
//        - 4 pi^2 z^2 theta E / (theta E + 1)^2.
Complex riccati_general_derivative(double z, Complex theta);

// General solution rebuilt through the linear substitution, y = y_p +
// 1/u.  Agrees with riccati_general at theta_from_gamma(gamma).
// Throws SingularityError at z = 0, PoleError where u vanishes.
Complex riccati_general_via_u(double z, Complex gamma);

// Real tan form y(z; phi) = -pi z tan(pi z^2/2 + phi), returned with
// zero imaginary part.  A one-parameter family in its own right; it
// coincides with riccati_general at theta = 1 (phi = 0) and theta = -1
// (phi = pi/2).  Throws PoleError inside the guard band
// |cos(pi z^2/2 + phi)| < 1e-10.
Complex riccati_general_trig(double z, double phi);

// Solution v(z) = R (e^{-i pi z^2/2} + theta e^{i pi z^2/2}) of the
// second-order equation v'' - v'/z + pi^2 z^2 v = 0, and its exact
// derivative.  Its logarithmic derivative recovers the Riccati solution:
// v'/v = y wherever v != 0.  amplitude R > 0 required.
Complex v_general(double z, Complex theta, double amplitude = 1.0);
Complex v_general_derivative(double z, Complex theta, double amplitude = 1.0);

// Complex-valued function of a real variable with an optional exact
// derivative.  When `derivative` is empty, a central difference with
// step h = max(1e-6, 1e-6 |z|) is used.
struct DifferentiableComplexFn {
  std::function<Complex(double)> value;
  std::function<Complex(double)> derivative{};
};

// Residual |y' + y^2 - y/z + pi^2 z^2| of a candidate solution at z.
// Throws SingularityError at z = 0.
double riccati_residual(const DifferentiableComplexFn& y, double z);

}  // namespace cornu
