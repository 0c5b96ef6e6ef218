#pragma once

#include "cornu/errors.hpp"

namespace cornu {

// Values of the Fresnel integrals
//   C(z) = int_0^z cos(pi s^2 / 2) ds,   S(z) = int_0^z sin(pi s^2 / 2) ds
// in the normalized convention (both tend to 1/2 as z -> +inf).
struct FresnelPair {
  double c;
  double s;
};

// Evaluates C(z) and S(z) together.  Accurate to ~1 ulp of the 1e-12
// contract over |z| <= 60; both functions are odd and bounded by 0.8.
// Throws DomainError for non-finite z.
FresnelPair fresnel_cs(double z);

double fresnel_c(double z);
double fresnel_s(double z);

// Shifted Fresnel integral int_0^z cos(pi s^2 + 2 phi) ds.  Reduces to the
// plain integrals via the angle-sum identity:
//   [cos(2 phi) C(sqrt(2) z) - sin(2 phi) S(sqrt(2) z)] / sqrt(2).
// Throws DomainError for non-finite z or phi.
double fresnel_shifted(double z, double phi);

// Integrands understood by the quadrature oracle.
enum class IntegrandId {
  cos_half_pi_s2,      // cos(pi s^2 / 2)
  sin_half_pi_s2,      // sin(pi s^2 / 2)
  cos_pi_s2_plus_2phi  // cos(pi s^2 + 2 phi), uses QuadratureSpec::phase
};

struct QuadratureSpec {
  IntegrandId integrand = IntegrandId::cos_half_pi_s2;
  double phase = 0.0;
  double upper_limit = 0.0;
  double abs_tol = 1e-12;
};

// Direct adaptive Simpson integration of the requested integrand over
// [0, upper_limit].  Deliberately shares no code or tables with
// fresnel_cs so it can serve as an independent cross-check.
// Throws DomainError for invalid specs (abs_tol <= 0, non-finite limit)
// and ConvergenceError (with best estimate) if the refinement budget is
// exhausted before the error estimate falls under abs_tol.
double quadrature_oracle(const QuadratureSpec& spec);

}  // namespace cornu
