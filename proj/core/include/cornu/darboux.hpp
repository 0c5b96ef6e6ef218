#pragma once

#include <functional>
#include <vector>

#include "cornu/errors.hpp"

namespace cornu {

// Real function of a real variable carrying analytic derivatives.  d2 and
// d3 may be left empty when the consumer only needs lower orders; an
// operation that needs a missing order throws DomainError.
struct SmoothRealFn {
  std::function<double(double)> value;
  std::function<double(double)> d1{};
  std::function<double(double)> d2{};
  std::function<double(double)> d3{};
};

// Central finite-difference adapter (step 1e-5 scaled by |z|) filling all
// derivative slots from the value alone.  Test cross-checks only: third
// order differences cannot reach the 1e-10 residual tolerances.
SmoothRealFn finite_difference_adapter(std::function<double(double)> f);

// Ladder operators of the factorized oscillator-type equation, with the
// phase-shifted superpotential T(z) = pi sqrt(z) tan(pi z^2/2 + phi):
//   A+ f = f'/sqrt(z) + T f
//   A- g = (g/sqrt(z))' - T g = g'/sqrt(z) - g/(2 z^{3/2}) - T g
// A+ annihilates cos(pi z^2/2 + phi), A- annihilates sqrt(z) sec(pi
// z^2/2 + phi).  Require z > 0 (DomainError) and |cos(pi z^2/2 + phi)|
// >= 1e-10 (PoleError); f needs d1.
double apply_A_plus(const SmoothRealFn& f, double z, double phi);
double apply_A_minus(const SmoothRealFn& g, double z, double phi);

// Composites, expanded analytically (the inner application's derivative
// is closed-form, not differenced); need d2.  A-A+ annihilates every
// solution of v'' - v'/z + pi^2 z^2 v = 0; A+A- annihilates the partner
// solutions below.
double apply_A_minus_A_plus(const SmoothRealFn& f, double z, double phi);
double apply_A_plus_A_minus(const SmoothRealFn& g, double z, double phi);

// Distortion term produced by swapping the factorization order:
//   Delta(z; phi) = -2 pi^2 z^2 + 3/(4 z^2)
//                   - pi tan(pi z^2/2 + phi) - 2 pi^2 z^2 tan^2(...).
// At tan zeros this is exactly the parabolic envelope -2 pi^2 z^2 +
// 3/(4 z^2).  z > 0 required; pole guard as above.
double darboux_distortion(double z, double phi);

// Simplified closed forms of the distortion at the five special phases.
enum class DistortionPhase { phi0, plus_pi4, minus_pi4, plus_pi2, minus_pi2 };

double distortion_phase_value(DistortionPhase which);

// Closed form for the given phase; equals darboux_distortion(z, phase)
// wherever both are defined.  The denominators cos(pi z^2) +- 1 and
// sin(pi z^2) -+ 1 get a 1e-12 guard band (PoleError).
double darboux_distortion_special(double z, DistortionPhase which);

// Partner-equation solutions.  The homogeneous one,
//   Phi(z; phi) = b1 cos(pi z^2/2 + phi),
// spans the kernel of A+.  The general one,
//   Psi(z; phi) = (sqrt(z)/4) (b2 + 2 b1 z + 2 b1 Ct(z; phi))
//                 / cos(pi z^2/2 + phi),
// with Ct the shifted Fresnel integral, solves the distorted equation
//   Psi'' - Psi'/z + (pi^2 z^2 + Delta(z; phi)) Psi = 0.
// For (b1, b2) = (2, 0) it reduces to sqrt(z)(z + Ct)/cos(...).
double partner_phi(double z, double phi, double amplitude);
double partner_psi(double z, double phi, double b1, double b2);

// Canonical solutions bundled with analytic derivatives, for operator
// and residual work.
SmoothRealFn cosine_solution(double phi, double amplitude = 1.0);
SmoothRealFn sine_solution(double phi, double amplitude = 1.0);
SmoothRealFn fresnel_c_solution();
SmoothRealFn fresnel_s_solution();
SmoothRealFn partner_psi_solution(double phi, double b1, double b2);

// Equations covered by the residual engine:
//   ode3:    z w''' - w'' + pi^2 z^3 w'        (Fresnel integrals solve it)
//   ode2:    v'' - v'/z + pi^2 z^2 v
//   riccati: y' + y^2 - y/z + pi^2 z^2         (real tan-form candidates)
//   partner: P'' - P'/z + (pi^2 z^2 + Delta(z; phi)) P
enum class EquationId { ode3, ode2, riccati, partner };

// |residual| of the candidate at z.  phi enters only the partner
// equation's distortion term.  Needs d1..d3 for ode3, d1..d2 for ode2 and
// partner, d1 for riccati.  z = 0 (or z < 0 for partner) → DomainError.
double ode_residual(EquationId eq, const SmoothRealFn& f, double z,
                    double phi = 0.0);

// Distortion profile sampled on a uniform grid, with samples adjacent to
// the tan poles dropped and recorded as break intervals so plots leave a
// gap instead of a spurious connecting segment.
struct DistortionProfile {
  struct Sample {
    double z;
    double delta;
  };
  struct Interval {
    double lo;
    double hi;
  };
  double phase = 0.0;
  std::vector<Sample> samples;
  std::vector<Interval> pole_breaks;
};

// Samples Delta(z; phase) at `count` uniform points of [z_min, z_max].
// Requires 0 < z_min < z_max and count >= 2 (DomainError).  Pole breaks
// span one grid step on each side of every tan pole in range.
DistortionProfile sample_distortion(double phase, double z_min, double z_max,
                                    int count);

// Verification record for one equation: sampled |residual| values
// against a fixed tolerance.
struct ResidualReport {
  struct Sample {
    double z;
    double residual;
  };
  EquationId equation;
  std::vector<Sample> samples;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Builds the four standard reports: Fresnel integrals in ode3, the
// cosine/sine modes in ode2, the general solution over a theta grid in
// the Riccati equation, and the partner solutions across the five
// special phases.
std::vector<ResidualReport> run_residual_suite();

const char* equation_name(EquationId eq);

}  // namespace cornu
