#pragma once

#include <vector>

#include "cornu/riccati.hpp"

namespace cornu {

// One sample of a deformed spiral: the curve parameter z (arclength for
// the standard spiral, where the speed is 1), Argand-plane coordinates,
// and x^2 + y^2.
struct SpiralPoint {
  double arclength;
  double x;
  double y;
  double modulus_sq;
};

struct SampledCurve {
  DeformationParameter parameter;
  std::vector<SpiralPoint> points;
};

enum class FocusSign { positive, negative };

struct PlanePoint {
  double x;
  double y;
};

// Point of the deformed Cornu spiral at parameter z:
//   x = R [(a + 1) C(z) - b S(z)],  y = R [b C(z) + (a - 1) S(z)],
// theta = a + i b.  theta = 0 gives the reflection (C, -S) of the
// standard spiral; large real theta approaches the standard (C, S).
SpiralPoint deformed_point(double z, const DeformationParameter& p);

// Uniform sampling of the deformed spiral on [z_min, z_max].
// count >= 2 and z_min < z_max required, else DomainError.
SampledCurve sample_spiral(const DeformationParameter& p, double z_min,
                           double z_max, int count);

// Signed curvature at z from the exact derivatives of the parametrization:
//   kappa = pi z (a^2 + b^2 - 1) /
//           (R [a^2 + b^2 + 1 + 2 a cos(pi z^2) - 2 b sin(pi z^2)]^{3/2}).
// The standard spiral limit gives kappa = pi z (so radius * arclength =
// 1/pi); theta = 0 gives -pi z.  Throws DegenerateCurveError where the
// speed falls under 1e-12 (the |theta| = 1 curves collapse to lines with
// cusps).
double curvature(const DeformationParameter& p, double z);

// Limit point of the spiral as z -> +inf (positive) or z -> -inf
// (negative):  +/- R ((a + 1 - b) / 2, (a + b - 1) / 2).
// The spiral approaches it slowly, at rate ~ 1/(pi z).
PlanePoint asymptotic_focus(const DeformationParameter& p, FocusSign sign);

}  // namespace cornu
