#include "cornu/spiral.hpp"

#include <cmath>
#include <numbers>

#include "cornu/fresnel.hpp"

namespace cornu {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

SpiralPoint deformed_point(double z, const DeformationParameter& p) {
  FresnelPair f = fresnel_cs(z);
  double x = p.scale * ((p.a + 1.0) * f.c - p.b * f.s);
  double y = p.scale * (p.b * f.c + (p.a - 1.0) * f.s);
  return {z, x, y, x * x + y * y};
}

SampledCurve sample_spiral(const DeformationParameter& p, double z_min,
                           double z_max, int count) {
  if (!std::isfinite(z_min) || !std::isfinite(z_max) || !(z_min < z_max))
    throw DomainError("sample_spiral: need finite z_min < z_max");
  if (count < 2) throw DomainError("sample_spiral: need count >= 2");
  SampledCurve curve;
  curve.parameter = p;
  curve.points.reserve(static_cast<size_t>(count));
  double step = (z_max - z_min) / (count - 1);
  for (int i = 0; i < count; ++i) {
    double z = (i == count - 1) ? z_max : z_min + i * step;
    curve.points.push_back(deformed_point(z, p));
  }
  return curve;
}

double curvature(const DeformationParameter& p, double z) {
  if (!std::isfinite(z)) throw DomainError("curvature: non-finite z");
  double w = 0.5 * kPi * z * z;
  double cw = std::cos(w), sw = std::sin(w);
  // Exact derivatives of the parametrization: the integrands replace the
  // integrals, so no Fresnel evaluation is needed.
  double xd = p.scale * ((p.a + 1.0) * cw - p.b * sw);
  double yd = p.scale * (p.b * cw + (p.a - 1.0) * sw);
  double xdd = p.scale * kPi * z * (-(p.a + 1.0) * sw - p.b * cw);
  double ydd = p.scale * kPi * z * (-p.b * sw + (p.a - 1.0) * cw);
  double speed_sq = xd * xd + yd * yd;
  double speed = std::sqrt(speed_sq);
  if (!(speed > 1e-12))
    throw DegenerateCurveError("curvature: vanishing speed");
  return (xd * ydd - yd * xdd) / (speed_sq * speed);
}

PlanePoint asymptotic_focus(const DeformationParameter& p, FocusSign sign) {
  double s = (sign == FocusSign::positive) ? 1.0 : -1.0;
  return {s * p.scale * 0.5 * (p.a + 1.0 - p.b),
          s * p.scale * 0.5 * (p.a + p.b - 1.0)};
}

}  // namespace cornu
