#include "casimir/em_piston.hpp"

#include <cmath>
#include <numbers>

#include "casimir/errors.hpp"

namespace casimir {

namespace {
constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) fail(ErrorCode::DomainError, std::string(what) + " must be > 0");
}
}  // namespace

double rayleigh_dowker(const std::function<double(double)>& energy, double a) {
  require_positive(a, "a");
  return energy(2.0 * a) - energy(a);
}

double rayleigh_dowker_force(const std::function<double(double)>& force,
                             double a) {
  require_positive(a, "a");
  return 2.0 * force(2.0 * a) - force(a);
}

double conducting_pressure_inside(double a) {
  require_positive(a, "a");
  return -kPi2 / (240.0 * a * a * a * a);
}

double permeable_pressure_inside(double a) {
  // -7/8 of the conducting pressure, exact by construction (7/8 is a dyadic)
  return -(7.0 / 8.0) * conducting_pressure_inside(a);
}

double shaft_pressure(double b) {
  require_positive(b, "b");
  return kCatalan / (24.0 * b * b * b * b);
}

PistonForce piston_net_force(const PistonGeometry& geom) {
  require_positive(geom.a, "a");
  require_positive(geom.b, "b");
  PistonForce out;
  out.force = geom.b * geom.b *
              (permeable_pressure_inside(geom.a) - shaft_pressure(geom.b));
  out.in_regime = geom.a / geom.b <= 0.2;
  return out;
}

}  // namespace casimir
