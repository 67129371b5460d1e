#include "casimir/closed_form.hpp"

#include <cmath>
#include <numbers>

namespace casimir {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kPi2Over6 = kPi * kPi / 6.0;

void check_interval(const IntervalSpec& spec) {
  if (!(spec.a > 0.0)) fail(ErrorCode::DomainError, "interval length must be > 0");
  if (spec.left == BoundaryKind::Kirchhoff || spec.right == BoundaryKind::Kirchhoff)
    fail(ErrorCode::IllegalValence, "interval ends must be pistons");
}

double dilog_series(double x) {
  // |x| <= 1/2: plain power series, terms below 1e-17 by r ~ 55
  double sum = 0.0, power = 1.0;
  for (int r = 1; r < 80; ++r) {
    power *= x;
    double term = power / (static_cast<double>(r) * r);
    sum += term;
    if (std::abs(term) < 1e-17) break;
  }
  return sum;
}

}  // namespace

double interval_energy(const IntervalSpec& spec) {
  check_interval(spec);
  bool mixed = spec.left != spec.right;
  return mixed ? kPi / (48.0 * spec.a) : -kPi / (24.0 * spec.a);
}

double interval_force(const IntervalSpec& spec) {
  check_interval(spec);
  bool mixed = spec.left != spec.right;
  double a2 = spec.a * spec.a;
  return mixed ? kPi / (48.0 * a2) : -kPi / (24.0 * a2);
}

double star_energy_equal(int num_bonds, double a) {
  return (num_bonds - 3) * kPi / (48.0 * a);
}

double star_collective_force_equal(int num_bonds, double a) {
  return (num_bonds - 3) * kPi / (48.0 * a * a);
}

double star_per_piston_force_equal(int num_bonds, double a) {
  return star_collective_force_equal(num_bonds, a) / num_bonds;
}

double dirichlet_star_energy_equal(int num_bonds, double a) {
  return (3 - 2 * num_bonds) * kPi / (48.0 * a);
}

double dirichlet_star_collective_force_equal(int num_bonds, double a) {
  return (3 - 2 * num_bonds) * kPi / (48.0 * a * a);
}

double dirichlet_star_per_piston_force_equal(int num_bonds, double a) {
  return dirichlet_star_collective_force_equal(num_bonds, a) / num_bonds;
}

double dilog(double x) {
  if (!(x >= -1.0 && x <= 1.0))
    fail(ErrorCode::DomainError, "dilog requires |x| <= 1");
  if (x == 1.0) return kPi2Over6;
  if (x == -1.0) return -kPi * kPi / 12.0;
  if (x > 0.5) {
    // reflection: Li2(x) + Li2(1-x) = pi^2/6 - ln(x) ln(1-x)
    return kPi2Over6 - std::log(x) * std::log1p(-x) - dilog_series(1.0 - x);
  }
  if (x < -0.5) {
    // Landen: Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2, argument in (1/3, 1/2]
    double u = x / (x - 1.0);
    double l = std::log1p(-x);
    return -dilog_series(u) - 0.5 * l * l;
  }
  return dilog_series(x);
}

double dilog_unit_circle_real(double theta) {
  theta = std::fmod(theta, 2.0 * kPi);
  if (theta < 0) theta += 2.0 * kPi;
  return kPi2Over6 - theta * (2.0 * kPi - theta) / 4.0;
}

double shortest_energy_expansion(int num_bonds, double inv_length_sum) {
  if (num_bonds < 1) fail(ErrorCode::DomainError, "B must be >= 1");
  return (kPi / 48.0) *
         (1.0 - 24.0 * std::log(2.0) / (kPi * kPi * num_bonds)) *
         inv_length_sum;
}

}  // namespace casimir
