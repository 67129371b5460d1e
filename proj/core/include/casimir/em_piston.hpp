#pragma once

#include <functional>

namespace casimir {

/// Catalan's constant, full double precision.
inline constexpr double kCatalan = 0.915965594177219015;

/// Electromagnetic piston in a rectangular shaft of square cross section
/// b x b, piston a from the closed end. The closed-form pressures hold in the
/// regime a << b; callers get a regime flag once a/b exceeds 0.2.
struct PistonGeometry {
  double a = 0.0;
  double b = 0.0;
};

/// Rayleigh-Dowker relation: the energy of a box whose lid is infinitely
/// permeable (the rest perfectly conducting) in terms of all-conducting
/// energies, Ebar_a = E(2a) - E(a).
double rayleigh_dowker(const std::function<double(double)>& energy, double a);

/// Force version, obtained by differentiating with respect to a (not 2a):
/// Fbar(a) = 2 F(2a) - F(a).
double rayleigh_dowker_force(const std::function<double(double)>& force,
                             double a);

/// Lukosz pressure between conducting plates at separation a (attractive):
/// -pi^2 / (240 a^4).
double conducting_pressure_inside(double a);

/// Boyer pressure, conductor against infinitely permeable lid (repulsive):
/// +7 pi^2 / (1920 a^4); exactly -7/8 of the conducting value.
double permeable_pressure_inside(double a);

/// Long-shaft pressure on a transverse plate, +G / (24 b^4) with Catalan's
/// constant G; independent of the shaft length.
double shaft_pressure(double b);

struct PistonForce {
  double force = 0.0;     // positive = repulsive (piston pushed outward)
  bool in_regime = true;  // false once a/b > 0.2
};

/// Net force on the permeable piston: area times inside pressure minus the
/// shaft pressure pushing back, F = b^2 (Pbar_a - P_shaft(b)).
PistonForce piston_net_force(const PistonGeometry& geom);

}  // namespace casimir
