#pragma once

#include <Eigen/Core>

#include <string>
#include <variant>

#include "apollo/error.hpp"
#include "apollo/field.hpp"
#include "apollo/scalar.hpp"

namespace apollo {

/// Disk symbol (xr, yr, beta, gamma): reduced center coordinates x/r, y/r,
/// curvature 1/r and co-curvature (curvature of the image under inversion in
/// the unit circle). Bounded disks have beta > 0, the outer disk beta < 0,
/// half-planes beta = 0 with (xr, yr) the unit normal pointing into the region.
template <class S>
using DiskSymbol = Eigen::Matrix<S, 4, 1>;

template <class S>
using Point = Eigen::Matrix<S, 2, 1>;

enum SymbolIndex : int { kXr = 0, kYr = 1, kBeta = 2, kGamma = 3 };

template <class S>
struct EuclideanDisk {
  Point<S> center;
  S r;  // negative for the unbounded complement of a circle
};

/// Region {p : p . normal >= offset}.
template <class S>
struct HalfPlane {
  Point<S> normal;
  S offset;
};

template <class S>
using Region = std::variant<EuclideanDisk<S>, HalfPlane<S>>;

template <class S>
DiskSymbol<S> make_symbol(const S& xr, const S& yr, const S& beta, const S& gamma) {
  DiskSymbol<S> d;
  d << xr, yr, beta, gamma;
  return d;
}

template <class S>
Point<S> make_point(const S& x, const S& y) {
  Point<S> p;
  p << x, y;
  return p;
}

/// -xr1 xr2 - yr1 yr2 + (beta1 gamma2 + gamma1 beta2) / 2
template <class S>
S inner(const DiskSymbol<S>& a, const DiskSymbol<S>& b) {
  return -(a(kXr) * b(kXr)) - a(kYr) * b(kYr) + half<S>(a(kBeta) * b(kGamma) + a(kGamma) * b(kBeta));
}

template <class S>
bool norm_ok(const DiskSymbol<S>& d, double tol = default_tolerance_v<S>) {
  return is_zero_within(S(inner(d, d) + S(1)), tol);
}

/// External tangency: <a, b> = 1.
template <class S>
bool tangent(const DiskSymbol<S>& a, const DiskSymbol<S>& b, double tol = default_tolerance_v<S>) {
  return is_zero_within(S(inner(a, b) - S(1)), tol);
}

template <class S>
DiskSymbol<S> from_center_radius(const EuclideanDisk<S>& e) {
  if (e.r == S(0)) throw Error(ErrorKind::ZeroRadius, "disk with zero radius");
  const S beta = S(1) / e.r;
  const S xr = e.center(0) * beta;
  const S yr = e.center(1) * beta;
  const S gamma = (xr * xr + yr * yr - S(1)) * e.r;
  return make_symbol(xr, yr, beta, gamma);
}

template <class S>
DiskSymbol<S> from_line(const HalfPlane<S>& h, double tol = default_tolerance_v<S>) {
  const S n2 = h.normal(0) * h.normal(0) + h.normal(1) * h.normal(1);
  if (!is_zero_within(S(n2 - S(1)), tol)) throw Error(ErrorKind::NonUnitNormal, "half-plane normal is not unit");
  return make_symbol(h.normal(0), h.normal(1), S(0), S(2) * h.offset);
}

template <class S>
Region<S> to_euclidean(const DiskSymbol<S>& d, double tol = default_tolerance_v<S>) {
  if (!norm_ok(d, tol)) throw Error(ErrorKind::InvalidSymbol, "symbol violates -xr^2 - yr^2 + beta gamma = -1");
  if (d(kBeta) == S(0)) return HalfPlane<S>{make_point(d(kXr), d(kYr)), half<S>(d(kGamma))};
  const S r = S(1) / d(kBeta);
  return EuclideanDisk<S>{make_point(S(d(kXr) * r), S(d(kYr) * r)), r};
}

/// Swaps curvature and co-curvature.
template <class S>
DiskSymbol<S> invert_unit_circle(const DiskSymbol<S>& d) {
  return make_symbol(d(kXr), d(kYr), d(kGamma), d(kBeta));
}

/// Lorentz reflection d + 2 <d, s> s, i.e. inversion in the boundary circle of s.
template <class S>
DiskSymbol<S> reflect_in_disk(const DiskSymbol<S>& d, const DiskSymbol<S>& s) {
  const S k = S(2) * inner(d, s);
  return d + k * s;
}

/// p -> c + r^2 (p - c) / |p - c|^2
template <class S>
Point<S> invert_point(const Point<S>& p, const EuclideanDisk<S>& circle) {
  const Point<S> diff = p - circle.center;
  const S dd = diff(0) * diff(0) + diff(1) * diff(1);
  if (dd == S(0)) throw Error(ErrorKind::CenterSingularity, "cannot invert the center of the circle");
  const S k = circle.r * circle.r / dd;
  return circle.center + k * diff;
}

/// "(xr, yr)/(beta, gamma)" with short exact entries.
std::string to_pretty_string(const DiskSymbol<FieldElement>& d);
/// Canonical exact key; equal keys iff equal symbols.
std::string symbol_key(const DiskSymbol<FieldElement>& d);

DiskSymbol<double> to_double(const DiskSymbol<FieldElement>& d);

}  // namespace apollo
