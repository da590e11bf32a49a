#pragma once

#include <cmath>
#include <type_traits>

#include "apollo/field.hpp"

namespace apollo {

// Geometry is written once over a scalar S: FieldElement (exact) or double (float mode).

template <class S>
inline constexpr bool is_exact_v = !std::is_floating_point_v<S>;

/// Tolerance used by predicates when callers do not pass one; 0 means exact.
template <class S>
inline constexpr double default_tolerance_v = is_exact_v<S> ? 0.0 : 1e-9;

inline bool is_zero_within(const FieldElement& x, double /*tol*/) { return x.is_zero(); }
inline bool is_zero_within(double x, double tol) { return std::abs(x) <= tol; }

inline double to_double(double x) { return x; }

inline int sign(double x) { return (x > 0) - (x < 0); }

template <class S>
S from_field(const FieldElement& x) {
  if constexpr (is_exact_v<S>) {
    return x;
  } else {
    return static_cast<S>(to_double(x));
  }
}

template <class S>
S half(const S& x) {
  if constexpr (is_exact_v<S>) {
    return x * FieldElement(Rational(1, 2));
  } else {
    return x / 2;
  }
}

}  // namespace apollo
