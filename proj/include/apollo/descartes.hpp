#pragma once

#include <Eigen/Core>

#include <optional>
#include <utility>

#include "apollo/inversive.hpp"

namespace apollo {

/// Four disk symbols as the columns of a 4x4 matrix (rows xr, yr, beta, gamma).
template <class S>
using Quadruple = Eigen::Matrix<S, 4, 4>;

template <class S>
using CurvatureQuadruple = Eigen::Matrix<S, 4, 1>;

template <class S>
Quadruple<S> make_quadruple(const DiskSymbol<S>& d1, const DiskSymbol<S>& d2, const DiskSymbol<S>& d3,
                            const DiskSymbol<S>& d4) {
  Quadruple<S> q;
  q << d1, d2, d3, d4;
  return q;
}

/// F: -1 on the diagonal, 1 elsewhere.
template <class S>
Quadruple<S> descartes_form() {
  Quadruple<S> f = Quadruple<S>::Constant(S(1));
  for (int i = 0; i < 4; ++i) f(i, i) = S(-1);
  return f;
}

/// G in M F M^T = G for the inner product with the 1/2 factor on (beta, gamma).
template <class S>
Quadruple<S> descartes_gram() {
  Quadruple<S> g = Quadruple<S>::Constant(S(0));
  g(0, 0) = S(-4);
  g(1, 1) = S(-4);
  g(2, 3) = S(8);
  g(3, 2) = S(8);
  return g;
}

/// 2 (a^2 + b^2 + c^2 + d^2) = (a + b + c + d)^2
template <class S>
bool descartes_scalar_ok(const CurvatureQuadruple<S>& k, double tol = default_tolerance_v<S>) {
  const S sum = k.sum();
  S squares = S(0);
  for (int i = 0; i < 4; ++i) squares += k(i) * k(i);
  S residual = S(2) * squares - sum * sum;
  if constexpr (!is_exact_v<S>) {
    return is_zero_within(residual, tol * std::max(1.0, squares));
  } else {
    return is_zero_within(residual, tol);
  }
}

template <class S>
Quadruple<S> descartes_residual(const Quadruple<S>& q) {
  const Quadruple<S> f = descartes_form<S>();
  return q * f * q.transpose() - descartes_gram<S>();
}

/// Scale used to make float residuals of M F M^T relative.
inline double descartes_scale(const Quadruple<double>& q) { return std::max(1.0, q.cwiseAbs2().maxCoeff()); }

template <class S>
bool extended_ok(const Quadruple<S>& q, double tol = default_tolerance_v<S>) {
  const Quadruple<S> r = descartes_residual(q);
  if constexpr (is_exact_v<S>) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (!r(i, j).is_zero()) return false;
    return true;
  } else {
    return r.cwiseAbs().maxCoeff() <= tol * descartes_scale(q);
  }
}

/// The other disk tangent to the three columns != index: 2 (sum of the other three) - column(index).
/// No validity check; `index` is 0-based.
template <class S>
DiskSymbol<S> reflected_disk(const Quadruple<S>& q, int index) {
  const DiskSymbol<S> others = q.rowwise().sum() - q.col(index);
  return S(2) * others - q.col(index);
}

/// Checked variant: requires a valid Descartes quadruple and 0 <= index < 4.
template <class S>
DiskSymbol<S> reflect_fourth(const Quadruple<S>& q, int index, double tol = default_tolerance_v<S>) {
  if (index < 0 || index > 3) throw Error(ErrorKind::InvalidQuadruple, "reflection index out of range");
  if (!extended_ok(q, tol)) throw Error(ErrorKind::InvalidQuadruple, "not a Descartes configuration");
  return reflected_disk(q, index);
}

template <class S>
Quadruple<S> replace_column(Quadruple<S> q, int index, const DiskSymbol<S>& d) {
  q.col(index) = d;
  return q;
}

/// Exact square root in K when it has small rational coefficients (denominators <= 10^6).
std::optional<FieldElement> sqrt_in_field(const FieldElement& a);

/// beta1 + beta2 + beta3 +/- 2 sqrt(beta1 beta2 + beta2 beta3 + beta3 beta1), larger root first.
/// Throws Error(NotRepresentable) when the square root is not found in K.
std::pair<FieldElement, FieldElement> fourth_curvatures(const FieldElement& b1, const FieldElement& b2,
                                                        const FieldElement& b3);

/// Both disks completing three float disks to a Descartes configuration, larger curvature first.
/// Throws Error(NotTangentEnough) unless the three are pairwise tangent within `tol`.
std::pair<DiskSymbol<double>, DiskSymbol<double>> solve_fourth_float(const DiskSymbol<double>& d1,
                                                                     const DiskSymbol<double>& d2,
                                                                     const DiskSymbol<double>& d3,
                                                                     double tol = 1e-9);

Quadruple<double> to_double(const Quadruple<FieldElement>& q);

}  // namespace apollo
