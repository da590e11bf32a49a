#include "apollo/descartes.hpp"

#include <Eigen/LU>

#include <array>
#include <complex>
#include <limits>

namespace apollo {

namespace {

using Complex = std::complex<double>;

// The four embeddings of K: t -> +-sqrt(phi), +-i sqrt(tau).
std::array<Complex, 4> generator_images() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double tau = phi - 1.0;
  return {Complex(std::sqrt(phi), 0), Complex(-std::sqrt(phi), 0), Complex(0, std::sqrt(tau)),
          Complex(0, -std::sqrt(tau))};
}

Complex evaluate(const FieldElement& a, Complex t) {
  Complex sum = 0, power = 1;
  for (int k = 0; k < 4; ++k) {
    sum += a.coeff(k).get_d() * power;
    power *= t;
  }
  return sum;
}

}  // namespace

std::optional<FieldElement> sqrt_in_field(const FieldElement& a) {
  if (a.is_zero()) return FieldElement(0);
  if (sign(a) < 0) return std::nullopt;
  const auto t = generator_images();
  std::array<Complex, 4> values;
  for (int j = 0; j < 4; ++j) values[static_cast<std::size_t>(j)] = evaluate(a, t[static_cast<std::size_t>(j)]);
  // The second embedding is real too: a negative image there rules out a root in K.
  if (values[1].real() < -1e-12 * std::max(1.0, std::abs(values[0]))) return std::nullopt;

  Eigen::Matrix4cd vandermonde;
  for (int j = 0; j < 4; ++j) {
    Complex power = 1;
    for (int k = 0; k < 4; ++k) {
      vandermonde(j, k) = power;
      power *= t[static_cast<std::size_t>(j)];
    }
  }
  const Eigen::PartialPivLU<Eigen::Matrix4cd> lu(vandermonde);

  const Complex s1 = std::sqrt(Complex(std::max(values[0].real(), 0.0), 0));
  const Complex s2 = std::sqrt(Complex(std::max(values[1].real(), 0.0), 0));
  const Complex s3 = std::sqrt(values[2]);
  for (const double sign2 : {1.0, -1.0}) {
    for (const double sign3 : {1.0, -1.0}) {
      Eigen::Vector4cd images;
      images << s1, sign2 * s2, sign3 * s3, std::conj(sign3 * s3);
      const Eigen::Vector4cd coeffs = lu.solve(images);
      FieldElement candidate(approximate_rational(coeffs(0).real(), 1000000),
                             approximate_rational(coeffs(1).real(), 1000000),
                             approximate_rational(coeffs(2).real(), 1000000),
                             approximate_rational(coeffs(3).real(), 1000000));
      if (candidate * candidate == a) return sign(candidate) < 0 ? -candidate : candidate;
    }
  }
  return std::nullopt;
}

std::pair<FieldElement, FieldElement> fourth_curvatures(const FieldElement& b1, const FieldElement& b2,
                                                        const FieldElement& b3) {
  const FieldElement radicand = b1 * b2 + b2 * b3 + b3 * b1;
  const auto root = sqrt_in_field(radicand);
  if (!root) {
    throw Error(ErrorKind::NotRepresentable, "sqrt(" + to_pretty_string(radicand) + ") is not in K");
  }
  const FieldElement sum = b1 + b2 + b3;
  const FieldElement offset = FieldElement(2) * *root;
  return {sum + offset, sum - offset};
}

std::pair<DiskSymbol<double>, DiskSymbol<double>> solve_fourth_float(const DiskSymbol<double>& d1,
                                                                     const DiskSymbol<double>& d2,
                                                                     const DiskSymbol<double>& d3, double tol) {
  const std::array<const DiskSymbol<double>*, 3> seed{&d1, &d2, &d3};
  double scale = 1.0;
  for (const auto* d : seed) scale = std::max(scale, d->cwiseAbs2().maxCoeff());
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!tangent(*seed[static_cast<std::size_t>(i)], *seed[static_cast<std::size_t>(j)], tol * scale)) {
        throw Error(ErrorKind::NotTangentEnough, "seed disks are not pairwise tangent");
      }
    }
  }

  const DiskSymbol<double> sum = d1 + d2 + d3;
  // xr, yr carry "+1" under the root, beta and gamma do not.
  auto pair_sum = [&](int k) { return d1(k) * d2(k) + d2(k) * d3(k) + d3(k) * d1(k); };
  DiskSymbol<double> magnitude;
  magnitude << 2.0 * std::sqrt(std::max(pair_sum(kXr) + 1.0, 0.0)), 2.0 * std::sqrt(std::max(pair_sum(kYr) + 1.0, 0.0)),
      2.0 * std::sqrt(std::max(pair_sum(kBeta), 0.0)), 2.0 * std::sqrt(std::max(pair_sum(kGamma), 0.0));

  // The offset is Lorentz-orthogonal to the three seed disks; pick the sign pattern that makes it so.
  DiskSymbol<double> best = magnitude;
  double best_residual = std::numeric_limits<double>::infinity();
  for (int mask = 0; mask < 8; ++mask) {
    DiskSymbol<double> w = magnitude;
    if (mask & 1) w(kXr) = -w(kXr);
    if (mask & 2) w(kYr) = -w(kYr);
    if (mask & 4) w(kGamma) = -w(kGamma);
    const double residual = std::abs(inner(w, d1)) + std::abs(inner(w, d2)) + std::abs(inner(w, d3));
    if (residual < best_residual) {
      best_residual = residual;
      best = w;
    }
  }
  DiskSymbol<double> plus = sum + best;
  DiskSymbol<double> minus = sum - best;
  if (plus(kBeta) < minus(kBeta)) std::swap(plus, minus);
  return {plus, minus};
}

Quadruple<double> to_double(const Quadruple<FieldElement>& q) {
  Quadruple<double> out;
  for (int c = 0; c < 4; ++c) out.col(c) = to_double(DiskSymbol<FieldElement>(q.col(c)));
  return out;
}

}  // namespace apollo
