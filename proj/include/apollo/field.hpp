#pragma once

#include <Eigen/Core>

#include <array>
#include <ostream>
#include <string>
#include <string_view>

#include "apollo/rational.hpp"

namespace apollo {

/// Element c0 + c1 t + c2 t^2 + c3 t^3 of K = Q[t]/(t^4 - t^2 - 1), t = sqrt(phi).
///
/// The representation is always reduced, so equality is coefficient-wise and
/// `is_zero()` is an exact test. The real embedding sends t to the positive
/// root 1.27202..., which makes phi, tau and rho positive.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(int value) : c_{Rational(value), 0, 0, 0} {}  // NOLINT: Eigen needs Scalar(0), Scalar(1)
  FieldElement(long value) : c_{Rational(value), 0, 0, 0} {}  // NOLINT
  FieldElement(const Rational& value) : c_{value, 0, 0, 0} { c_[0].canonicalize(); }  // NOLINT
  FieldElement(Rational c0, Rational c1, Rational c2, Rational c3) : c_{c0, c1, c2, c3} {
    for (auto& c : c_) c.canonicalize();
  }

  static FieldElement generator() { return {0, 1, 0, 0}; }

  const Rational& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  /// True when the element is a rational integer.
  bool is_integer() const { return is_rational() && c_[0].get_den() == 1; }

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  /// Image under the automorphism t -> -t.
  FieldElement negate_generator() const { return {c_[0], -c_[1], c_[2], -c_[3]}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.c_ == b.c_; }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  std::array<Rational, 4> c_{};
};

inline FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
inline FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
inline FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
inline FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
FieldElement operator-(const FieldElement& a);

/// Multiplicative inverse; throws Error(DivisionByZero) for 0.
FieldElement inverse(const FieldElement& a);
/// Integer power; negative exponents go through `inverse`.
FieldElement pow(const FieldElement& a, long n);

/// Certified enclosure of the real embedding with width <= eps.
RationalInterval embed_real(const FieldElement& a, const Rational& eps);
/// Exact sign of the real embedding.
int sign(const FieldElement& a);
/// Total order through the real embedding.
int compare(const FieldElement& a, const FieldElement& b);
inline bool operator<(const FieldElement& a, const FieldElement& b) { return compare(a, b) < 0; }
inline bool operator>(const FieldElement& a, const FieldElement& b) { return compare(a, b) > 0; }
inline bool operator<=(const FieldElement& a, const FieldElement& b) { return compare(a, b) <= 0; }
inline bool operator>=(const FieldElement& a, const FieldElement& b) { return compare(a, b) >= 0; }

/// Nearest double (relative error below 2^-52).
double to_double(const FieldElement& a);
/// Correctly rounded (half-even) decimal with `digits` fractional digits.
std::string to_decimal(const FieldElement& a, int digits);

/// Canonical form "c0 + c1*t + c2*t^2 + c3*t^3".
std::string to_string(const FieldElement& a);
/// Short human form, zero terms dropped, e.g. "1 + 2*t^2" or "-t^3 + t".
std::string to_pretty_string(const FieldElement& a);
inline std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << to_pretty_string(a); }
/// Parses both the canonical and the short form. Throws Error(ParseError).
FieldElement parse_field_element(std::string_view text);

/// a + b i with a, b in K.
struct ComplexFieldElement {
  FieldElement re;
  FieldElement im;

  ComplexFieldElement() = default;
  ComplexFieldElement(FieldElement r) : re(std::move(r)) {}  // NOLINT
  ComplexFieldElement(int r) : re(r) {}                      // NOLINT
  ComplexFieldElement(FieldElement r, FieldElement i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  ComplexFieldElement conj() const { return {re, -im}; }
  /// re^2 + im^2.
  FieldElement norm() const { return re * re + im * im; }

  friend bool operator==(const ComplexFieldElement& a, const ComplexFieldElement& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ComplexFieldElement& a, const ComplexFieldElement& b) { return !(a == b); }
};

ComplexFieldElement operator+(const ComplexFieldElement& a, const ComplexFieldElement& b);
ComplexFieldElement operator-(const ComplexFieldElement& a, const ComplexFieldElement& b);
ComplexFieldElement operator-(const ComplexFieldElement& a);
ComplexFieldElement operator*(const ComplexFieldElement& a, const ComplexFieldElement& b);
ComplexFieldElement operator/(const ComplexFieldElement& a, const ComplexFieldElement& b);
ComplexFieldElement inverse(const ComplexFieldElement& a);
ComplexFieldElement pow(const ComplexFieldElement& a, long n);

/// Golden-ratio constants of K and K[i].
struct GoldenConstants {
  FieldElement phi;       // t^2
  FieldElement tau;       // t^2 - 1
  FieldElement sqrt5;     // 2t^2 - 1
  FieldElement sqrt_phi;  // t
  FieldElement sqrt_tau;  // t^3 - t
  FieldElement rho;       // phi + sqrt(phi)
  FieldElement rho_bar;   // phi - sqrt(phi)
  ComplexFieldElement omega;       // -tau + sqrt(tau) i
  ComplexFieldElement omega_conj;
  ComplexFieldElement rho_omega;
};

const GoldenConstants& constants();

/// Bilateral Fibonacci numbers, F_{-n} = (-1)^(n+1) F_n.
Integer fibonacci(long n);
/// F_n phi + F_{n-1}; checked against pow(phi, n).
FieldElement golden_power(long n);

}  // namespace apollo

namespace Eigen {

template <>
struct NumTraits<apollo::FieldElement> : GenericNumTraits<apollo::FieldElement> {
  using Real = apollo::FieldElement;
  using NonInteger = apollo::FieldElement;
  using Literal = apollo::FieldElement;
  using Nested = apollo::FieldElement;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
