#include "apollo/field.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "apollo/error.hpp"

namespace apollo {

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  std::array<Rational, 7> p{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (sgn(o.c_[j]) == 0) continue;
      p[i + j] += c_[i] * o.c_[j];
    }
  }
  // t^k = t^(k-2) + t^(k-4)
  for (std::size_t k = 6; k >= 4; --k) {
    p[k - 2] += p[k];
    p[k - 4] += p[k];
  }
  for (std::size_t k = 0; k < 4; ++k) c_[k] = p[k];
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= inverse(o); }

FieldElement operator-(const FieldElement& a) {
  return {-a.coeff(0), -a.coeff(1), -a.coeff(2), -a.coeff(3)};
}

FieldElement inverse(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in K");
  // a(t) a(-t) = u + v t^2 lies in Q(phi); its Q(phi)-conjugate is u + v (1 - t^2),
  // and the product of the two is the rational norm u^2 + u v - v^2.
  const FieldElement flipped = a.negate_generator();
  const FieldElement half = a * flipped;
  const Rational& u = half.coeff(0);
  const Rational& v = half.coeff(2);
  const FieldElement half_conj(u + v, 0, -v, 0);
  const Rational norm = u * u + u * v - v * v;
  FieldElement result = flipped * half_conj;
  const Rational inv_norm = 1 / norm;
  return result * FieldElement(inv_norm);
}

FieldElement pow(const FieldElement& a, long n) {
  if (n < 0) return pow(inverse(a), -n);
  FieldElement result(1);
  FieldElement base = a;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

namespace {

// Nested enclosures of t = sqrt(phi) in [1, 2]; level k has width 2^-k.
class GeneratorEnclosures {
 public:
  RationalInterval level(std::size_t k) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (levels_.empty()) levels_.push_back({Rational(1), Rational(2)});
    while (levels_.size() <= k) {
      const RationalInterval& last = levels_.back();
      Rational mid = (last.lo + last.hi) / 2;
      const Rational m2 = mid * mid;
      const Rational value = m2 * m2 - m2 - 1;
      if (sgn(value) > 0) {
        levels_.push_back({last.lo, mid});
      } else {
        levels_.push_back({mid, last.hi});
      }
    }
    return levels_[k];
  }

 private:
  std::mutex mutex_;
  std::vector<RationalInterval> levels_;
};

GeneratorEnclosures& enclosures() {
  static GeneratorEnclosures instance;
  return instance;
}

RationalInterval evaluate_on(const FieldElement& a, const RationalInterval& t) {
  RationalInterval sum{a.coeff(0), a.coeff(0)};
  Rational lo_pow = 1, hi_pow = 1;
  for (int k = 1; k < 4; ++k) {
    lo_pow *= t.lo;
    hi_pow *= t.hi;
    const Rational& c = a.coeff(k);
    const int s = sgn(c);
    if (s == 0) continue;
    // t > 0, so t^k is increasing on the enclosure.
    if (s > 0) {
      sum.lo += c * lo_pow;
      sum.hi += c * hi_pow;
    } else {
      sum.lo += c * hi_pow;
      sum.hi += c * lo_pow;
    }
  }
  return sum;
}

}  // namespace

RationalInterval embed_real(const FieldElement& a, const Rational& eps) {
  if (sgn(eps) <= 0) throw std::invalid_argument("embed_real: eps must be positive");
  if (a.is_rational()) return {a.coeff(0), a.coeff(0)};
  for (std::size_t bits = 64;; bits *= 2) {
    RationalInterval enclosure = evaluate_on(a, enclosures().level(bits));
    if (enclosure.width() <= eps) return enclosure;
  }
}

int sign(const FieldElement& a) {
  if (a.is_zero()) return 0;
  if (a.is_rational()) return sgn(a.coeff(0));
  for (std::size_t bits = 32;; bits *= 2) {
    const RationalInterval e = evaluate_on(a, enclosures().level(bits));
    if (sgn(e.lo) > 0) return 1;
    if (sgn(e.hi) < 0) return -1;
  }
}

int compare(const FieldElement& a, const FieldElement& b) {
  if (a.is_rational() && b.is_rational()) return cmp(a.coeff(0), b.coeff(0));
  return sign(a - b);
}

double to_double(const FieldElement& a) {
  if (a.is_rational()) return a.coeff(0).get_d();
  for (std::size_t bits = 64;; bits *= 2) {
    const RationalInterval e = evaluate_on(a, enclosures().level(bits));
    if (e.contains_zero()) continue;
    const Rational magnitude = sgn(e.lo) > 0 ? e.lo : Rational(-e.hi);
    if (e.width() <= magnitude * pow2(-60)) {
      const Rational mid = (e.lo + e.hi) / 2;
      return mid.get_d();
    }
  }
}

std::string to_decimal(const FieldElement& a, int digits) {
  if (digits < 0) throw std::invalid_argument("to_decimal: digits must be >= 0");
  const Rational scale = pow10(digits);
  if (a.is_rational()) return format_fixed(round_half_even(a.coeff(0) * scale), digits);
  for (std::size_t bits = 64;; bits *= 2) {
    const RationalInterval e = evaluate_on(a, enclosures().level(bits));
    const Integer lo = round_half_even(e.lo * scale);
    const Integer hi = round_half_even(e.hi * scale);
    if (lo == hi) return format_fixed(lo, digits);
  }
}

std::string to_string(const FieldElement& a) {
  return to_string(a.coeff(0)) + " + " + to_string(a.coeff(1)) + "*t + " + to_string(a.coeff(2)) +
         "*t^2 + " + to_string(a.coeff(3)) + "*t^3";
}

std::string to_pretty_string(const FieldElement& a) {
  std::string out;
  for (int k = 0; k < 4; ++k) {
    const Rational& c = a.coeff(k);
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = (mag == 1);
    if (k == 0 || !unit) out += to_string(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += "t";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

FieldElement parse_field_element(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw Error(ErrorKind::ParseError, "empty field element");

  std::vector<std::string> terms;
  std::string current;
  for (char c : compact) {
    const bool is_sign = c == '+' || c == '-';
    if (is_sign && !current.empty() && current.back() != '+' && current.back() != '-') {
      terms.push_back(current);
      current.clear();
    }
    current.push_back(c);
  }
  terms.push_back(current);

  std::array<Rational, 4> coeffs{};
  for (const std::string& raw : terms) {
    std::string_view term = raw;
    bool negative = false;
    while (!term.empty() && (term.front() == '+' || term.front() == '-')) {
      if (term.front() == '-') negative = !negative;
      term.remove_prefix(1);
    }
    if (term.empty()) throw Error(ErrorKind::ParseError, "dangling sign in '" + std::string(text) + "'");
    int power = 0;
    Rational coeff = 1;
    const auto t_pos = term.find('t');
    if (t_pos == std::string_view::npos) {
      coeff = parse_rational(term);
    } else {
      std::string_view head = term.substr(0, t_pos);
      std::string_view tail = term.substr(t_pos + 1);
      if (!head.empty()) {
        if (head.back() != '*') throw Error(ErrorKind::ParseError, "expected '*' before t in '" + raw + "'");
        head.remove_suffix(1);
        coeff = parse_rational(head);
      }
      if (tail.empty()) {
        power = 1;
      } else if (tail.size() == 2 && tail[0] == '^' && tail[1] >= '0' && tail[1] <= '3') {
        power = tail[1] - '0';
      } else {
        throw Error(ErrorKind::ParseError, "bad power of t in '" + raw + "'");
      }
    }
    coeffs[static_cast<std::size_t>(power)] += negative ? Rational(-coeff) : coeff;
  }
  return {coeffs[0], coeffs[1], coeffs[2], coeffs[3]};
}

ComplexFieldElement operator+(const ComplexFieldElement& a, const ComplexFieldElement& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexFieldElement operator-(const ComplexFieldElement& a, const ComplexFieldElement& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexFieldElement operator-(const ComplexFieldElement& a) { return {-a.re, -a.im}; }

ComplexFieldElement operator*(const ComplexFieldElement& a, const ComplexFieldElement& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexFieldElement inverse(const ComplexFieldElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in K[i]");
  const FieldElement inv_norm = inverse(a.norm());
  return {a.re * inv_norm, -a.im * inv_norm};
}

ComplexFieldElement operator/(const ComplexFieldElement& a, const ComplexFieldElement& b) {
  return a * inverse(b);
}

ComplexFieldElement pow(const ComplexFieldElement& a, long n) {
  if (n < 0) return pow(inverse(a), -n);
  ComplexFieldElement result(1);
  ComplexFieldElement base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

const GoldenConstants& constants() {
  static const GoldenConstants k = [] {
    GoldenConstants c;
    c.phi = FieldElement(0, 0, 1, 0);
    c.tau = FieldElement(-1, 0, 1, 0);
    c.sqrt5 = FieldElement(-1, 0, 2, 0);
    c.sqrt_phi = FieldElement(0, 1, 0, 0);
    c.sqrt_tau = FieldElement(0, -1, 0, 1);
    c.rho = c.phi + c.sqrt_phi;
    c.rho_bar = c.phi - c.sqrt_phi;
    c.omega = ComplexFieldElement(-c.tau, c.sqrt_tau);
    c.omega_conj = c.omega.conj();
    c.rho_omega = ComplexFieldElement(c.rho) * c.omega;
    return c;
  }();
  return k;
}

Integer fibonacci(long n) {
  Integer f;
  mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? -n : n));
  if (n < 0 && (-n) % 2 == 0) f = -f;
  return f;
}

FieldElement golden_power(long n) {
  const FieldElement& phi = constants().phi;
  FieldElement value = FieldElement(Rational(fibonacci(n))) * phi + FieldElement(Rational(fibonacci(n - 1)));
  if (value != pow(phi, n)) throw std::logic_error("golden_power: F_n phi + F_(n-1) != phi^n");
  return value;
}

}  // namespace apollo
