#include "apollo/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "apollo/error.hpp"

namespace apollo {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroRadius: return "ZeroRadius";
    case ErrorKind::NonUnitNormal: return "NonUnitNormal";
    case ErrorKind::InvalidSymbol: return "InvalidSymbol";
    case ErrorKind::CenterSingularity: return "CenterSingularity";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::InvalidQuadruple: return "InvalidQuadruple";
    case ErrorKind::NotTangentEnough: return "NotTangentEnough";
    case ErrorKind::UnknownSeed: return "UnknownSeed";
    case ErrorKind::InvalidSeed: return "InvalidSeed";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::EmptyPacking: return "EmptyPacking";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational pow2(long exponent) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(std::labs(exponent)));
  return exponent >= 0 ? Rational(p) : Rational(Integer(1), p);
}

Rational pow10(long exponent) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) return Rational(p);
  Rational q(Integer(1), p);
  q.canonicalize();
  return q;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exponent = parse_integer(s.substr(e + 1)).get_si();
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  bool seen_point = false;
  for (char c : s) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) --exponent;
    } else {
      throw Error(ErrorKind::ParseError, "not a decimal number: '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) throw Error(ErrorKind::ParseError, "not a decimal number: '" + std::string(text) + "'");
  Rational q(Integer(digits, 10));
  q *= pow10(exponent);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

Integer round_half_even(const Rational& q) {
  Integer floor_q;
  mpz_fdiv_q(floor_q.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational frac = q - Rational(floor_q);
  const int cmp_half = cmp(frac, Rational(1, 2));
  if (cmp_half < 0) return floor_q;
  if (cmp_half > 0) return floor_q + 1;
  return mpz_even_p(floor_q.get_mpz_t()) ? floor_q : Integer(floor_q + 1);
}

std::string format_fixed(const Integer& scaled, int digits) {
  const bool negative = sgn(scaled) < 0;
  std::string body = Integer(abs(scaled)).get_str(10);
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + body : body;
}

Rational approximate_rational(double x, long max_den) {
  if (!std::isfinite(x)) throw Error(ErrorKind::NotRepresentable, "non-finite value");
  // Convergents h/k of the continued fraction of x.
  Integer h_prev = 1, h = static_cast<long>(std::floor(x));
  Integer k_prev = 0, k = 1;
  double rest = x - std::floor(x);
  for (int iter = 0; iter < 64 && rest > 1e-15; ++iter) {
    const double inv = 1.0 / rest;
    const double a_d = std::floor(inv);
    if (a_d > 1e12) break;
    const Integer a = static_cast<long>(a_d);
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    rest = inv - a_d;
  }
  Rational q(h, k);
  q.canonicalize();
  return q;
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

}  // namespace apollo
