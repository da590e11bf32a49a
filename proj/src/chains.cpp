#include "apollo/chains.hpp"

#include <cmath>
#include <numbers>

namespace apollo {

namespace {

const GoldenConstants& k() { return constants(); }

FieldElement fib(long n) { return FieldElement(Rational(fibonacci(n))); }

}  // namespace

// --- Zigzag ----------------------------------------------------------------------

ZigzagDisk zigzag_disk(long n) {
  const FieldElement f = fib(n);
  const FieldElement two(2);
  return {n, make_symbol(two * f * pow(k().phi, n), FieldElement(1), two * pow(k().phi, 2 * n), two * f * f)};
}

FieldElement zigzag_diameter(long n) { return pow(k().phi, -2 * n); }

FieldElement zigzag_tangency(long n) { return fib(n) * pow(k().tau, n); }

DiskSymbol<FieldElement> zigzag_line() {
  return make_symbol(FieldElement(0), FieldElement(-1), FieldElement(0), FieldElement(0));
}

std::array<DiskSymbol<FieldElement>, 3> zigzag_seed() {
  return {zigzag_line(), zigzag_disk(0).symbol, zigzag_disk(1).symbol};
}

Point<FieldElement> zigzag_limit() { return make_point(k().sqrt5 / FieldElement(5), FieldElement(0)); }

// --- Sextic ----------------------------------------------------------------------

std::vector<FieldElement> sextic_coefficients() { return {1, -2, -1, -4, -1, -2, 1}; }

ComplexFieldElement sextic_eval(const ComplexFieldElement& p) {
  const auto coeffs = sextic_coefficients();
  ComplexFieldElement acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * p + ComplexFieldElement(*it);
  return acc;
}

std::vector<FieldElement> poly_mul(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<FieldElement> out(a.size() + b.size() - 1, FieldElement(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

bool sextic_factorization_ok() {
  const FieldElement two(2);
  const std::vector<FieldElement> f1{1, 0, 1};
  const std::vector<FieldElement> f2{1, -(two * k().phi), 1};
  const std::vector<FieldElement> f3{1, two * k().tau, 1};
  return poly_mul(poly_mul(f1, f2), f3) == sextic_coefficients();
}

// --- Spiral ----------------------------------------------------------------------

SpiralDisk spiral_disk(long n, SpiralFrame frame) {
  const ComplexFieldElement ro = k().rho_omega;
  const ComplexFieldElement one(1);
  ComplexFieldElement z = ComplexFieldElement(FieldElement(1) + k().rho) * (pow(ro, n) - one) / (ro - one);
  if (frame == SpiralFrame::figure) z = k().omega * z;
  const FieldElement r = pow(k().rho, n);
  SpiralDisk d{n, r, z, {}};
  d.symbol = from_center_radius(EuclideanDisk<FieldElement>{make_point(z.re, z.im), r});
  return d;
}

Quadruple<FieldElement> spiral_quadruple(long n, SpiralFrame frame) {
  return make_quadruple(spiral_disk(n, frame).symbol, spiral_disk(n + 1, frame).symbol,
                        spiral_disk(n + 2, frame).symbol, spiral_disk(n + 3, frame).symbol);
}

ComplexFieldElement spiral_center() {
  return ComplexFieldElement(FieldElement(1) + k().rho) / (ComplexFieldElement(1) - k().rho_omega);
}

ComplexFieldElement spiral_recentered(long n) {
  const ComplexFieldElement ro = k().rho_omega;
  return ComplexFieldElement(FieldElement(1) + k().rho) * pow(ro, n) / (ro - ComplexFieldElement(1));
}

namespace {

using PrintedSymbol = std::array<ComplexFieldElement, 4>;

std::string to_pretty_string(const ComplexFieldElement& z) {
  if (z.im.is_zero()) return apollo::to_pretty_string(z.re);
  return "(" + apollo::to_pretty_string(z.re) + ") + (" + apollo::to_pretty_string(z.im) + ")i";
}

void diff_form(const std::string& form, const std::array<PrintedSymbol, 3>& printed,
               const std::array<DiskSymbol<FieldElement>, 3>& derived, SpiralSeedReport& report) {
  static const char* names[4] = {"xr", "yr", "beta", "gamma"};
  for (int s = 0; s < 3; ++s) {
    for (int c = 0; c < 4; ++c) {
      const ComplexFieldElement& p = printed[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)];
      const FieldElement& d = derived[static_cast<std::size_t>(s)](c);
      ++report.compared;
      if (p != ComplexFieldElement(d)) {
        report.mismatches.push_back({form, s + 1, names[c], to_pretty_string(p), apollo::to_pretty_string(d)});
      }
    }
  }
}

}  // namespace

SpiralSeedReport spiral_seed() {
  SpiralSeedReport report;
  report.symbols = {spiral_disk(1).symbol, spiral_disk(0).symbol, spiral_disk(-1).symbol};
  report.norms_ok = true;
  for (const auto& s : report.symbols) report.norms_ok = report.norms_ok && norm_ok(s);
  report.pairwise_tangent = tangent(report.symbols[0], report.symbols[1]) &&
                            tangent(report.symbols[1], report.symbols[2]) &&
                            tangent(report.symbols[0], report.symbols[2]);

  const GoldenConstants& g = k();
  const FieldElement one(1), two(2);
  const ComplexFieldElement zero(0);
  // Complex form as printed: the first entry of the third symbol is the complex -(1 + rho) conj(omega).
  const std::array<PrintedSymbol, 3> complex_form{{
      {one + g.rho_bar, zero, g.rho_bar, g.rho_bar + two},
      {zero, zero, one, -one},
      {-(ComplexFieldElement(one + g.rho) * g.omega_conj), zero, g.rho_bar, g.rho + two},
  }};
  const std::array<PrintedSymbol, 3> real_form{{
      {g.phi - g.sqrt_phi + one, zero, g.phi - g.sqrt_phi, g.phi - g.sqrt_phi + two},
      {zero, zero, one, -one},
      {g.tau + g.sqrt_tau + one, g.sqrt_phi + g.sqrt_tau + one, g.phi + g.sqrt_phi, g.phi + g.sqrt_phi + two},
  }};
  diff_form("complex", complex_form, report.symbols, report);
  diff_form("real", real_form, report.symbols, report);
  return report;
}

// --- Angles ----------------------------------------------------------------------

TurnAngleReport turn_angle_checks() {
  const GoldenConstants& g = k();
  TurnAngleReport r;
  r.minus_omega_conj = -g.omega_conj;
  const FieldElement& re = r.minus_omega_conj.re;
  const FieldElement& im = r.minus_omega_conj.im;
  r.unit_modulus = r.minus_omega_conj.norm() == FieldElement(1);
  r.real_part_is_tau = re == g.tau;
  r.tan_squared_is_phi = (im / re) * (im / re) == g.phi;
  r.printed_cos_sign_conflict = re != -g.tau;
  r.theta_degrees = std::atan2(to_double(im), to_double(re)) * 180.0 / std::numbers::pi;
  return r;
}

bool kepler_triangle_ok() {
  const GoldenConstants& g = k();
  if (FieldElement(1) + g.phi != g.phi * g.phi) return false;
  if (g.sqrt_phi * g.sqrt_phi != g.phi) return false;
  // Vertex at z_1 with arms to z_0 and z_2; drop the perpendicular from z_0 onto the arm to z_2.
  const ComplexFieldElement v = spiral_disk(1).center;
  const ComplexFieldElement a = spiral_disk(0).center;
  const ComplexFieldElement arm = spiral_disk(2).center - v;
  const ComplexFieldElement u = a - v;
  const FieldElement projection = (u * arm.conj()).re / arm.norm();
  const ComplexFieldElement foot = v + ComplexFieldElement(projection) * arm;
  const FieldElement short_leg = (foot - v).norm();
  const FieldElement long_leg = (a - foot).norm();
  const FieldElement hypotenuse = u.norm();
  return long_leg == g.phi * short_leg && hypotenuse == g.phi * g.phi * short_leg &&
         short_leg + long_leg == hypotenuse;
}

WedgeReport wedge_checks(long from, long to) {
  const GoldenConstants& g = k();
  WedgeReport report;
  report.zigzag_triangle_ok = FieldElement(1) + FieldElement(8) == FieldElement(9);
  const FieldElement leg = FieldElement(2) * g.phi * g.sqrt_phi;
  report.spiral_triangle_ok = FieldElement(1) + leg * leg == pow(g.phi, 6);
  report.spiral_cosine = pow(g.tau, 3);

  // Direction (s/3, 2 sqrt2/3), unit normal (-2 sqrt2/3, s/3). For c - P = (dx, dy):
  // dist^2 = 8/9 dx^2 + 1/9 dy^2 - s 4/9 dx dy sqrt2.
  const FieldElement px = zigzag_limit()(0);
  for (const int s : {1, -1}) {
    bool all = true;
    for (long n = from; n <= to; ++n) {
      const auto e = std::get<EuclideanDisk<FieldElement>>(to_euclidean(zigzag_disk(n).symbol));
      const FieldElement dx = e.center(0) - px;
      const FieldElement dy = e.center(1);
      WedgeLineCheck c;
      c.n = n;
      c.orientation = s;
      c.a = FieldElement(Rational(8, 9)) * dx * dx + FieldElement(Rational(1, 9)) * dy * dy - e.r * e.r;
      c.b = FieldElement(Rational(-4 * s, 9)) * dx * dy;
      all = all && c.tangent();
      report.lines.push_back(c);
    }
    report.zigzag_inscribed = report.zigzag_inscribed || all;
  }
  return report;
}

// --- Inversions ------------------------------------------------------------------

Point<FieldElement> normalize_to_frame(const Point<FieldElement>& p, const EuclideanDisk<FieldElement>& frame) {
  return make_point((p(0) - frame.center(0)) / frame.r, (frame.center(1) - p(1)) / frame.r);
}

namespace {

InversionPicture picture(const EuclideanDisk<FieldElement>& circle, const EuclideanDisk<FieldElement>& frame) {
  InversionPicture pic{circle, frame, invert_point(zigzag_limit(), circle), circle.center, {}, {}};
  pic.normalized_limit = normalize_to_frame(pic.image_of_limit, frame);
  pic.normalized_infinity = normalize_to_frame(pic.image_of_infinity, frame);
  return pic;
}

}  // namespace

InversionPicture inversion_into_chain_disk() {
  const auto d0 = std::get<EuclideanDisk<FieldElement>>(to_euclidean(zigzag_disk(0).symbol));
  return picture(d0, d0);
}

InversionPicture inversion_into_axis_disk() {
  const FieldElement half(Rational(1, 2));
  const EuclideanDisk<FieldElement> circle{make_point(FieldElement(0), FieldElement(-1)), FieldElement(1)};
  const EuclideanDisk<FieldElement> image_of_axis{make_point(FieldElement(0), -half), half};
  return picture(circle, image_of_axis);
}

}  // namespace apollo
