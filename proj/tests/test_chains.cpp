#include <doctest.h>

#include <complex>

#include "apollo/chains.hpp"

using namespace apollo;

namespace {

using F = FieldElement;
using C = ComplexFieldElement;
const GoldenConstants& g = constants();

// Oracle: long double formulas, independent of K.
using LC = std::complex<long double>;
const long double kPhi = (1.0L + std::sqrt(5.0L)) / 2.0L;
const long double kRho = kPhi + std::sqrt(kPhi);
const LC kOmega(-(kPhi - 1.0L), std::sqrt(kPhi - 1.0L));

LC oracle_center(long n) {
  const LC ro = kRho * kOmega;
  return (1.0L + kRho) * (std::pow(ro, static_cast<int>(n)) - 1.0L) / (ro - 1.0L);
}

double re(const C& z) { return to_double(z.re); }
double im(const C& z) { return to_double(z.im); }

}  // namespace

TEST_CASE("zigzag disks") {
  CHECK(zigzag_disk(0).symbol == make_symbol(F(0), F(1), F(2), F(0)));
  CHECK(zigzag_disk(1).symbol == make_symbol(F(2) * g.phi, F(1), F(2) * g.phi * g.phi, F(2)));
  CHECK(zigzag_disk(-1).symbol == make_symbol(F(2) * g.tau, F(1), F(2) * g.tau * g.tau, F(2)));
  CHECK(zigzag_tangency(-1) == g.phi);
  CHECK(zigzag_tangency(0) == F(0));
  CHECK(zigzag_diameter(-3) == pow(g.phi, 6));
  CHECK(zigzag_diameter(1) == g.tau * g.tau);
  for (long n = -16; n <= 16; ++n) {
    const auto d = zigzag_disk(n).symbol;
    CHECK(norm_ok(d));
    const auto e = std::get<EuclideanDisk<F>>(to_euclidean(d));
    CHECK(F(2) * e.r == zigzag_diameter(n));
    CHECK(e.center(0) == zigzag_tangency(n));
    CHECK(e.center(1) == e.r);  // resting on the axis
  }
}

TEST_CASE("zigzag tangencies") {
  for (long n = -16; n <= 16; ++n) {
    CHECK(inner(zigzag_disk(n).symbol, zigzag_disk(n + 1).symbol) == F(1));
    CHECK(inner(zigzag_disk(n).symbol, zigzag_disk(n + 2).symbol) == F(1));
    CHECK(inner(zigzag_disk(n).symbol, zigzag_line()) == F(1));
    const F f1(Rational(fibonacci(n + 1))), f0(Rational(fibonacci(n)));
    CHECK(pow(g.phi, 2 * n) * (f1 - g.phi * f0) * (f1 - g.phi * f0) == F(1));
  }
  const auto seed = zigzag_seed();
  CHECK(seed[0] == make_symbol(F(0), F(-1), F(0), F(0)));
  CHECK(seed[2] == zigzag_disk(1).symbol);
  CHECK(extended_ok(make_quadruple(seed[0], seed[1], seed[2], zigzag_disk(2).symbol)));
}

TEST_CASE("zigzag limit") {
  const auto p = zigzag_limit();
  CHECK(p(0) * p(0) == F(Rational(1, 5)));
  CHECK(sign(p(0)) == 1);
  CHECK(p(1) == F(0));
  CHECK(abs(embed_real(p(0), Rational(1, 10000000)).lo - parse_decimal("0.4472135955")) < Rational(1, 1000000));
  // x_n - 1/sqrt5 = -(-1)^n tau^(2n)/sqrt5
  for (long n = 0; n <= 20; ++n) {
    const F gap = zigzag_tangency(n) - p(0);
    CHECK(gap == F(n % 2 == 0 ? -1 : 1) * pow(g.tau, 2 * n) / g.sqrt5);
  }
  const RationalInterval gap16 = embed_real(zigzag_tangency(16) - p(0), Rational(1, 1000000000));
  CHECK(abs(gap16.hi) < Rational(1, 100000));
  CHECK(abs(gap16.lo) < Rational(1, 100000));
}

TEST_CASE("sextic") {
  CHECK(sextic_eval(C(g.rho)).is_zero());
  CHECK(sextic_eval(C(g.rho_bar)).is_zero());
  CHECK(sextic_eval(g.omega).is_zero());
  CHECK(sextic_eval(g.omega_conj).is_zero());
  CHECK(sextic_eval(C(F(0), F(1))).is_zero());
  CHECK(sextic_eval(C(1)) == C(-8));
  CHECK(sextic_factorization_ok());
  // Middle factor p^2 - 2 phi p + 1 has roots phi +- sqrt phi.
  for (const F& r : {g.phi + g.sqrt_phi, g.phi - g.sqrt_phi}) CHECK(r * r - F(2) * g.phi * r + F(1) == F(0));
  CHECK(poly_mul({1, 1}, {1, 1}) == std::vector<F>{1, 2, 1});
}

TEST_CASE("spiral against the long double oracle") {
  for (long n = -8; n <= 8; ++n) {
    const SpiralDisk d = spiral_disk(n);
    const LC z = oracle_center(n);
    const long double scale = std::max(1.0L, std::pow(kRho, static_cast<long double>(n)));
    CHECK(std::abs(re(d.center) - static_cast<double>(z.real())) <= 1e-12 * scale);
    CHECK(std::abs(im(d.center) - static_cast<double>(z.imag())) <= 1e-12 * scale);
    CHECK(std::abs(to_double(d.radius) - static_cast<double>(std::pow(kRho, static_cast<long double>(n)))) <= 1e-12 * scale);
    CHECK(norm_ok(d.symbol));
  }
  CHECK(spiral_disk(0).center.is_zero());
  CHECK(spiral_disk(0).radius == F(1));
  CHECK(spiral_disk(1).center == C(F(1) + g.rho));
}

TEST_CASE("spiral in the rotated frame") {
  const double printed[3][3] = {{-2.404185367, 3.058171027, 2.890053638},
                                {-5.058171027, -7.86654176, 8.352410032},
                                {24.50341124, 5.616741466, 24.138913}};
  for (long n = 1; n <= 3; ++n) {
    const SpiralDisk d = spiral_disk(n, SpiralFrame::figure);
    CHECK(d.center == g.omega * spiral_disk(n).center);
    CHECK(std::abs(re(d.center) - printed[n - 1][0]) < 1e-6);
    CHECK(std::abs(im(d.center) - printed[n - 1][1]) < 1e-6);
    CHECK(std::abs(to_double(d.radius) - printed[n - 1][2]) < 1e-6);
  }
  for (long n = -3; n <= 3; ++n) CHECK(extended_ok(spiral_quadruple(n, SpiralFrame::figure)));
}

TEST_CASE("spiral quadruples and recurrence") {
  for (long n = -8; n <= 8; ++n) {
    const Quadruple<F> q = spiral_quadruple(n);
    CHECK(extended_ok(q));
    CurvatureQuadruple<F> k = q.row(kBeta).transpose();
    CHECK(descartes_scalar_ok(k));
    const C step = spiral_disk(n + 1).center - spiral_disk(n).center;
    CHECK(step == C(F(1) + g.rho) * pow(g.rho_omega, n));
  }
  const F p = g.rho;
  const F s = F(1) + p + p * p + p * p * p;
  CHECK(s * s == F(2) * (F(1) + p * p + pow(p, 4) + pow(p, 6)));
}

TEST_CASE("spiral center") {
  const C c = spiral_center();
  CHECK(std::abs(re(c) - 0.84) < 0.005);
  CHECK(std::abs(im(c) - 0.68) < 0.005);
  const LC oracle = (1.0L + kRho) / (1.0L - kRho * kOmega);
  CHECK(std::abs(re(c) - static_cast<double>(oracle.real())) < 1e-15);
  for (long n = -6; n <= 6; ++n) CHECK(spiral_disk(n).center - c == spiral_recentered(n));
  CHECK(std::sqrt(to_double((spiral_disk(-10).center - c).norm())) < 1e-4);
}

TEST_CASE("spiral seed against the printed forms") {
  const SpiralSeedReport r = spiral_seed();
  CHECK(r.norms_ok);
  CHECK(r.pairwise_tangent);
  CHECK(r.symbols[1] == make_symbol(F(0), F(0), F(1), F(-1)));
  CHECK(r.symbols[2](kBeta) == g.phi + g.sqrt_phi);
  CHECK(r.symbols[0](kBeta) == g.rho_bar);
  CHECK(r.compared == 24);
  // Real form agrees everywhere; the complex form differs only in the third symbol.
  int real_mismatches = 0;
  for (const auto& m : r.mismatches) {
    if (m.form == "real") ++real_mismatches;
    if (m.form == "complex") CHECK(m.symbol == 3);
  }
  CHECK(real_mismatches == 0);
  CHECK(r.mismatches.size() == 3);
}

TEST_CASE("turn angle") {
  const TurnAngleReport t = turn_angle_checks();
  CHECK(t.minus_omega_conj == C(g.tau, g.sqrt_tau));
  CHECK(t.unit_modulus);
  CHECK(t.real_part_is_tau);
  CHECK(t.tan_squared_is_phi);
  CHECK(t.printed_cos_sign_conflict);
  CHECK(std::abs(t.theta_degrees - 51.8273) < 1e-3);
  CHECK(g.tau * g.tau + g.tau == F(1));
}

TEST_CASE("Kepler triangle") {
  CHECK(kepler_triangle_ok());
  CHECK(F(1) + g.phi == g.phi * g.phi);
  CHECK(inverse(g.phi) == g.tau);
}

TEST_CASE("wedge identities") {
  const WedgeReport w = wedge_checks();
  CHECK(w.zigzag_triangle_ok);
  CHECK(w.spiral_triangle_ok);
  CHECK(w.spiral_cosine * pow(g.phi, 3) == F(1));
  CHECK(w.lines.size() == 34);
}

TEST_CASE("wedge tangency is exact arithmetic in K(sqrt2)") {
  // Independent float evaluation of dist^2 - r^2 against the exact a + b sqrt2.
  const WedgeReport w = wedge_checks(-3, 3);
  const double px = 1 / std::sqrt(5.0);
  for (const auto& c : w.lines) {
    const auto e = std::get<EuclideanDisk<F>>(to_euclidean(zigzag_disk(c.n).symbol));
    const double cx = to_double(e.center(0)), cy = to_double(e.center(1)), r = to_double(e.r);
    const double nx = -2 * std::sqrt(2.0) / 3, ny = c.orientation / 3.0;
    const double dist = (cx - px) * nx + cy * ny;
    CHECK(to_double(c.a) + to_double(c.b) * std::sqrt(2.0) == doctest::Approx(dist * dist - r * r).epsilon(1e-9));
  }
  CHECK(std::abs(to_double(w.lines[3].a) + to_double(w.lines[3].b) * std::sqrt(2.0)) > 1e-3);  // n = 0
}
