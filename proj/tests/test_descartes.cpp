#include <doctest.h>

#include <random>

#include "apollo/chains.hpp"
#include "apollo/descartes.hpp"
#include "apollo/packing.hpp"

using namespace apollo;

namespace {

using F = FieldElement;
using Sym = DiskSymbol<F>;
const GoldenConstants& g = constants();

Sym sym(F xr, F yr, F b, F gm) { return make_symbol(xr, yr, b, gm); }

Quadruple<F> window() { return make_quadruple(sym(0, 0, -1, 1), sym(1, 0, 2, 0), sym(-1, 0, 2, 0), sym(0, 2, 3, 1)); }

CurvatureQuadruple<F> curvatures(F a, F b, F c, F d) {
  CurvatureQuadruple<F> k;
  k << a, b, c, d;
  return k;
}

}  // namespace

TEST_CASE("scalar Descartes relation") {
  CHECK(descartes_scalar_ok(curvatures(-1, 2, 2, 3)));
  CHECK(descartes_scalar_ok(curvatures(0, 0, 1, 1)));
  CHECK_FALSE(descartes_scalar_ok(curvatures(1, 1, 1, 1)));
  const F p = g.rho;
  CHECK(descartes_scalar_ok(curvatures(1, p, p * p, p * p * p)));
  CurvatureQuadruple<double> k;
  k << -1.0, 2.0, 2.0, 3.0 + 1e-12;
  CHECK(descartes_scalar_ok(k));
}

TEST_CASE("G is fixed by the window") {
  const Quadruple<F> q = window();
  const Quadruple<F> product = q * descartes_form<F>() * q.transpose();
  CHECK(product == descartes_gram<F>());
  CHECK(product(2, 3) == F(8));
  CHECK(product(0, 0) == F(-4));
  CHECK(product(2, 2) == F(0));
}

TEST_CASE("extended relation") {
  CHECK(extended_ok(window()));
  const auto z = zigzag_seed();
  CHECK(extended_ok(make_quadruple(z[0], z[1], z[2], zigzag_disk(2).symbol)));
  Quadruple<F> scaled = window();
  scaled.col(1) *= F(2);
  CHECK_FALSE(extended_ok(scaled));
  // Diagonal entries of the residual vanish iff norms are -1; every accepted quadruple passes Eq. 3.
  for (int c = 0; c < 4; ++c) CHECK(norm_ok(Sym(window().col(c))));
  CHECK(extended_ok(to_double(window())));
}

TEST_CASE("fourth curvatures") {
  auto [a, b] = fourth_curvatures(-1, 2, 2);
  CHECK(a == F(3));
  CHECK(b == F(3));
  std::tie(a, b) = fourth_curvatures(0, 0, 1);
  CHECK(a == F(1));
  CHECK(b == F(1));
  std::tie(a, b) = fourth_curvatures(2, 2, 3);
  CHECK(a == F(15));
  CHECK(b == F(-1));
  // The spiral: 1, rho^-1, rho^-2 complete with rho^-3 (smaller) and rho (larger).
  std::tie(a, b) = fourth_curvatures(1, g.rho_bar, g.rho_bar * g.rho_bar);
  CHECK(a == g.rho);
  CHECK(b == pow(g.rho_bar, 3));
  try {
    fourth_curvatures(1, 1, 1);
    FAIL("expected NotRepresentable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotRepresentable);
  }
}

TEST_CASE("square roots in K") {
  CHECK(sqrt_in_field(F(0)) == F(0));
  CHECK(sqrt_in_field(F(4)) == F(2));
  CHECK(sqrt_in_field(g.phi) == g.sqrt_phi);
  CHECK(sqrt_in_field(F(5)) == g.sqrt5);
  CHECK(sqrt_in_field(g.tau) == g.sqrt_tau);
  CHECK_FALSE(sqrt_in_field(F(3)).has_value());
  CHECK_FALSE(sqrt_in_field(F(2)).has_value());
  CHECK_FALSE(sqrt_in_field(F(-1)).has_value());
  CHECK_FALSE(sqrt_in_field(-g.phi).has_value());
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coeff(-6, 6);
  for (int i = 0; i < 200; ++i) {
    const F x(coeff(rng), Rational(coeff(rng), 2), coeff(rng), Rational(coeff(rng), 3));
    const auto r = sqrt_in_field(x * x);
    REQUIRE(r.has_value());
    CHECK(*r * *r == x * x);
    CHECK(sign(*r) >= 0);
  }
}

TEST_CASE("reflection") {
  const Quadruple<F> q = window();
  const Sym d = reflect_fourth(q, 0);
  CHECK(d(kBeta) == F(15));
  const Quadruple<F> r = replace_column(q, 0, d);
  CHECK(extended_ok(r));
  CHECK(reflect_fourth(r, 0) == Sym(q.col(0)));
  CHECK_THROWS_AS(reflect_fourth(q, 4), Error);
  Quadruple<F> bad = q;
  bad(kGamma, 2) += F(1);
  CHECK_THROWS_AS(reflect_fourth(bad, 0), Error);

  const Quadruple<F> belt = *builtin_seed("belt").exact;
  CHECK(reflect_fourth(belt, 2)(kBeta) == F(1));
}

TEST_CASE("float fourth disk") {
  const Quadruple<double> w = to_double(window());
  auto [plus, minus] = solve_fourth_float(w.col(0), w.col(1), w.col(2));
  CHECK(plus(kBeta) == doctest::Approx(3.0));
  CHECK(minus(kBeta) == doctest::Approx(3.0));
  CHECK(std::abs(plus(kYr)) == doctest::Approx(2.0));
  CHECK(plus(kYr) == doctest::Approx(-minus(kYr)));

  // Three unit disks: 3 +- 2 sqrt3.
  const double s3 = std::sqrt(3.0);
  const DiskSymbol<double> a = make_symbol(0.0, 0.0, 1.0, -1.0);
  const DiskSymbol<double> b = make_symbol(2.0, 0.0, 1.0, 3.0);
  const DiskSymbol<double> c = make_symbol(1.0, s3, 1.0, 3.0);
  std::tie(plus, minus) = solve_fourth_float(a, b, c);
  CHECK(plus(kBeta) == doctest::Approx(3 + 2 * s3));
  CHECK(minus(kBeta) == doctest::Approx(3 - 2 * s3));
  for (const auto& d : {plus, minus}) {
    CHECK(norm_ok(d, 1e-9));
    CHECK(tangent(d, a, 1e-9));
    CHECK(tangent(d, b, 1e-9));
    CHECK(tangent(d, c, 1e-9));
  }

  try {
    solve_fourth_float(a, a, b);
    FAIL("expected NotTangentEnough");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTangentEnough);
  }
}

TEST_CASE("exact triples complete inside K") {
  const Quadruple<F> q = window();
  const Sym d = complete_triple_exact(q.col(0), q.col(1), q.col(2));
  CHECK(d(kBeta) == F(3));
  CHECK(extended_ok(make_quadruple(Sym(q.col(0)), Sym(q.col(1)), Sym(q.col(2)), d)));
  const Sym s = complete_triple_exact(spiral_disk(0).symbol, spiral_disk(1).symbol, spiral_disk(2).symbol);
  CHECK((s == spiral_disk(3).symbol || s == spiral_disk(-1).symbol));
}

TEST_CASE("random float quadruples: involution and +- consistency") {
  // Random walks through the orbit of each builtin produce generic valid quadruples.
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> pick(0, 3), steps(1, 6);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto& names = builtin_seed_names();
    Quadruple<double> q = builtin_seed(names[static_cast<std::size_t>(trial) % names.size()]).approx;
    for (int s = steps(rng); s > 0; --s) {
      const int i = pick(rng);
      q.col(i) = reflected_disk(q, i);
    }
    const int i = pick(rng);
    const DiskSymbol<double> d = reflected_disk(q, i);
    const Quadruple<double> r = replace_column(q, i, d);
    const double scale = descartes_scale(q);
    CHECK((reflected_disk(r, i) - q.col(i)).cwiseAbs().maxCoeff() <= 1e-9 * scale);

    int o[3], k = 0;
    for (int c = 0; c < 4; ++c)
      if (c != i) o[k++] = c;
    const auto [plus, minus] = solve_fourth_float(q.col(o[0]), q.col(o[1]), q.col(o[2]));
    const DiskSymbol<double> twice = 2.0 * (q.col(o[0]) + q.col(o[1]) + q.col(o[2]));
    CHECK((plus + minus - twice).cwiseAbs().maxCoeff() <= 1e-8 * scale);
    // The two solutions are the replaced disk and its reflection.
    auto dist = [](const DiskSymbol<double>& a, const DiskSymbol<double>& b) { return (a - b).cwiseAbs().maxCoeff(); };
    const double direct = std::max(dist(plus, q.col(i)), dist(minus, d));
    const double swapped = std::max(dist(plus, d), dist(minus, q.col(i)));
    CHECK(std::min(direct, swapped) <= 1e-6 * scale);
    ++checked;
  }
  CHECK(checked == 500);
}
