#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "apollo/json_io.hpp"
#include "apollo/packing.hpp"

using namespace apollo;

namespace {

using F = FieldElement;

// Oracle: curvatures alone, k_i -> 2(k_j + k_k + k_l) - k_i, no backtracking.
// Every disk past the seed is born at exactly one node of this tree.
std::map<long, int> curvature_tree(std::array<long, 4> seed, int depth) {
  std::map<long, int> out;
  for (long k : seed) ++out[k];
  struct Node {
    std::array<long, 4> k;
    int parent;
  };
  std::vector<Node> level{{seed, -1}};
  for (int d = 0; d < depth; ++d) {
    std::vector<Node> next;
    for (const Node& n : level) {
      for (int i = 0; i < 4; ++i) {
        if (i == n.parent) continue;
        Node c = n;
        c.k[i] = 2 * (n.k[0] + n.k[1] + n.k[2] + n.k[3] - n.k[i]) - n.k[i];
        c.parent = i;
        ++out[c.k[i]];
        next.push_back(c);
      }
    }
    level = std::move(next);
  }
  return out;
}

std::map<long, int> integer_spectrum(const Packing& p) {
  std::map<long, int> out;
  for (const SpectrumEntry& e : curvature_spectrum(p)) {
    REQUIRE(e.exact->is_integer());
    out[e.exact->coeff(0).get_num().get_si()] = e.multiplicity;
  }
  return out;
}

PackingConfig config(const std::string& seed, int depth, Mode mode = Mode::exact) {
  PackingConfig c;
  c.seed = builtin_seed(seed);
  c.max_depth = depth;
  c.mode = mode;
  return c;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("builtin seeds") {
  CHECK(builtin_seed_names() == std::vector<std::string>{"window", "belt", "halfplane_golden", "plane_spiral"});
  for (const auto& name : builtin_seed_names()) {
    const Seed s = builtin_seed(name);
    REQUIRE(s.exact.has_value());
    CHECK(extended_ok(*s.exact));
    CHECK(extended_ok(s.approx));
    CHECK(!describe_seed(name).empty());
  }
  CHECK(builtin_seed("plane_spiral").unbounded_by_construction);
  CHECK_FALSE(builtin_seed("window").unbounded_by_construction);
  CHECK(kind_of([] { builtin_seed("gasket"); }) == ErrorKind::UnknownSeed);
}

TEST_CASE("window spectrum against the curvature tree") {
  const Packing p = generate(config("window", 4));
  CHECK(p.disks.size() == 164);
  CHECK(p.quadruples.size() == 161);
  CHECK(p.per_depth == std::vector<int>{4, 4, 12, 36, 108});
  CHECK(integer_spectrum(p) == curvature_tree({-1, 2, 2, 3}, 4));
  const auto s = integer_spectrum(p);
  CHECK(s.at(-1) == 1);
  CHECK(s.at(2) == 2);
  CHECK(s.at(3) == 2);
  CHECK(s.at(6) == 4);
  CHECK(s.at(11) == 4);
  CHECK(s.at(14) == 4);
  CHECK(s.at(15) == 2);
}

TEST_CASE("belt spectrum against the curvature tree") {
  const Packing p = generate(config("belt", 4));
  const auto s = integer_spectrum(p);
  CHECK(s == curvature_tree({0, 0, 1, 1}, 4));
  CHECK(s.at(0) == 2);
  CHECK(s.at(1) >= 2);
  CHECK(s.at(4) >= 1);
  CHECK(s.at(9) >= 1);
}

TEST_CASE("float generation agrees with exact") {
  for (const auto& name : builtin_seed_names()) {
    const Packing e = generate(config(name, 4));
    const Packing f = generate(config(name, 4, Mode::floating));
    REQUIRE(e.disks.size() == f.disks.size());
    CHECK(e.quadruples == f.quadruples);
    for (std::size_t i = 0; i < e.disks.size(); ++i) {
      CHECK(e.disks[i].depth == f.disks[i].depth);
      const double scale = std::max(1.0, e.disks[i].approx.cwiseAbs().maxCoeff());
      CHECK((e.disks[i].approx - f.disks[i].approx).cwiseAbs().maxCoeff() <= 1e-9 * scale);
    }
  }
}

TEST_CASE("thread count does not change the output") {
  for (const auto& name : builtin_seed_names()) {
    for (Mode mode : {Mode::exact, Mode::floating}) {
      PackingConfig c = config(name, 5, mode);
      const std::string one = export_json(generate(c));
      c.threads = 4;
      CHECK(export_json(generate(c)) == one);
      CHECK(export_json(generate(c)) == one);
    }
  }
}

TEST_CASE("canonical order") {
  const Packing p = generate(config("window", 4));
  for (std::size_t i = 1; i < p.disks.size(); ++i) {
    const auto& a = p.disks[i - 1];
    const auto& b = p.disks[i];
    CHECK(a.depth <= b.depth);
    if (a.depth == b.depth) CHECK((*a.exact)(kBeta) <= (*b.exact)(kBeta));
  }
  for (const auto& q : p.quadruples) {
    Quadruple<F> m;
    for (int c = 0; c < 4; ++c) m.col(c) = *p.disks[static_cast<std::size_t>(q[static_cast<std::size_t>(c)])].exact;
    CHECK(extended_ok(m));
  }
}

TEST_CASE("budgets") {
  PackingConfig c;
  c.seed = builtin_seed("window");
  c.max_curvature = Rational(100);
  const Packing p = generate(c);
  CHECK_FALSE(p.truncated);
  for (const auto& d : p.disks) CHECK((*d.exact)(kBeta) <= F(100));
  CHECK(integer_spectrum(p).rbegin()->first <= 100);

  c.max_depth = 2;
  const Packing both = generate(c);
  CHECK(both.disks.size() == 20);

  PackingConfig small = config("window", 8);
  small.max_disks = 50;
  const Packing t = generate(small);
  CHECK(t.truncated);
  CHECK(t.disks.size() <= 50);
  CHECK(verify_packing(t).ok());
}

TEST_CASE("configuration errors") {
  PackingConfig c;
  c.seed = builtin_seed("window");
  CHECK(kind_of([&] { generate(c); }) == ErrorKind::InvalidConfig);
  c.max_depth = -1;
  CHECK(kind_of([&] { generate(c); }) == ErrorKind::InvalidConfig);
  CHECK(kind_of([] { parse_mode("fast"); }) == ErrorKind::InvalidConfig);

  Quadruple<F> bad = *builtin_seed("window").exact;
  bad(kGamma, 1) += F(1);
  CHECK(kind_of([&] {
          PackingConfig b;
          b.seed = make_seed(bad);
          b.max_depth = 1;
          generate(b);
        }) == ErrorKind::InvalidSeed);

  PackingConfig floating_seed;
  floating_seed.seed = make_seed(builtin_seed("window").approx);
  floating_seed.max_depth = 1;
  CHECK(kind_of([&] { generate(floating_seed); }) == ErrorKind::InvalidSeed);
  floating_seed.mode = Mode::floating;
  CHECK(generate(floating_seed).disks.size() == 8);
}

TEST_CASE("seeds from user symbols") {
  const Quadruple<F> w = *builtin_seed("window").exact;
  const Seed s = seed_from_symbols(std::vector<DiskSymbol<F>>{w.col(0), w.col(1), w.col(2)});
  REQUIRE(s.exact.has_value());
  CHECK(extended_ok(*s.exact));
  CHECK((*s.exact)(kBeta, 3) == F(3));
  CHECK(kind_of([&] { seed_from_symbols(std::vector<DiskSymbol<F>>{w.col(0), w.col(1)}); }) == ErrorKind::InvalidSeed);
  // Three unit disks need sqrt3, which is not in K; only a float seed exists.
  const DiskSymbol<double> a = make_symbol(0.0, 0.0, 1.0, -1.0);
  const DiskSymbol<double> b = make_symbol(2.0, 0.0, 1.0, 3.0);
  const DiskSymbol<double> c = make_symbol(1.0, std::sqrt(3.0), 1.0, 3.0);
  const Seed fs = seed_from_symbols(std::vector<DiskSymbol<double>>{a, b, c});
  CHECK_FALSE(fs.exact.has_value());
  CHECK(extended_ok(fs.approx));
}

TEST_CASE("classification") {
  const std::pair<const char*, PackingType> expected[] = {
      {"window", PackingType::A}, {"belt", PackingType::B}, {"halfplane_golden", PackingType::C}, {"plane_spiral", PackingType::D}};
  for (const auto& [name, type] : expected) {
    for (Mode mode : {Mode::exact, Mode::floating}) {
      const Classification c = classify(generate(config(name, 4, mode)));
      CHECK(c.type == type);
      CHECK(!c.min_curvature.empty());
    }
  }
  const Classification a = classify(generate(config("window", 3)));
  CHECK(a.min_curvature == "-1");
  CHECK(a.negative_curvature_count == 1);
  const Classification d = classify(generate(config("plane_spiral", 3)));
  CHECK_FALSE(d.min_attained);
  CHECK(d.unbounded_by_construction);
  CHECK(d.min_curvature_approx > 0);

  // A bounded-looking finite piece from a user seed cannot be typed.
  Packing p = generate(config("plane_spiral", 2));
  p.seed.unbounded_by_construction = false;
  CHECK(kind_of([&] { classify(p); }) == ErrorKind::Inconclusive);
  p.disks.clear();
  CHECK(kind_of([&] { classify(p); }) == ErrorKind::EmptyPacking);
}

TEST_CASE("zero-curvature disks do not multiply with depth") {
  for (const auto& name : builtin_seed_names()) {
    const int z2 = classify(generate(config(name, 2))).zero_curvature_count;
    const int z5 = classify(generate(config(name, 5))).zero_curvature_count;
    CHECK(z2 == z5);
  }
}

TEST_CASE("verification") {
  for (const auto& name : builtin_seed_names()) {
    const VerificationReport e = verify_packing(generate(config(name, 4)));
    CHECK(e.ok());
    CHECK(e.quadruples_checked > 0);
    const VerificationReport f = verify_packing(generate(config(name, 5, Mode::floating)));
    CHECK(f.ok());
    CHECK(f.max_residual < 1e-9);
  }
  Packing p = generate(config("window", 3));
  (*p.disks[7].exact)(kGamma) += F(1);
  CHECK_FALSE(verify_packing(p).ok());

  Packing q = generate(config("belt", 3, Mode::floating));
  q.disks[5].approx(kGamma) += 1e-3;
  CHECK_FALSE(verify_packing(q).ok());
}

TEST_CASE("viewport filters the output") {
  PackingConfig c = config("window", 5);
  const Packing all = generate(c);
  c.viewport = Viewport{0.0, 0.0, 1.0, 1.0};
  const Packing part = generate(c);
  CHECK(part.disks.size() < all.disks.size());
  CHECK(part.disks.size() > 0);
  for (const auto& d : part.disks) CHECK(intersects(d, *c.viewport));
  std::size_t expected = 0;
  for (const auto& d : all.disks) expected += intersects(d, *c.viewport) ? 1 : 0;
  CHECK(part.disks.size() == expected);
  CHECK(verify_packing(part).ok());
}
