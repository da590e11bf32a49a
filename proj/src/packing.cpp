#include "apollo/packing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

#include "apollo/chains.hpp"

namespace apollo {

const char* to_string(Mode mode) { return mode == Mode::exact ? "exact" : "float"; }

Mode parse_mode(const std::string& text) {
  if (text == "exact") return Mode::exact;
  if (text == "float") return Mode::floating;
  throw Error(ErrorKind::InvalidConfig, "unknown mode '" + text + "' (expected exact or float)");
}

const char* to_string(PackingType t) {
  switch (t) {
    case PackingType::A: return "A";
    case PackingType::B: return "B";
    case PackingType::C: return "C";
    case PackingType::D: return "D";
  }
  return "?";
}

// --- Seeds -----------------------------------------------------------------------

const std::vector<std::string>& builtin_seed_names() {
  static const std::vector<std::string> names{"window", "belt", "halfplane_golden", "plane_spiral"};
  return names;
}

std::string describe_seed(const std::string& name) {
  if (name == "window") return "Apollonian window: outer disk -1, curvatures (-1, 2, 2, 3)";
  if (name == "belt") return "Apollonian belt: two parallel half-planes and unit disks, curvatures (0, 0, 1, 1)";
  if (name == "halfplane_golden") return "golden zigzag in the upper half-plane, curvatures (0, 2, 2phi^2, 2phi^4)";
  if (name == "plane_spiral") return "golden spiral filling the plane, radii (1, rho, rho^2, rho^3)";
  throw Error(ErrorKind::UnknownSeed, "unknown seed '" + name + "'");
}

Seed make_seed(const Quadruple<FieldElement>& q, std::string name) {
  Seed s;
  s.name = std::move(name);
  s.exact = q;
  s.approx = to_double(q);
  return s;
}

Seed make_seed(const Quadruple<double>& q) {
  Seed s;
  s.approx = q;
  return s;
}

Seed builtin_seed(const std::string& name) {
  using F = FieldElement;
  auto sym = [](F xr, F yr, F b, F g) { return make_symbol(xr, yr, b, g); };
  if (name == "window") {
    return make_seed(make_quadruple(sym(0, 0, -1, 1), sym(1, 0, 2, 0), sym(-1, 0, 2, 0), sym(0, 2, 3, 1)), name);
  }
  if (name == "belt") {
    return make_seed(make_quadruple(sym(1, 0, 0, 2), sym(-1, 0, 0, 2), sym(0, 0, 1, -1), sym(0, 2, 1, 3)), name);
  }
  if (name == "halfplane_golden") {
    const auto z = zigzag_seed();
    return make_seed(make_quadruple(z[0], z[1], z[2], zigzag_disk(2).symbol), name);
  }
  if (name == "plane_spiral") {
    Seed s = make_seed(spiral_quadruple(0), name);
    s.unbounded_by_construction = true;
    return s;
  }
  throw Error(ErrorKind::UnknownSeed, "unknown seed '" + name + "'");
}

DiskSymbol<FieldElement> complete_triple_exact(const DiskSymbol<FieldElement>& d1, const DiskSymbol<FieldElement>& d2,
                                               const DiskSymbol<FieldElement>& d3) {
  if (!norm_ok(d1) || !norm_ok(d2) || !norm_ok(d3) || !tangent(d1, d2) || !tangent(d2, d3) || !tangent(d1, d3)) {
    throw Error(ErrorKind::InvalidSeed, "seed disks are not pairwise tangent");
  }
  const DiskSymbol<FieldElement> sum = d1 + d2 + d3;
  DiskSymbol<FieldElement> offset;
  for (int c = 0; c < 4; ++c) {
    FieldElement radicand = d1(c) * d2(c) + d2(c) * d3(c) + d3(c) * d1(c);
    if (c == kXr || c == kYr) radicand += FieldElement(1);
    const auto root = sqrt_in_field(radicand);
    if (!root) throw Error(ErrorKind::NotRepresentable, "sqrt(" + to_pretty_string(radicand) + ") is not in K");
    offset(c) = FieldElement(2) * *root;
  }
  std::optional<DiskSymbol<FieldElement>> best;
  for (int mask = 0; mask < 16; ++mask) {
    DiskSymbol<FieldElement> d = sum;
    for (int c = 0; c < 4; ++c) d(c) += (mask >> c & 1) ? -offset(c) : offset(c);
    if (!norm_ok(d) || !tangent(d, d1) || !tangent(d, d2) || !tangent(d, d3)) continue;
    if (!best || d(kBeta) > (*best)(kBeta)) best = d;
  }
  if (!best) throw Error(ErrorKind::InvalidSeed, "no fourth disk found");
  return *best;
}

Seed seed_from_symbols(const std::vector<DiskSymbol<FieldElement>>& symbols) {
  if (symbols.size() == 4) return make_seed(make_quadruple(symbols[0], symbols[1], symbols[2], symbols[3]));
  if (symbols.size() != 3) throw Error(ErrorKind::InvalidSeed, "a seed needs 3 or 4 disks");
  const auto d4 = complete_triple_exact(symbols[0], symbols[1], symbols[2]);
  return make_seed(make_quadruple(symbols[0], symbols[1], symbols[2], d4));
}

Seed seed_from_symbols(const std::vector<DiskSymbol<double>>& symbols) {
  if (symbols.size() == 4) return make_seed(make_quadruple(symbols[0], symbols[1], symbols[2], symbols[3]));
  if (symbols.size() != 3) throw Error(ErrorKind::InvalidSeed, "a seed needs 3 or 4 disks");
  const auto [d4, other] = solve_fourth_float(symbols[0], symbols[1], symbols[2]);
  (void)other;
  return make_seed(make_quadruple(symbols[0], symbols[1], symbols[2], d4));
}

// --- Generation ------------------------------------------------------------------

namespace {

double significant(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return std::strtod(buf, nullptr);
}

struct FrontierItem {
  std::array<int, 4> idx;
  int replaced;
};

struct Candidate {
  bool skip = false;
  std::string key;
  PackedDisk disk;
};

template <class S>
struct Traits;

template <>
struct Traits<FieldElement> {
  static std::string key(const DiskSymbol<FieldElement>& d) { return symbol_key(d); }
  static DiskSymbol<double> approx(const DiskSymbol<FieldElement>& d) { return to_double(d); }
  static bool above(const FieldElement& beta, const std::optional<Rational>& bound) {
    return bound && beta > FieldElement(*bound);
  }
  static void store(PackedDisk& p, const DiskSymbol<FieldElement>& d) { p.exact = d; }
};

template <>
struct Traits<double> {
  // Heuristic dedup on a 1e-8 grid of (xr, yr, beta).
  static std::string key(const DiskSymbol<double>& d) {
    std::string k;
    for (int c = 0; c < 3; ++c) {
      k += std::to_string(std::llround(d(c) * 1e8));
      k += ',';
    }
    return k;
  }
  static DiskSymbol<double> approx(const DiskSymbol<double>& d) { return d; }
  static bool above(double beta, const std::optional<Rational>& bound) { return bound && beta > bound->get_d(); }
  static void store(PackedDisk&, const DiskSymbol<double>&) {}
};

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(1, n / 8));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w * chunk; i < std::min(n, (w + 1) * chunk); ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

template <class S>
Packing run(const PackingConfig& config, const Quadruple<S>& seed) {
  using T = Traits<S>;
  if (!extended_ok(seed)) throw Error(ErrorKind::InvalidSeed, "seed is not a Descartes configuration");

  Packing p;
  p.mode = config.mode;
  p.seed = config.seed;
  p.max_depth = config.max_depth;
  p.max_curvature = config.max_curvature;

  std::vector<DiskSymbol<S>> symbols;
  std::vector<std::string> keys;
  std::unordered_map<std::string, int> index;
  for (int c = 0; c < 4; ++c) {
    const DiskSymbol<S> d = seed.col(c);
    std::string key = T::key(d);
    if (!index.emplace(key, c).second) throw Error(ErrorKind::InvalidSeed, "seed contains a repeated disk");
    PackedDisk packed{T::approx(d), std::nullopt, 0};
    T::store(packed, d);
    p.disks.push_back(packed);
    symbols.push_back(d);
    keys.push_back(std::move(key));
  }
  std::set<std::array<int, 4>> seen{{0, 1, 2, 3}};
  p.quadruples.push_back({0, 1, 2, 3});
  p.per_depth.push_back(4);

  std::vector<FrontierItem> frontier{{{0, 1, 2, 3}, -1}};
  for (int depth = 1; !frontier.empty() && (!config.max_depth || depth <= *config.max_depth); ++depth) {
    std::vector<std::pair<std::size_t, int>> tasks;
    for (std::size_t f = 0; f < frontier.size(); ++f)
      for (int i = 0; i < 4; ++i)
        if (i != frontier[f].replaced) tasks.emplace_back(f, i);

    std::vector<Candidate> results(tasks.size());
    std::vector<DiskSymbol<S>> reflected(tasks.size());
    parallel_for(tasks.size(), config.threads, [&](std::size_t t) {
      const auto& item = frontier[tasks[t].first];
      Quadruple<S> q;
      for (int c = 0; c < 4; ++c) q.col(c) = symbols[static_cast<std::size_t>(item.idx[static_cast<std::size_t>(c)])];
      const DiskSymbol<S> d = reflected_disk(q, tasks[t].second);
      Candidate& out = results[t];
      if (T::above(d(kBeta), config.max_curvature)) {
        out.skip = true;
        return;
      }
      out.key = T::key(d);
      out.disk = PackedDisk{T::approx(d), std::nullopt, depth};
      T::store(out.disk, d);
      reflected[t] = d;
    });

    std::vector<FrontierItem> next;
    int added = 0;
    for (std::size_t t = 0; t < tasks.size() && !p.truncated; ++t) {
      if (results[t].skip) continue;
      int id;
      auto it = index.find(results[t].key);
      if (it != index.end()) {
        id = it->second;
      } else {
        if (p.disks.size() >= config.max_disks) {
          p.truncated = true;
          break;
        }
        id = static_cast<int>(p.disks.size());
        index.emplace(results[t].key, id);
        p.disks.push_back(std::move(results[t].disk));
        symbols.push_back(reflected[t]);
        keys.push_back(std::move(results[t].key));
        ++added;
      }
      std::array<int, 4> quad = frontier[tasks[t].first].idx;
      quad[static_cast<std::size_t>(tasks[t].second)] = id;
      std::array<int, 4> sorted = quad;
      std::sort(sorted.begin(), sorted.end());
      if (seen.insert(sorted).second) {
        p.quadruples.push_back(quad);
        next.push_back({quad, tasks[t].second});
      }
    }
    p.per_depth.push_back(added);
    frontier = std::move(next);
    if (p.truncated) break;
  }

  // Canonical order: depth, curvature, position, exact key.
  std::vector<int> order(p.disks.size());
  std::iota(order.begin(), order.end(), 0);
  // Coordinates are compared at 9 significant digits so exact and float runs agree on ties.
  std::vector<std::array<double, 3>> rank(p.disks.size());
  for (std::size_t i = 0; i < p.disks.size(); ++i) {
    const auto& d = p.disks[i].approx;
    rank[i] = {significant(d(kBeta)), significant(d(kXr)), significant(d(kYr))};
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto ia = static_cast<std::size_t>(a), ib = static_cast<std::size_t>(b);
    return std::tie(p.disks[ia].depth, rank[ia], keys[ia]) < std::tie(p.disks[ib].depth, rank[ib], keys[ib]);
  });
  std::vector<int> position(order.size());
  std::vector<PackedDisk> sorted;
  sorted.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    sorted.push_back(std::move(p.disks[static_cast<std::size_t>(order[i])]));
  }
  p.disks = std::move(sorted);
  for (auto& q : p.quadruples)
    for (auto& i : q) i = position[static_cast<std::size_t>(i)];
  return p;
}

void apply_viewport(Packing& p, const Viewport& v) {
  std::vector<int> position(p.disks.size(), -1);
  std::vector<PackedDisk> kept;
  for (std::size_t i = 0; i < p.disks.size(); ++i) {
    if (!intersects(p.disks[i], v)) continue;
    position[i] = static_cast<int>(kept.size());
    kept.push_back(p.disks[i]);
  }
  std::vector<std::array<int, 4>> quads;
  for (const auto& q : p.quadruples) {
    std::array<int, 4> r{};
    bool all = true;
    for (std::size_t c = 0; c < 4; ++c) {
      r[c] = position[static_cast<std::size_t>(q[c])];
      all = all && r[c] >= 0;
    }
    if (all) quads.push_back(r);
  }
  p.disks = std::move(kept);
  p.quadruples = std::move(quads);
}

}  // namespace

Packing generate(const PackingConfig& config) {
  if (!config.max_depth && !config.max_curvature) {
    throw Error(ErrorKind::InvalidConfig, "set max_depth or max_curvature");
  }
  if (config.max_depth && *config.max_depth < 0) throw Error(ErrorKind::InvalidConfig, "max_depth must be >= 0");
  Packing p;
  if (config.mode == Mode::exact) {
    if (!config.seed.exact) throw Error(ErrorKind::InvalidSeed, "seed has no exact symbols; use float mode");
    p = run<FieldElement>(config, *config.seed.exact);
  } else {
    p = run<double>(config, config.seed.approx);
  }
  if (config.viewport) apply_viewport(p, *config.viewport);
  return p;
}

bool intersects(const PackedDisk& d, const Viewport& v) {
  const auto& s = d.approx;
  if (s(kBeta) > 0) {
    const double r = 1.0 / s(kBeta);
    const double cx = s(kXr) * r, cy = s(kYr) * r;
    const double dx = std::max({v.xmin - cx, 0.0, cx - v.xmax});
    const double dy = std::max({v.ymin - cy, 0.0, cy - v.ymax});
    return dx * dx + dy * dy <= r * r;
  }
  if (s(kBeta) < 0) return true;
  const double offset = s(kGamma) / 2;
  double best = -INFINITY;
  for (double x : {v.xmin, v.xmax})
    for (double y : {v.ymin, v.ymax}) best = std::max(best, x * s(kXr) + y * s(kYr));
  return best >= offset;
}

// --- Classification --------------------------------------------------------------

Classification classify(const Packing& p) {
  if (p.disks.empty()) throw Error(ErrorKind::EmptyPacking, "packing has no disks");
  Classification c;
  c.unbounded_by_construction = p.seed.unbounded_by_construction;
  std::size_t argmin = 0;
  if (p.mode == Mode::exact) {
    for (std::size_t i = 0; i < p.disks.size(); ++i) {
      const FieldElement& b = (*p.disks[i].exact)(kBeta);
      const int s = sign(b);
      if (s == 0) ++c.zero_curvature_count;
      if (s < 0) ++c.negative_curvature_count;
      if (b < (*p.disks[argmin].exact)(kBeta)) argmin = i;
    }
    c.min_curvature = to_pretty_string((*p.disks[argmin].exact)(kBeta));
  } else {
    for (std::size_t i = 0; i < p.disks.size(); ++i) {
      const double b = p.disks[i].approx(kBeta);
      if (std::abs(b) <= 1e-12) {
        ++c.zero_curvature_count;
      } else if (b < 0) {
        ++c.negative_curvature_count;
      }
      if (b < p.disks[argmin].approx(kBeta)) argmin = i;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", p.disks[argmin].approx(kBeta));
    c.min_curvature = buf;
  }
  c.min_curvature_approx = p.disks[argmin].approx(kBeta);

  if (c.negative_curvature_count > 0) {
    c.type = PackingType::A;
  } else if (c.zero_curvature_count == 2) {
    c.type = PackingType::B;
  } else if (c.zero_curvature_count == 1) {
    c.type = PackingType::C;
  } else if (c.zero_curvature_count == 0 && c.unbounded_by_construction) {
    // Curvatures accumulate at 0 without reaching it; no finite enumeration can show this.
    c.type = PackingType::D;
    c.min_attained = false;
  } else {
    throw Error(ErrorKind::Inconclusive, "no rule applies: min curvature " + c.min_curvature + ", " +
                                             std::to_string(c.zero_curvature_count) + " zero-curvature disks");
  }
  return c;
}

std::vector<SpectrumEntry> curvature_spectrum(const Packing& p) {
  std::vector<SpectrumEntry> out;
  if (p.mode == Mode::exact) {
    std::map<std::string, SpectrumEntry> groups;
    for (const auto& d : p.disks) {
      const FieldElement& b = (*d.exact)(kBeta);
      auto [it, inserted] = groups.try_emplace(to_string(b), SpectrumEntry{b, d.approx(kBeta), 0});
      ++it->second.multiplicity;
    }
    for (auto& [key, entry] : groups) out.push_back(std::move(entry));
    std::sort(out.begin(), out.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) { return *a.exact < *b.exact; });
  } else {
    std::vector<double> betas;
    for (const auto& d : p.disks) betas.push_back(d.approx(kBeta));
    std::sort(betas.begin(), betas.end());
    for (double b : betas) {
      if (!out.empty() && std::abs(b - out.back().approx) <= 1e-9 * std::max(1.0, std::abs(b))) {
        ++out.back().multiplicity;
      } else {
        out.push_back({std::nullopt, b, 1});
      }
    }
  }
  return out;
}

// --- Verification ----------------------------------------------------------------

VerificationReport verify_packing(const Packing& p, double tol) {
  VerificationReport r;
  const bool exact = p.mode == Mode::exact;
  for (std::size_t i = 0; i < p.disks.size(); ++i) {
    ++r.disks_checked;
    const auto& d = p.disks[i];
    if (exact) {
      if (!d.exact) {
        r.violations.push_back("disk " + std::to_string(i) + ": missing exact symbol");
      } else if (!norm_ok(*d.exact)) {
        r.violations.push_back("disk " + std::to_string(i) + ": norm is not -1");
      }
    } else {
      const double scale = std::max(1.0, d.approx.cwiseAbs2().maxCoeff());
      const double res = std::abs(inner(d.approx, d.approx) + 1.0) / scale;
      r.max_residual = std::max(r.max_residual, res);
      if (!(res <= tol)) r.violations.push_back("disk " + std::to_string(i) + ": norm residual " + std::to_string(res));
    }
  }
  const int n = static_cast<int>(p.disks.size());
  for (std::size_t qi = 0; qi < p.quadruples.size(); ++qi) {
    ++r.quadruples_checked;
    const auto& idx = p.quadruples[qi];
    const std::string name = "quadruple " + std::to_string(qi);
    if (std::any_of(idx.begin(), idx.end(), [n](int i) { return i < 0 || i >= n; })) {
      r.violations.push_back(name + ": index out of range");
      continue;
    }
    if (exact) {
      if (std::any_of(idx.begin(), idx.end(), [&](int i) { return !p.disks[static_cast<std::size_t>(i)].exact; })) {
        continue;  // already reported
      }
      Quadruple<FieldElement> q;
      for (int c = 0; c < 4; ++c) q.col(c) = *p.disks[static_cast<std::size_t>(idx[static_cast<std::size_t>(c)])].exact;
      if (!extended_ok(q)) r.violations.push_back(name + ": M F M^T != G");
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
          if (!tangent(DiskSymbol<FieldElement>(q.col(a)), DiskSymbol<FieldElement>(q.col(b))))
            r.violations.push_back(name + ": columns " + std::to_string(a) + "," + std::to_string(b) + " not tangent");
    } else {
      Quadruple<double> q;
      for (int c = 0; c < 4; ++c) q.col(c) = p.disks[static_cast<std::size_t>(idx[static_cast<std::size_t>(c)])].approx;
      const double scale = descartes_scale(q);
      const double res = descartes_residual(q).cwiseAbs().maxCoeff() / scale;
      r.max_residual = std::max(r.max_residual, res);
      if (!(res <= tol)) r.violations.push_back(name + ": M F M^T residual " + std::to_string(res));
      for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
          const double t = std::abs(inner(DiskSymbol<double>(q.col(a)), DiskSymbol<double>(q.col(b))) - 1.0) / scale;
          r.max_residual = std::max(r.max_residual, t);
          if (!(t <= tol))
            r.violations.push_back(name + ": columns " + std::to_string(a) + "," + std::to_string(b) + " not tangent");
        }
      }
    }
  }
  return r;
}

}  // namespace apollo
