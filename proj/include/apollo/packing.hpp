#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "apollo/descartes.hpp"
#include "apollo/field.hpp"
#include "apollo/inversive.hpp"

namespace apollo {

enum class Mode { exact, floating };

const char* to_string(Mode mode);
Mode parse_mode(const std::string& text);

struct Viewport {
  double xmin = -1, ymin = -1, xmax = 1, ymax = 1;
  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
};

struct Seed {
  std::string name;  // builtin name, empty for user seeds
  /// Exact symbols; absent for seeds that only exist in floating point.
  std::optional<Quadruple<FieldElement>> exact;
  Quadruple<double> approx = Quadruple<double>::Zero();
  /// Set for constructions known to fill the plane without a zero-curvature disk.
  bool unbounded_by_construction = false;
};

/// window, belt, halfplane_golden, plane_spiral.
const std::vector<std::string>& builtin_seed_names();
/// Throws Error(UnknownSeed).
Seed builtin_seed(const std::string& name);
/// One-line description for `seeds`.
std::string describe_seed(const std::string& name);
Seed make_seed(const Quadruple<FieldElement>& q, std::string name = {});
Seed make_seed(const Quadruple<double>& q);
/// Three or four user symbols; a triple is completed by the larger-curvature fourth disk.
/// The exact overload throws Error(NotRepresentable) when completion leaves K.
Seed seed_from_symbols(const std::vector<DiskSymbol<FieldElement>>& symbols);
Seed seed_from_symbols(const std::vector<DiskSymbol<double>>& symbols);

/// Completes three exact pairwise tangent disks to a quadruple (larger curvature first).
/// Throws Error(NotRepresentable) when a square root leaves K, Error(InvalidSeed) if not tangent.
DiskSymbol<FieldElement> complete_triple_exact(const DiskSymbol<FieldElement>& d1, const DiskSymbol<FieldElement>& d2,
                                               const DiskSymbol<FieldElement>& d3);

struct PackingConfig {
  Seed seed;
  std::optional<int> max_depth;
  /// Disks with curvature above the bound are neither stored nor expanded.
  std::optional<Rational> max_curvature;
  /// Safety budget; generation stops and sets `truncated` when reached.
  std::size_t max_disks = 200000;
  /// Output-only filter: keep disks meeting the rectangle.
  std::optional<Viewport> viewport;
  Mode mode = Mode::exact;
  unsigned threads = 1;
};

struct PackedDisk {
  DiskSymbol<double> approx;
  std::optional<DiskSymbol<FieldElement>> exact;  // set in exact mode
  int depth = 0;
};

struct Packing {
  Mode mode = Mode::exact;
  Seed seed;
  std::optional<int> max_depth;
  std::optional<Rational> max_curvature;
  std::vector<PackedDisk> disks;
  /// Descartes quadruples as indices into `disks`.
  std::vector<std::array<int, 4>> quadruples;
  /// New disks per generation, the seed at index 0.
  std::vector<int> per_depth;
  bool truncated = false;
};

/// Breadth-first orbit of the seed under the four reflections. Output is ordered by depth,
/// then curvature, then position, independent of `threads`.
/// Throws Error(InvalidSeed) or Error(InvalidConfig).
Packing generate(const PackingConfig& config);

enum class PackingType { A, B, C, D };
const char* to_string(PackingType t);

struct Classification {
  PackingType type = PackingType::A;
  std::string min_curvature;  // exact string in exact mode, decimal otherwise
  double min_curvature_approx = 0;
  int zero_curvature_count = 0;
  int negative_curvature_count = 0;
  /// Whether the infimum of the curvatures is attained (false for type D).
  bool min_attained = true;
  bool unbounded_by_construction = false;
};

/// Evidence-based classifier; throws Error(Inconclusive) when no rule applies.
Classification classify(const Packing& p);

struct SpectrumEntry {
  std::optional<FieldElement> exact;
  double approx = 0;
  int multiplicity = 0;
};

/// Distinct curvatures in increasing order with multiplicities.
std::vector<SpectrumEntry> curvature_spectrum(const Packing& p);

struct VerificationReport {
  std::vector<std::string> violations;
  double max_residual = 0;  // float mode: largest relative residual seen
  std::size_t disks_checked = 0;
  std::size_t quadruples_checked = 0;
  bool ok() const { return violations.empty(); }
};

/// Norm of every disk, M F M^T = G and pairwise tangency of every stored quadruple.
VerificationReport verify_packing(const Packing& p, double tol = 1e-9);

bool intersects(const PackedDisk& d, const Viewport& v);

}  // namespace apollo
