#pragma once

#include <array>
#include <string>
#include <vector>

#include "apollo/descartes.hpp"
#include "apollo/field.hpp"
#include "apollo/inversive.hpp"

namespace apollo {

// --- Half-plane zigzag -----------------------------------------------------

struct ZigzagDisk {
  long n = 0;
  DiskSymbol<FieldElement> symbol;
};

/// D_n = (2 F_n phi^n, 1)/(2 phi^(2n), 2 F_n^2), tangent to the x-axis from above.
ZigzagDisk zigzag_disk(long n);
/// phi^(-2n)
FieldElement zigzag_diameter(long n);
/// Tangency point with the axis, F_n tau^n.
FieldElement zigzag_tangency(long n);
/// The upper half-plane (0,-1)/(0,0).
DiskSymbol<FieldElement> zigzag_line();
/// (line, D_0, D_1)
std::array<DiskSymbol<FieldElement>, 3> zigzag_seed();
/// (1/sqrt5, 0)
Point<FieldElement> zigzag_limit();

// --- Sextic ----------------------------------------------------------------

/// p^6 - 2p^5 - p^4 - 4p^3 - p^2 - 2p + 1
ComplexFieldElement sextic_eval(const ComplexFieldElement& p);
/// Coefficients of the sextic, constant term first.
std::vector<FieldElement> sextic_coefficients();
/// Expands (p^2 + 1)(p^2 - 2 phi p + 1)(p^2 + 2 tau p + 1) over K and compares with the sextic.
bool sextic_factorization_ok();
/// Polynomial product over K, constant term first.
std::vector<FieldElement> poly_mul(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b);

// --- Spiral ----------------------------------------------------------------

/// `theorem`: z_1 = 1 + rho lies on the positive real axis.
/// `figure`: every center rotated by omega, the orientation of the printed data table.
enum class SpiralFrame { theorem, figure };

struct SpiralDisk {
  long n = 0;
  FieldElement radius;
  ComplexFieldElement center;
  DiskSymbol<FieldElement> symbol;
};

/// r_n = rho^n, z_n = (1 + rho)((rho omega)^n - 1)/(rho omega - 1).
SpiralDisk spiral_disk(long n, SpiralFrame frame = SpiralFrame::theorem);
/// Columns spiral_disk(n), ..., spiral_disk(n + 3).
Quadruple<FieldElement> spiral_quadruple(long n, SpiralFrame frame = SpiralFrame::theorem);
/// z_{-inf} = (1 + rho)/(1 - rho omega).
ComplexFieldElement spiral_center();
/// z_n - z_{-inf} written as (1 + rho)(rho omega)^n/(rho omega - 1).
ComplexFieldElement spiral_recentered(long n);

struct SeedMismatch {
  std::string form;       // "complex" or "real"
  int symbol = 0;         // 1-based position in the printed triple
  std::string component;  // xr, yr, beta, gamma
  std::string printed;
  std::string derived;
};

struct SpiralSeedReport {
  /// (S(1), S(0), S(-1)): the printed order, outermost-curvature rho_bar first.
  std::array<DiskSymbol<FieldElement>, 3> symbols;
  bool norms_ok = false;
  bool pairwise_tangent = false;
  int compared = 0;
  std::vector<SeedMismatch> mismatches;
};

/// Seed derived from the spiral formulas, diffed against both printed seed forms.
SpiralSeedReport spiral_seed();

// --- Angles ----------------------------------------------------------------

struct TurnAngleReport {
  ComplexFieldElement minus_omega_conj;  // tau + sqrt(tau) i
  bool unit_modulus = false;
  bool real_part_is_tau = false;
  bool tan_squared_is_phi = false;
  /// The printed "cos theta = -tau" against the derived real part +tau.
  bool printed_cos_sign_conflict = false;
  double theta_degrees = 0;
};

TurnAngleReport turn_angle_checks();

/// 1 + phi = phi^2, and the right triangle cut from three consecutive spiral centers
/// has squared sides in ratio 1 : phi : phi^2.
bool kepler_triangle_ok();

struct WedgeLineCheck {
  long n = 0;
  int orientation = 0;  // +1 or -1: sign of the direction's x component
  // dist^2(center_n, L) - r_n^2 = a + b sqrt2
  FieldElement a;
  FieldElement b;
  bool tangent() const { return a.is_zero() && b.is_zero(); }
};

struct WedgeReport {
  bool zigzag_triangle_ok = false;  // 1 + (2 sqrt2)^2 = 3^2
  bool spiral_triangle_ok = false;  // 1 + (2 phi sqrt phi)^2 = (phi^3)^2
  FieldElement spiral_cosine;       // 1/phi^3
  std::vector<WedgeLineCheck> lines;
  /// True when one orientation of L is tangent to every checked zigzag disk.
  bool zigzag_inscribed = false;
};

/// Line L through (1/sqrt5, 0) with cos(alpha) = 1/3 against zigzag disks n in [from, to].
WedgeReport wedge_checks(long from = -8, long to = 8);

// --- Inversions of the zigzag picture ----------------------------------------

struct InversionPicture {
  EuclideanDisk<FieldElement> circle;      // circle of inversion
  EuclideanDisk<FieldElement> frame;       // image disk used as the normalized frame
  Point<FieldElement> image_of_limit;      // image of (1/sqrt5, 0)
  Point<FieldElement> image_of_infinity;   // center of the circle of inversion
  Point<FieldElement> normalized_limit;
  Point<FieldElement> normalized_infinity;
};

/// Frame coordinates ((x - cx)/r, (cy - y)/r) of an image disk.
Point<FieldElement> normalize_to_frame(const Point<FieldElement>& p, const EuclideanDisk<FieldElement>& frame);
/// Inversion in D_0: the half-plane picture lands inside D_0.
InversionPicture inversion_into_chain_disk();
/// Inversion in the unit circle centered (0, -1): the axis becomes the circle |z + i/2| = 1/2.
InversionPicture inversion_into_axis_disk();

}  // namespace apollo
