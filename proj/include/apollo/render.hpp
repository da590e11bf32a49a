#pragma once

#include <optional>
#include <string>

#include "apollo/chains.hpp"
#include "apollo/packing.hpp"

namespace apollo {

enum class LabelMode { none, curvature, symbol };
LabelMode parse_label_mode(const std::string& text);

struct RenderOptions {
  std::optional<Viewport> viewport;  // fitted to the packing when absent
  int width_px = 800;
  int height_px = 800;
  LabelMode labels = LabelMode::curvature;
  int decimal_digits = 3;
  /// Disks with a smaller on-screen radius are skipped.
  double min_px = 0.25;
  std::string fill = "#e8eef7";
  std::string stroke = "#1d3557";
  double stroke_width = 0.75;
};

/// Bounding box of the outer disk if there is one, else of the bounded seed disks, padded by 5%.
Viewport auto_viewport(const Packing& p);

/// Curvature as an integer when integral, else a correctly rounded decimal.
std::string curvature_label(const PackedDisk& d, int digits);

/// SVG 1.1 document with the y axis pointing up. Identical inputs give identical bytes.
/// Throws Error(EmptyPacking) or Error(InvalidConfig) for a degenerate viewport or size.
std::string render_svg(const Packing& p, const RenderOptions& o);

enum class ChainKind { zigzag, spiral };

/// One row per index: exact symbol followed by decimals.
std::string chain_table(ChainKind kind, long from, long to, int digits, SpiralFrame frame = SpiralFrame::theorem);

/// Golden constants with their check results.
std::string constants_report(int digits);

}  // namespace apollo
