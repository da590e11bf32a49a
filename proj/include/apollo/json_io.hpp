#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "apollo/packing.hpp"

namespace apollo {

inline constexpr int kFormatVersion = 1;

/// Packing document, schema "format_version": 1. Exact mode writes canonical coefficient
/// strings (lossless) plus decimal approximations; float mode writes numbers only.
std::string export_json(const Packing& p);
/// Throws Error(ParseError) with the byte offset or JSON pointer of the problem.
Packing import_json(std::string_view text);

/// Seed file: {"seed": [3 or 4 symbols]} with string (exact) or numeric (float) entries.
using SeedSymbols = std::variant<std::vector<DiskSymbol<FieldElement>>, std::vector<DiskSymbol<double>>>;
SeedSymbols parse_seed_file(std::string_view text);

}  // namespace apollo
