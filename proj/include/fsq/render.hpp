#pragma once

#include <string>

#include "fsq/digit_set.hpp"
#include "fsq/oracle.hpp"

namespace fsq {

enum class PbmFormat { kBinary /* P4 */, kAscii /* P1 */ };

/// Portable bitmap of the grid, present cells black. The first row of the
/// file is the top of the picture (b = side - 1).
std::string render_pbm(const CellGrid& grid, PbmFormat format = PbmFormat::kBinary);

/// SVG 1.1 with one unit rect per labelled cell, coloured by component id
/// from a fixed palette. Unlabelled cells are left blank.
std::string render_components_svg(const LabelledGrid& grid);

}  // namespace fsq
