// Text formats for complexes and cell weights.
//
// Complex file, simplicial form (entries may be non-maximal; the downward
// closure is taken; the array may span several lines):
//
//   # triangle graph
//   maximal_simplices: [[1,2],[2,3],[1,3]]
//
// Complex file, polyhedral form. Every k-cell with k >= 1 needs exactly one
// incidence line listing its (k-1)-faces:
//
//   cells0: a b c d
//   cells1: ab bc cd da
//   cells2: square
//   incidence1: ab -> a b
//   ...
//   incidence2: square -> ab bc cd da
//
// Weights file, one line per cell; unlisted cells weigh 0 and every
// dimension must sum to 1:
//
//   weight 1 1,2 1/3
#pragma once

#include "overlap/complex.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace overlap {

ComplexSkeleton parse_complex(std::string_view text);
ComplexSkeleton read_complex_file(const std::string& path);

WeightedNorm parse_weights(const ComplexSkeleton& x, std::string_view text);

/// Writes the simplicial form, one simplex per line inside the array.
std::string format_simplices(const std::vector<std::vector<std::string>>& simplices);

std::string read_text_file(const std::string& path);

/// Splits into lines with comments ('#' to end of line) removed.
std::vector<std::string> logical_lines(std::string_view text);
std::vector<std::string> split_ws(std::string_view s);
std::string_view trim(std::string_view s);

}  // namespace overlap
