// Map files: vertex images in R^1, R^2 or on the circle R/Z.
//
//   target: circle            # or R1, R2
//   vertex 1: 1/8             # one line per vertex of X, d coordinates
//   edge 1 2: 1/8 3/8         # circle only: lifted polyline for an edge,
//   edge e7: 7/8 9/8          #   by endpoints or by cell name; edges
//                             #   without a line take the shorter arc
//   triangulation: 0 1/3 2/3  # circle only, optional
#pragma once

#include "overlap/circle.hpp"
#include "overlap/complex.hpp"
#include "overlap/geometry.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace overlap {

struct ParsedMap {
  std::variant<EuclideanMap, CircleMap> map;
  std::optional<CircleTriangulation> triangulation;

  bool is_circle() const { return std::holds_alternative<CircleMap>(map); }
};

ParsedMap parse_map(const ComplexSkeleton& x, std::string_view text);
ParsedMap read_map_file(const ComplexSkeleton& x, const std::string& path);

std::string format_map(const ComplexSkeleton& x, const EuclideanMap& f);
std::string format_map(const ComplexSkeleton& x, const CircleMap& f, const CircleTriangulation* t = nullptr);

}  // namespace overlap
