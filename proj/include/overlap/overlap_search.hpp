// Exact overlap of affine maps X -> R^d, d in {1, 2}: the largest normed
// count of d-cell images sharing a point.
#pragma once

#include "overlap/complex.hpp"
#include "overlap/geometry.hpp"

#include <cstddef>
#include <vector>

namespace overlap {

struct PointValue {
  RationalPoint point;
  Rational value{0};
  std::vector<std::size_t> covering_cells;
};

struct OverlapResult {
  /// Maximum over all p of the closed-containment count; ties go to the
  /// lexicographically smallest witness among the candidates.
  PointValue closed;
  /// Maximum over points missing every (d-1)-cell image, where open and
  /// closed containment agree. This is the value seen by a generic point.
  PointValue generic;
  std::size_t candidates = 0;
};

/// Normed count of the d-cells whose closed image contains p.
PointValue overlap_at_point(const ComplexSkeleton& x, const EuclideanMap& f, const WeightedNorm& n,
                            const RationalPoint& p);

/// Candidates: every vertex and crossing of the segment arrangement formed by
/// the boundaries of the cell images, plus one point in every open face (the
/// midline of each vertical slab between consecutive arrangement x-values,
/// split between consecutive segment crossings), plus a far-away point.
/// Throws std::invalid_argument unless d is 1 or 2 and X has d-cells.
OverlapResult geometric_overlap(const ComplexSkeleton& x, const EuclideanMap& f, const WeightedNorm& n);

}  // namespace overlap
