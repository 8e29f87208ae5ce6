// Exact rational geometry in R^d: affine hulls, general-position predicates,
// and planar convex sets used for images of cells under affine maps.
#pragma once

#include "overlap/complex.hpp"
#include "overlap/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <cstdint>
#include <random>
#include <vector>

namespace overlap {

struct RationalPoint {
  std::vector<Rational> coords;

  int dim() const { return static_cast<int>(coords.size()); }
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// Lexicographic order on coordinates; used for deterministic tie-breaks.
bool lex_less(const RationalPoint& a, const RationalPoint& b);
std::string to_string(const RationalPoint& p);

/// Rank of a rational matrix (rows of equal length), by exact elimination.
int rational_rank(std::vector<std::vector<Rational>> rows);

/// dim aff(points); -1 for the empty set.
int affine_dimension(const std::vector<RationalPoint>& points);

/// dim of the intersection of the affine hulls of the given point sets in
/// R^d; -1 when the intersection is empty.
int hull_intersection_dimension(const std::vector<std::vector<RationalPoint>>& point_sets, int d);

/// True iff every sub-collection A_1..A_r (r >= 2) of the affine hulls meets
/// with dim = max(-1, sum dim A_i - d (r - 1)).
bool subspaces_in_general_position(const std::vector<std::vector<RationalPoint>>& subspaces, int d);

/// True iff for every r >= 2 and pairwise disjoint nonempty S_1..S_r the
/// affine hulls are in general position. Enumerates all such families; throws
/// BudgetExceeded once more than 2^budget_log2 families would be examined.
bool points_in_general_position(const std::vector<RationalPoint>& points, int budget_log2 = 20);

// ------------------------------------------------------------------ plane

struct Point2 {
  Rational x;
  Rational y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

bool lex_less(const Point2& a, const Point2& b);

/// Twice the signed area of (a, b, c); positive for a counterclockwise turn.
Rational orient(const Point2& a, const Point2& b, const Point2& c);

/// A compact convex subset of the plane stored by its extreme points:
/// empty, a point, a segment (two endpoints) or a counterclockwise polygon.
class ConvexSet2 {
 public:
  ConvexSet2() = default;
  static ConvexSet2 hull(std::vector<Point2> points);

  bool empty() const { return vertices_.empty(); }
  int dimension() const;
  const std::vector<Point2>& vertices() const { return vertices_; }
  /// Closed containment.
  bool contains(const Point2& p) const;
  ConvexSet2 intersect(const ConvexSet2& other) const;

 private:
  std::vector<Point2> vertices_;
};

/// Intersection point of closed segments [a,b] and [c,d] when they are not
/// parallel and meet; parallel or collinear pairs report nothing.
std::optional<Point2> segment_crossing(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

// ------------------------------------------------------------ affine maps

/// Simplexwise-linear map X -> R^d given by vertex images (indexed like the
/// 0-cells of X). A cell maps onto the convex hull of its vertex images.
struct EuclideanMap {
  int target_dim = 1;
  std::vector<RationalPoint> images;
};

/// Image of a cell as a planar convex set (R^1 embeds as the x-axis).
ConvexSet2 cell_image(const ComplexSkeleton& x, const EuclideanMap& f, int k, std::size_t cell);

struct GeneralPositionCheck {
  bool ok = true;
  /// First violating tuple of pairwise disjoint cells, as (dim, index).
  std::vector<std::pair<int, std::size_t>> violation;
  int intersection_dim = -1;
  int bound = -1;
  std::uint64_t tuples_examined = 0;
};

/// For all r >= 1 and pairwise vertex-disjoint cells sigma_1..sigma_r:
/// dim(f(sigma_1) ∩ ... ∩ f(sigma_r)) <= max(-1, sum dim sigma_i - d (r - 1)).
/// Supports d in {1, 2}; throws std::invalid_argument otherwise.
GeneralPositionCheck strongly_general_position_check(const ComplexSkeleton& x, const EuclideanMap& f,
                                                     int budget_log2 = 20);

/// Adds an independent offset m / 2^denom_exponent, m uniform in [-16, 16],
/// to every coordinate of every vertex image.
EuclideanMap perturb(const EuclideanMap& f, int denom_exponent, std::mt19937_64& rng);

}  // namespace overlap
