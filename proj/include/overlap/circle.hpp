// The circle R/Z as a one-dimensional target: triangulations, maps of graphs
// into the circle given by lifted polylines, and crossing parities.
#pragma once

#include "overlap/complex.hpp"
#include "overlap/rational.hpp"

#include <random>
#include <span>
#include <vector>

namespace overlap {

/// x mod 1, in [0, 1).
Rational mod1(const Rational& x);

class CircleTriangulation {
 public:
  /// Strictly increasing points of [0, 1); at least three.
  explicit CircleTriangulation(std::vector<Rational> vertices);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Rational>& vertices() const { return vertices_; }
  /// Arc i runs from vertex i to vertex i+1; the last arc wraps through 0.
  /// Returned lifted as (lo, hi) with lo < hi.
  std::pair<Rational, Rational> arc(std::size_t i) const;
  /// Open-arc containment of x mod 1.
  bool arc_contains(std::size_t i, const Rational& x) const;
  bool is_vertex(const Rational& x) const;

  /// Vertices t0..t{n-1} and arcs a0..a{n-1} with a_i = {t_i, t_{i+1}}.
  ComplexSkeleton to_complex() const;

 private:
  std::vector<Rational> vertices_;
};

/// A map from a graph (the 1-skeleton of X) to the circle. Vertex images lie
/// in [0, 1); every edge carries a lifted polyline in R running from the
/// image of the edge's first vertex to the image of its second vertex
/// (equal mod 1 at both ends). A single-point path is a constant edge.
struct CircleMap {
  std::vector<Rational> images;
  std::vector<std::vector<Rational>> paths;
};

/// The shorter arc between two circle points as a lifted path. Antipodal
/// endpoints are ambiguous and rejected with ValidationError.
std::vector<Rational> geodesic_path(const Rational& from, const Rational& to);

/// Checks image ranges, path endpoints and non-degeneracy against X.
void validate_circle_map(const ComplexSkeleton& x, const CircleMap& f);

/// Parity of the number of times the path passes through v. Throws
/// GeneralPositionError if v coincides with a path vertex mod 1.
bool circle_crossing_parity(std::span<const Rational> path, const Rational& v);

/// Shifts each vertex image by m / 2^denom_exponent (m uniform in [-16, 16],
/// taken mod 1) and moves path endpoints along with it.
CircleMap perturb(const ComplexSkeleton& x, const CircleMap& f, int denom_exponent, std::mt19937_64& rng);

}  // namespace overlap
