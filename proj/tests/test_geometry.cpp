#include "overlap/complex_io.hpp"
#include "overlap/errors.hpp"
#include "overlap/geometry.hpp"

#include <doctest.h>

#include <random>

using namespace overlap;

namespace {

RationalPoint P(Rational x, Rational y) { return RationalPoint{{std::move(x), std::move(y)}}; }

std::vector<RationalPoint> hexagon() {
  // an affine image of the regular hexagon; its long diagonals still meet at one point
  return {P(1, 0), P(1, 1), P(0, 1), P(-1, 0), P(-1, -1), P(0, -1)};
}

std::vector<RationalPoint> transform(const std::vector<RationalPoint>& pts) {
  std::vector<RationalPoint> out;
  for (const auto& p : pts) out.push_back(P(Rational(3, 2) * p.coords[0] + 5, Rational(3, 2) * p.coords[1] - 7));
  return out;
}

}  // namespace

TEST_CASE("affine dimensions") {
  CHECK(affine_dimension({}) == -1);
  CHECK(affine_dimension({P(1, 1)}) == 0);
  CHECK(affine_dimension({P(0, 0), P(1, 1), P(2, 2)}) == 1);
  CHECK(affine_dimension({P(0, 0), P(1, 1), P(2, 3)}) == 2);
  CHECK(rational_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(hull_intersection_dimension({{P(0, 0), P(1, 0)}, {P(0, 1), P(1, 2)}}, 2) == 0);
  CHECK(hull_intersection_dimension({{P(0, 0), P(1, 0)}, {P(0, 1), P(1, 1)}}, 2) == -1);
  CHECK(hull_intersection_dimension({{P(0, 0), P(1, 0)}, {P(2, 0), P(3, 0)}}, 2) == 1);
}

TEST_CASE("subspaces in general position") {
  CHECK(subspaces_in_general_position({{P(0, 0), P(1, 0)}, {P(0, 1), P(1, 3)}}, 2));
  CHECK_FALSE(subspaces_in_general_position({{P(0, 0), P(1, 0)}, {P(0, 1), P(1, 1)}}, 2));
  // three concurrent lines: pairwise fine, the triple meets in a point instead of nowhere
  const std::vector<std::vector<RationalPoint>> concurrent{
      {P(0, 0), P(1, 0)}, {P(0, 0), P(0, 1)}, {P(0, 0), P(1, 1)}};
  CHECK(subspaces_in_general_position({concurrent[0], concurrent[1]}, 2));
  CHECK_FALSE(subspaces_in_general_position(concurrent, 2));
  std::vector<std::vector<RationalPoint>> scaled;
  for (const auto& s : concurrent) scaled.push_back(transform(s));
  CHECK_FALSE(subspaces_in_general_position(scaled, 2));
}

TEST_CASE("point sets in general position") {
  CHECK_FALSE(points_in_general_position(hexagon()));
  CHECK_FALSE(points_in_general_position(transform(hexagon())));
  CHECK_FALSE(points_in_general_position({P(0, 0), P(1, 1), P(2, 2)}));
  const std::vector<RationalPoint> generic{P(0, 0), P(7, 1), P(3, 6), P(2, 2), P(5, 3)};
  CHECK(points_in_general_position(generic) == points_in_general_position(transform(generic)));
  CHECK(points_in_general_position({P(0, 0), P(1, 0), P(0, 1)}));
  CHECK(points_in_general_position({P(0, 0), P(1, 0), P(0, 1), P(3, 5)}));
  CHECK_THROWS_AS(points_in_general_position(hexagon(), 3), BudgetExceeded);
}

TEST_CASE("planar convex sets") {
  const auto tri = ConvexSet2::hull({{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  CHECK(tri.dimension() == 2);
  CHECK(tri.vertices().size() == 3);
  CHECK(tri.contains({2, 2}));
  CHECK(tri.contains({0, 0}));
  CHECK_FALSE(tri.contains({3, 2}));
  const auto seg = ConvexSet2::hull({{-1, 1}, {5, 1}});
  CHECK(seg.dimension() == 1);
  const auto cut = tri.intersect(seg);
  CHECK(cut.dimension() == 1);
  CHECK(cut.contains({0, 1}));
  CHECK(cut.contains({3, 1}));
  CHECK_FALSE(cut.contains({Rational(31, 10), 1}));
  CHECK(ConvexSet2::hull({{1, 1}, {1, 1}}).dimension() == 0);
  CHECK(ConvexSet2().dimension() == -1);
  CHECK(tri.intersect(ConvexSet2::hull({{10, 10}})).empty());
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) > 0);
}

TEST_CASE("segment crossings") {
  const auto c = segment_crossing({0, 0}, {2, 2}, {0, 2}, {2, 0});
  REQUIRE(c);
  CHECK(*c == Point2{1, 1});
  CHECK_FALSE(segment_crossing({0, 0}, {1, 0}, {0, 1}, {1, 1}));
  CHECK_FALSE(segment_crossing({0, 0}, {1, 1}, {3, 0}, {2, 1}));
  CHECK(segment_crossing({0, 0}, {2, 0}, {1, 0}, {1, 5}));
}

TEST_CASE("strong general position of affine maps") {
  const auto x = read_complex_file(std::string(FIXTURE_DIR) + "/k4.cx");
  EuclideanMap f{1, {RationalPoint{{0}}, RationalPoint{{1}}, RationalPoint{{2}}, RationalPoint{{3}}}};
  CHECK(strongly_general_position_check(x, f).ok);
  f.images[3] = RationalPoint{{0}};
  const auto bad = strongly_general_position_check(x, f);
  CHECK_FALSE(bad.ok);
  CHECK(bad.intersection_dim > bad.bound);

  const auto s = read_complex_file(std::string(FIXTURE_DIR) + "/simplex4_2skel.cx");
  EuclideanMap g{2, {P(0, 0), P(7, 1), P(3, 6), P(2, 2), P(5, 3)}};
  const auto ok = strongly_general_position_check(s, g);
  EuclideanMap gs{2, transform(g.images)};
  CHECK(strongly_general_position_check(s, gs).ok == ok.ok);
  EuclideanMap collinear{2, {P(0, 0), P(1, 1), P(2, 2), P(2, 5), P(7, 1)}};
  CHECK_FALSE(strongly_general_position_check(s, collinear).ok);
}

TEST_CASE("perturbation is seeded and small") {
  EuclideanMap f{2, {P(0, 0), P(1, 1)}};
  std::mt19937_64 a(9), b(9);
  const auto g = perturb(f, 10, a);
  CHECK(g.images == perturb(f, 10, b).images);
  for (std::size_t i = 0; i < 2; ++i)
    for (int c = 0; c < 2; ++c) {
      const Rational diff = g.images[i].coords[c] - f.images[i].coords[c];
      CHECK(diff <= Rational(16, 1024));
      CHECK(diff >= Rational(-16, 1024));
    }
}
