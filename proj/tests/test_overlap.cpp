#include "overlap/complex_io.hpp"
#include "overlap/map_io.hpp"
#include "overlap/overlap_search.hpp"

#include <doctest.h>

#include <random>

using namespace overlap;

namespace {

const std::string kDir = FIXTURE_DIR;

EuclideanMap load_map(const ComplexSkeleton& x, const std::string& name) {
  return std::get<EuclideanMap>(read_map_file(x, kDir + "/" + name).map);
}

EuclideanMap affine(const EuclideanMap& f) {
  EuclideanMap g = f;
  for (auto& p : g.images) {
    if (p.dim() == 1) {
      p.coords[0] = Rational(-5, 3) * p.coords[0] + 2;
    } else {
      const Rational a = p.coords[0], b = p.coords[1];
      p.coords = {2 * a + b + 1, a - 3 * b};  // determinant -7
    }
  }
  return g;
}

}  // namespace

TEST_CASE("K4 on a line") {
  const auto x = read_complex_file(kDir + "/k4.cx");
  const auto n = WeightedNorm::hamming(x);
  const auto f = load_map(x, "k4_line.map");
  const auto r = geometric_overlap(x, f, n);
  // closed images: the point 1 lies on five of the six edges
  CHECK(r.closed.value == Rational(5, 6));
  CHECK(r.closed.point == RationalPoint{{1}});
  CHECK(r.closed.covering_cells.size() == 5);
  // off the vertex images the best is the middle interval
  CHECK(r.generic.value == Rational(2, 3));
  CHECK(r.generic.point == RationalPoint{{Rational(3, 2)}});
  const auto at = overlap_at_point(x, f, n, RationalPoint{{Rational(3, 2)}});
  CHECK(at.value == Rational(2, 3));
  CHECK(at.covering_cells.size() == 4);
  CHECK(overlap_at_point(x, f, n, RationalPoint{{Rational(10)}}).value == 0);
  CHECK(overlap_at_point(x, f, n, RationalPoint{{Rational(0)}}).covering_cells.size() == 3);
}

TEST_CASE("single edge") {
  const auto x = ComplexSkeleton::from_simplices({{"a", "b"}});
  const auto n = WeightedNorm::hamming(x);
  const EuclideanMap f{1, {RationalPoint{{2}}, RationalPoint{{5}}}};
  CHECK(geometric_overlap(x, f, n).closed.value == 1);
  CHECK(geometric_overlap(x, f, n).generic.value == 1);
  CHECK(overlap_at_point(x, f, n, RationalPoint{{Rational(7, 2)}}).value == 1);
}

TEST_CASE("2-skeleton of the 4-simplex in the plane") {
  const auto x = read_complex_file(kDir + "/simplex4_2skel.cx");
  const auto n = WeightedNorm::hamming(x);
  const auto f = load_map(x, "simplex4_plane.map");
  const auto r = geometric_overlap(x, f, n);
  // re-check the witness
  CHECK(overlap_at_point(x, f, n, r.closed.point).value == r.closed.value);
  CHECK(r.generic.value <= r.closed.value);
  CHECK(boost::multiprecision::denominator(Rational(r.closed.value * 10)) == 1);
  // affine images give the same values
  const auto g = affine(f);
  const auto rg = geometric_overlap(x, g, n);
  CHECK(rg.closed.value == r.closed.value);
  CHECK(rg.generic.value == r.generic.value);
  // no sampled point beats the maximum
  std::mt19937_64 rng(77);
  for (int i = 0; i < 400; ++i) {
    RationalPoint p{{Rational(static_cast<long long>(rng() % 1000), 128),
                     Rational(static_cast<long long>(rng() % 1000), 128)}};
    CHECK(overlap_at_point(x, f, n, p).value <= r.closed.value);
  }
}

TEST_CASE("collapsed images use closed containment") {
  const auto x = ComplexSkeleton::from_simplices({{"1", "2", "3"}, {"2", "3", "4"}});
  const auto n = WeightedNorm::hamming(x);
  // the first triangle collapses onto a segment
  const EuclideanMap f{2, {RationalPoint{{0, 0}}, RationalPoint{{1, 1}}, RationalPoint{{2, 2}},
                           RationalPoint{{3, 0}}}};
  const auto r = geometric_overlap(x, f, n);
  CHECK(r.closed.value == 1);
  CHECK(r.generic.value == Rational(1, 2));
}

TEST_CASE("unsupported targets") {
  const auto x = read_complex_file(kDir + "/k4.cx");
  const auto n = WeightedNorm::hamming(x);
  EuclideanMap f{3, std::vector<RationalPoint>(4, RationalPoint{{0, 0, 0}})};
  CHECK_THROWS_AS(geometric_overlap(x, f, n), std::invalid_argument);
  EuclideanMap g{2, std::vector<RationalPoint>(4, RationalPoint{{0, 0}})};
  CHECK_THROWS_AS(geometric_overlap(x, g, n), std::invalid_argument);  // no 2-cells
}
