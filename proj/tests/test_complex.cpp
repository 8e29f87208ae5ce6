#include "overlap/complex.hpp"
#include "overlap/complex_io.hpp"
#include "overlap/errors.hpp"
#include "overlap/generators.hpp"

#include <doctest.h>

using namespace overlap;

namespace {

ComplexSkeleton load(const std::string& name) { return read_complex_file(std::string(FIXTURE_DIR) + "/" + name); }

void check_dd_zero(const ComplexSkeleton& x) {
  for (int k = 0; k <= x.dim(); ++k) CHECK(x.coboundary(k + 1).multiply(x.coboundary(k)).is_zero());
}

}  // namespace

TEST_CASE("simplicial closure and ordering") {
  const auto x = ComplexSkeleton::from_simplices({{"1", "2", "3"}, {"3", "4"}});
  CHECK(x.dim() == 2);
  CHECK(x.num_cells(-1) == 1);
  CHECK(x.num_cells(0) == 4);
  CHECK(x.num_cells(1) == 4);
  CHECK(x.num_cells(2) == 1);
  CHECK(x.num_cells(3) == 0);
  CHECK(x.cell(0, 0).name == "1");
  CHECK(x.find(1, "3,4").has_value());
  CHECK(x.find(1, "1,2,3") == std::nullopt);
  CHECK(x.is_simplicial());
  check_dd_zero(x);
  // augmentation: every vertex is incident to the empty cell
  CHECK(x.coboundary(0).column(0) == BitVector::ones(4));
}

TEST_CASE("polyhedral square") {
  const auto x = load("square.cx");
  CHECK(x.dim() == 2);
  CHECK_FALSE(x.is_simplicial());
  CHECK(x.cell(2, 0).vertices.size() == 4);
  check_dd_zero(x);
  // opposite edges of the square do not meet
  CHECK_FALSE(x.cells_meet(1, *x.find(1, "ab"), 1, *x.find(1, "cd")));
  CHECK(x.cells_meet(1, *x.find(1, "ab"), 1, *x.find(1, "bc")));
}

TEST_CASE("polyhedral validation") {
  CHECK_THROWS_AS(parse_complex("cells0: a b\ncells1: e\nincidence1: e -> a\n"), ValidationError);
  CHECK_THROWS_AS(parse_complex("cells0: a b\ncells1: e\nincidence1: e -> a z\n"), ValidationError);
  CHECK_THROWS_AS(parse_complex("cells0: a b\ncells1: e\n"), ValidationError);
  CHECK_THROWS_AS(parse_complex("cells0: a a\n"), ValidationError);
  // a 2-cell whose boundary is not a cycle
  CHECK_THROWS_AS(parse_complex("cells0: a b c\ncells1: x y\ncells2: f\nincidence1: x -> a b\n"
                                "incidence1: y -> b c\nincidence2: f -> x y\n"),
                  ValidationError);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_complex("# c\n\nbogus: 1\n");
    FAIL("no error");
  } catch (const ValidationError& e) {
    CHECK(e.line() == 3);
  }
  try {
    parse_complex("maximal_simplices: [[1,2],\n [2,\n");
    FAIL("no error");
  } catch (const ValidationError& e) {
    CHECK(e.line() >= 1);
  }
  CHECK_THROWS_AS(parse_complex(""), ValidationError);
  CHECK_THROWS_AS(load("empty.cx"), ValidationError);
  CHECK_THROWS_AS(parse_complex("maximal_simplices: [[1,1]]"), ValidationError);
  CHECK_THROWS_AS(read_complex_file("/nonexistent/file.cx"), ValidationError);
}

TEST_CASE("multi-line simplex list and string labels") {
  const auto x = parse_complex("maximal_simplices: [\n  [\"a\", \"b\"],\n  [\"b\", 7]\n]\n");
  CHECK(x.num_cells(0) == 3);
  CHECK(x.find(0, "7").has_value());
  const auto again = parse_complex(format_simplices({{"a", "b"}, {"b", "7"}}));
  CHECK(again.num_cells(1) == 2);
}

TEST_CASE("coboundary matrices and their views") {
  const auto x = load("c3.cx");
  CHECK(coboundary_matrix(x, 0).cols() == 1);
  CHECK(coboundary_matrix(x, 0, Augmentation::non_augmented).cols() == 0);
  CHECK(boundary_matrix(x, 1).rows() == 3);
  CHECK(boundary_matrix(x, 1).cols() == 3);
  CHECK_THROWS_AS(coboundary_matrix(x, 2), std::out_of_range);
  CHECK_THROWS_AS(coboundary_matrix(x, -1), std::out_of_range);
  CHECK(cocycle_basis(x, 0).size() == 1);     // constants
  CHECK(coboundary_basis(x, 0).size() == 1);  // reduced: constants are coboundaries
  CHECK(cocycle_basis(x, 1).size() == 3);
  CHECK(coboundary_basis(x, 1).size() == 2);
}

TEST_CASE("incidence cochains") {
  const auto x = load("c4.cx");
  const auto v1 = *x.find(0, "1");
  CHECK(incidence_cochain(x, 0, v1, 1).bits.count() == 2);
  CHECK(incidence_cochain(x, 0, v1, 0).bits.count() == 1);
  CHECK(incidence_cochain(x, 1, 0, 1).bits.count() == 3);
  CHECK_THROWS(incidence_cochain(x, -1, 0, 0));
}

TEST_CASE("weighted norms") {
  const auto x = load("c3_plus_disk.cx");
  const auto h = WeightedNorm::hamming(x);
  CHECK(h.is_hamming());
  CHECK(h.norm(1, BitVector::ones(6)) == 1);
  CHECK(h.norm(Cochain::ones(x, 0)) == 1);
  CHECK(h.norm(-1, BitVector::ones(1)) == 1);
  const auto w = parse_weights(x, read_text_file(std::string(FIXTURE_DIR) + "/c3_plus_disk.weights"));
  CHECK_FALSE(w.is_hamming());
  CHECK(w.norm(1, BitVector::unit(6, 0)) == Rational(1, 3));
  CHECK(w.norm(1, BitVector::unit(6, 5)) == 0);
  // monotone in the support
  BitVector a(6), b(6);
  a.set(0);
  b.set(0);
  b.set(4);
  CHECK(w.norm(1, a) <= w.norm(1, b));
  CHECK_THROWS_AS(parse_weights(x, "weight 0 1 1\nweight 1 1,2 1\nweight 2 4,5,6 1/2\n"), ValidationError);
  CHECK_THROWS_AS(parse_weights(x, "weight 0 9 1\n"), ValidationError);
  CHECK_THROWS_AS(WeightedNorm::from_weights(x, {{-1, 1, 1, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {1}}), ValidationError);
}

TEST_CASE("rank-nullity on generated complexes") {
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= n; ++d) {
      const auto x = ComplexSkeleton::from_simplices(complete_skeleton(n, d));
      check_dd_zero(x);
      for (int k = 0; k <= x.dim(); ++k) {
        const auto& m = x.coboundary(k);
        CHECK(rank(m) + kernel_basis(m).size() == m.cols());
      }
    }
}
