#include "overlap/complex_io.hpp"
#include "overlap/errors.hpp"
#include "overlap/expansion.hpp"
#include "overlap/generators.hpp"

#include <doctest.h>

#include <map>

using namespace overlap;

namespace {

ComplexSkeleton load(const std::string& name) { return read_complex_file(std::string(FIXTURE_DIR) + "/" + name); }

// Direct enumeration of every cochain in C^{k-1}: cofilling ratio per coboundary.
Rational brute_cofilling(const ComplexSkeleton& x, const WeightedNorm& n, int k) {
  const std::size_t m = x.num_cells(k - 1);
  std::map<std::string, Rational> best;  // coboundary -> least cofilling norm
  std::map<std::string, BitVector> beta_of;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    BitVector a(m);
    for (std::size_t i = 0; i < m; ++i) a.set(i, (mask >> i) & 1);
    const auto b = x.coboundary(k).multiply(a);
    const auto key = b.to_string();
    const auto w = n.norm(k - 1, a);
    if (!best.count(key) || w < best[key]) best[key] = w;
    beta_of[key] = b;
  }
  Rational worst = 0;
  for (const auto& [key, w] : best) {
    if (beta_of[key].none()) continue;
    worst = std::max(worst, w / n.norm(k, beta_of[key]));
  }
  return worst;
}

}  // namespace

TEST_CASE("triangle graph constants") {
  const auto x = load("c3.cx");
  const auto n = WeightedNorm::hamming(x);
  CHECK(cofilling_constant(x, n, 1).value == ExtRational(Rational(1, 2)));
  CHECK(expansion_constant(x, n, 1).value == ExtRational(Rational(2)));
  CHECK(cosystole(x, n, 1).value == ExtRational(Rational(1, 3)));
  CHECK(cosystole(x, n, 0).value.is_infinite());
  CHECK(local_sparsity(x, n).value == 1);
  CHECK(betti_numbers(x) == std::vector<int>{0, 1});
  const auto rep = analyze(x, n);
  CHECK(rep.L == ExtRational(Rational(1, 2)));
  CHECK(rep.theta.is_infinite());  // only theta_0 enters for d = 1
  REQUIRE(rep.mu);
  CHECK(rep.mu->status == MuThreshold::Status::not_sparse_enough);
}

TEST_CASE("boundary of the tetrahedron") {
  const auto x = load("tetra_boundary.cx");
  const auto n = WeightedNorm::hamming(x);
  CHECK(betti_numbers(x) == std::vector<int>{0, 0, 1});
  CHECK(cosystole(x, n, 2).value == ExtRational(Rational(1, 4)));
  CHECK(cosystole(x, n, 1).value.is_infinite());
}

TEST_CASE("cofilling matches direct enumeration") {
  for (const char* name : {"c3.cx", "c4.cx", "k4.cx", "tetra_boundary.cx", "square.cx", "c3_plus_disk.cx"}) {
    const auto x = load(name);
    const auto n = WeightedNorm::hamming(x);
    for (int k = 1; k <= x.dim(); ++k) {
      if (x.num_cells(k - 1) > 16) continue;
      INFO(name << " k=" << k);
      CHECK(cofilling_constant(x, n, k).value == ExtRational(brute_cofilling(x, n, k)));
    }
  }
}

TEST_CASE("minimal cofillings are minimal") {
  const auto x = load("k4.cx");
  const auto n = WeightedNorm::hamming(x);
  const auto c = cofilling_constant(x, n, 1);
  CHECK(x.coboundary(1).multiply(c.minimal_cofilling) == c.worst_coboundary);
  CHECK(c.value.value() == n.norm(0, c.minimal_cofilling) / n.norm(1, c.worst_coboundary));
}

TEST_CASE("weighted cosystole of the triangle next to a disk") {
  const auto x = load("c3_plus_disk.cx");
  const auto w = parse_weights(x, read_text_file(std::string(FIXTURE_DIR) + "/c3_plus_disk.weights"));
  CHECK(cosystole(x, w, 1).value == ExtRational(Rational(1, 3)));
  CHECK(cosystole(x, WeightedNorm::hamming(x), 1).value == ExtRational(Rational(1, 6)));
  CHECK(betti_numbers(x) == std::vector<int>{1, 1, 0});
}

TEST_CASE("eta and L are reciprocal when the lower cohomology vanishes") {
  for (int n = 2; n <= 5; ++n) {
    const auto x = ComplexSkeleton::from_simplices(complete_skeleton(n, 2));
    const auto nm = WeightedNorm::hamming(x);
    for (int k = 1; k <= 2; ++k) {
      const auto L = cofilling_constant(x, nm, k).value;
      const auto eta = expansion_constant(x, nm, k).value;
      CHECK(L.value() * eta.value() == 1);
    }
  }
}

TEST_CASE("budget errors name the size") {
  const auto x = ComplexSkeleton::from_simplices(complete_skeleton(7, 1));
  CHECK_THROWS_AS(cofilling_constant(x, WeightedNorm::hamming(x), 1, 4), BudgetExceeded);
}

TEST_CASE("mu threshold") {
  const auto m = mu_threshold(1, Rational(1, 2), ExtRational(Rational(1, 3)), 0);
  CHECK(m.status == MuThreshold::Status::ok);
  CHECK(m.mu_max == Rational(1, 6));
  CHECK(m.s_table[0] == Rational(1, 6));
  CHECK(m.eps0_recursion_bound == Rational(1, 6));
  CHECK(m.quoted_bound == Rational(1, 3));
  CHECK(mu_threshold(1, 1, ExtRational(Rational(1, 3)), Rational(1, 2)).status ==
        MuThreshold::Status::not_sparse_enough);
  CHECK(mu_threshold(2, 1, ExtRational::infinity(), 0).theta_effective == 1);
  CHECK_THROWS_AS(mu_threshold(0, 1, ExtRational(Rational(1)), 0), std::invalid_argument);
  CHECK_THROWS_AS(mu_threshold(1, 0, ExtRational(Rational(1)), 0), std::invalid_argument);
}

TEST_CASE("budget recursion against the closed form") {
  for (int d = 1; d <= 4; ++d)
    for (const Rational L : {Rational(1, 2), Rational(1), Rational(3, 2)})
      for (const Rational mu : {Rational(1, 7), Rational(1, 100)}) {
        const auto zero_eps = budget_recursion(d, L, 0);
        for (int k = 0; k <= d; ++k) CHECK(zero_eps.at(k, mu) == budget_closed_form(d, k, L, 0, mu));
        const auto rec = budget_recursion(d, L, Rational(1, 10));
        for (int k = 0; k <= std::min(d, 1); ++k)
          CHECK(rec.at(k, mu) == budget_closed_form(d, k, L, Rational(1, 10), mu));
      }
  // with eps > 0 the published closed form undercounts from k = 2 on
  const auto rec = budget_recursion(2, 1, Rational(1, 10));
  CHECK(rec.at(2, 0) != budget_closed_form(2, 2, 1, Rational(1, 10), 0));
}
