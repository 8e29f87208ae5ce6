#include "overlap/complex_io.hpp"
#include "overlap/errors.hpp"
#include "overlap/expansion.hpp"
#include "overlap/homotopy.hpp"
#include "overlap/map_io.hpp"
#include "overlap/report.hpp"

#include <doctest.h>

using namespace overlap;

namespace {

const std::string kDir = FIXTURE_DIR;

ComplexSkeleton load(const std::string& name) { return read_complex_file(kDir + "/" + name); }

struct C4Fixture {
  ComplexSkeleton x = load("c4.cx");
  WeightedNorm n = WeightedNorm::hamming(x);
  ParsedMap parsed = read_map_file(x, kDir + "/c4_wrap.map");
  ComplexSkeleton t = parsed.triangulation->to_complex();
  ChainCochainMap f = transversal_pairing(x, std::get<CircleMap>(parsed.map), *parsed.triangulation);

  HomotopyParams params(Rational mu) const {
    HomotopyParams p;
    p.mu = std::move(mu);
    p.L = cofilling_constant(x, n, 1).value.value();
    p.eps = local_sparsity(x, n).value;
    for (int j = 0; j <= 1; ++j) p.theta.push_back(cosystole(x, n, j).value);
    return p;
  }
};

bool all_identities(const HomotopyRun& run) {
  for (const auto& st : run.steps)
    if (!st.identity_holds) return false;
  return true;
}

}  // namespace

TEST_CASE("base vertex") {
  C4Fixture c;
  const auto b = choose_base_vertex(c.f, c.t, c.n);
  CHECK(b.vertex == 0);
  CHECK(b.norm == Rational(1, 4));
  CHECK(choose_base_vertex(ChainCochainMap::zero(c.x, c.t, 1, 1), c.t, c.n).norm == 0);

  // a map that misses part of the circle
  const auto parsed = parse_map(c.x, "target: circle\nvertex 1: 1/16\nvertex 2: 3/16\nvertex 3: 5/16\n"
                                     "vertex 4: 7/16\nedge 4 1: 7/16 1/16\ntriangulation: 0 1/4 1/2 3/4\n");
  const auto m = transversal_pairing(c.x, std::get<CircleMap>(parsed.map), *parsed.triangulation);
  const auto b2 = choose_base_vertex(m, c.t, c.n);
  CHECK(b2.norm == 0);
  CHECK(b2.vertex == 0);
}

TEST_CASE("C4 wrapped once ends in the fundamental class contradiction") {
  C4Fixture c;
  for (const Rational mu : {Rational(1, 2), Rational(1, 8)}) {
    const auto run = build_homotopy(c.f, c.t, c.x, c.n, c.params(mu));
    CHECK(run.outcome == HomotopyOutcome::fundamental_class_contradiction);
    CHECK(run.finished);
    CHECK(all_identities(run));
    CHECK(verify_homotopy(c.f, run.g, run.h, c.t, c.x).ok);
    CHECK(run.f_fundamental == BitVector::ones(4));
    CHECK(run.homotopy_fundamental == run.f_fundamental);
    for (const auto& st : run.steps)
      if (st.k == 0) CHECK(st.cofilling_bound_holds);
  }
  // the premise fails below the smallest vertex value; budgets are missed on the way
  const auto low = build_homotopy(c.f, c.t, c.x, c.n, c.params(Rational(1, 8)));
  CHECK_FALSE(low.premise_holds);
  CHECK_FALSE(low.budget_violations.empty());
  auto halting = c.params(Rational(1, 8));
  halting.halt_on_budget = true;
  const auto stopped = build_homotopy(c.f, c.t, c.x, c.n, halting);
  CHECK(stopped.outcome == HomotopyOutcome::budget_obstruction);
  CHECK_FALSE(stopped.finished);
  REQUIRE(stopped.obstruction);
  CHECK(stopped.obstruction->k == 0);
}

TEST_CASE("traces are deterministic") {
  C4Fixture c;
  const auto a = dump(to_json(build_homotopy(c.f, c.t, c.x, c.n, c.params(Rational(1, 2))), c.t, c.x, c.n));
  const auto b = dump(to_json(build_homotopy(c.f, c.t, c.x, c.n, c.params(Rational(1, 2))), c.t, c.x, c.n));
  CHECK(a == b);
}

TEST_CASE("constant pairing completes with the zero homotopy") {
  C4Fixture c;
  ChainCochainMap g = ChainCochainMap::zero(c.x, c.t, 1, 1);
  for (std::size_t v = 0; v < c.t.num_cells(0); ++v) g.blocks[0].set(2, v);
  const auto run = build_homotopy(g, c.t, c.x, c.n, c.params(Rational(1, 2)));
  CHECK(run.outcome == HomotopyOutcome::completed);
  CHECK(run.h.blocks[0].is_zero());
  CHECK(run.h.blocks[1].is_zero());
  CHECK(verify_homotopy(g, run.g, run.h, c.t, c.x).ok);
}

TEST_CASE("cosystolic obstruction") {
  const auto x = load("c3_plus_disk.cx");
  const auto n = parse_weights(x, read_text_file(kDir + "/c3_plus_disk.weights"));
  const auto t = load("tetra_boundary.cx");
  const auto zeta = cosystole(x, n, 1);
  REQUIRE(zeta.value == ExtRational(Rational(1, 3)));
  // F(edge) = zeta on the edges at the first vertex of T, zero elsewhere
  auto f = ChainCochainMap::zero(x, t, 2, 2);
  const auto c = t.coboundary(1).multiply(BitVector::unit(t.num_cells(0), 0));
  for (std::size_t e = 0; e < t.num_cells(1); ++e)
    if (c.test(e))
      for (std::size_t i : zeta.witness.support()) f.blocks[1].set(i, e);
  REQUIRE(verify_chain_cochain(f, t, x).ok);

  HomotopyParams p;
  p.mu = Rational(1, 100);
  p.L = 1;
  p.eps = local_sparsity(x, n).value;
  const auto run = build_homotopy(f, t, x, n, p);
  CHECK(run.outcome == HomotopyOutcome::cosystolic_obstruction);
  REQUIRE(run.obstruction);
  CHECK(run.obstruction->k == 1);
  CHECK(run.obstruction->z == zeta.witness);
  CHECK(run.obstruction->norm_z == Rational(1, 3));
  CHECK(run.obstruction->theta == ExtRational(Rational(1, 3)));
  CHECK(run.obstruction->certificate_holds);
  CHECK_FALSE(run.finished);
}

TEST_CASE("verify_homotopy finds a damaged column") {
  C4Fixture c;
  const auto run = build_homotopy(c.f, c.t, c.x, c.n, c.params(Rational(1, 2)));
  auto h = run.h;
  bool damaged = false;
  for (std::size_t v = 0; v < c.t.num_cells(0) && !damaged; ++v)
    if (h.apply(0, v).any()) {
      for (std::size_t r = 0; r < h.blocks[0].rows(); ++r) h.blocks[0].set(r, v, false);
      damaged = true;
      const auto chk = verify_homotopy(c.f, run.g, h, c.t, c.x);
      CHECK_FALSE(chk.ok);
    }
  CHECK(damaged);
  CHECK(verify_homotopy(run.g, run.g, ChainCochainMap::zero(c.x, c.t, 1, 0), c.t, c.x).ok);
}

TEST_CASE("input errors") {
  C4Fixture c;
  const auto two_triangles = parse_complex("maximal_simplices: [[1,2],[2,3],[1,3],[4,5],[5,6],[4,6]]");
  CHECK_THROWS_AS(build_homotopy(ChainCochainMap::zero(c.x, two_triangles, 1, 1), two_triangles, c.x, c.n,
                                 c.params(Rational(1, 2))),
                  ValidationError);
  auto broken = c.f;
  broken.blocks[1].set(0, 0, !broken.blocks[1].get(0, 0));
  CHECK_THROWS_AS(build_homotopy(broken, c.t, c.x, c.n, c.params(Rational(1, 2))), ValidationError);
}
