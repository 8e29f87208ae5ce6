#include "overlap/homotopy.hpp"

#include "overlap/errors.hpp"
#include "overlap/expansion.hpp"

#include <deque>
#include <stdexcept>

namespace overlap {

namespace {

// H(boundary tau) + delta H(tau) for a k-cell tau.
BitVector homotopy_side(const ChainCochainMap& h, const ComplexSkeleton& t, const ComplexSkeleton& x, int k,
                        std::size_t tau) {
  const int q = h.top + 1 - k;  // degree of F(tau)
  BitVector out = x.coboundary(q).multiply(h.apply(k, tau));
  if (k > 0)
    for (std::size_t face : t.cell(k, tau).faces) out ^= h.apply(k - 1, face);
  return out;
}

void set_column(GF2Matrix& m, std::size_t c, const BitVector& v) {
  for (std::size_t r = 0; r < m.rows(); ++r) m.set(r, c, v.test(r));
}

// Per vertex, the edge to its parent in a breadth-first tree from root.
std::vector<std::optional<std::size_t>> bfs_tree(const ComplexSkeleton& t, std::size_t root) {
  const std::size_t nv = t.num_cells(0);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nv);
  for (std::size_t e = 0; e < t.num_cells(1); ++e) {
    const auto& fs = t.cell(1, e).faces;
    if (fs.size() != 2) continue;
    adj[fs[0]].emplace_back(fs[1], e);
    adj[fs[1]].emplace_back(fs[0], e);
  }
  std::vector<std::optional<std::size_t>> parent(nv);
  std::vector<bool> seen(nv, false);
  seen[root] = true;
  std::deque<std::size_t> queue{root};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (const auto& [w, e] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = e;
      queue.push_back(w);
    }
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (!seen[v]) throw ValidationError("the target triangulation is disconnected: '" + t.cell(0, v).name +
                                        "' is not reachable from '" + t.cell(0, root).name + "'");
  return parent;
}

}  // namespace

std::string to_string(HomotopyOutcome o) {
  switch (o) {
    case HomotopyOutcome::completed:
      return "Completed";
    case HomotopyOutcome::cosystolic_obstruction:
      return "CosystolicObstruction";
    case HomotopyOutcome::budget_obstruction:
      return "BudgetObstruction";
    case HomotopyOutcome::fundamental_class_contradiction:
      return "FundamentalClassContradiction";
  }
  return "?";
}

BaseVertex choose_base_vertex(const ChainCochainMap& f, const ComplexSkeleton& t, const WeightedNorm& n) {
  if (t.num_cells(0) == 0) throw std::invalid_argument("the triangulation has no vertices");
  BaseVertex best{0, n.norm(f.top, f.apply(0, 0))};
  for (std::size_t v = 1; v < t.num_cells(0); ++v) {
    Rational w = n.norm(f.top, f.apply(0, v));
    if (w < best.norm) best = {v, std::move(w)};
  }
  return best;
}

ChainCochainMap constant_map(const ChainCochainMap& f, const ComplexSkeleton& t, const ComplexSkeleton& x,
                             std::size_t v0) {
  ChainCochainMap g = ChainCochainMap::zero(x, t, f.d, f.top);
  const BitVector base = f.apply(0, v0);
  for (std::size_t v = 0; v < t.num_cells(0); ++v) set_column(g.blocks[0], v, base);
  return g;
}

ChainCochainCheck verify_homotopy(const ChainCochainMap& f, const ChainCochainMap& g, const ChainCochainMap& h,
                                  const ComplexSkeleton& t, const ComplexSkeleton& x) {
  for (int k = 0; k <= f.d; ++k)
    for (std::size_t tau = 0; tau < t.num_cells(k); ++tau)
      if ((f.apply(k, tau) ^ g.apply(k, tau)) != homotopy_side(h, t, x, k, tau)) return {false, k, tau};
  return {};
}

HomotopyRun build_homotopy(const ChainCochainMap& f, const ComplexSkeleton& t, const ComplexSkeleton& x,
                           const WeightedNorm& n, const HomotopyParams& params) {
  check_shape(f, x, t);
  if (f.top != f.d) throw ValidationError("the pairing must map k-chains to (d-k)-cochains");
  if (f.d < 1) throw ValidationError("the target must have dimension at least 1");
  if (auto c = verify_chain_cochain(f, t, x); !c.ok)
    throw ValidationError("the pairing is not a chain-cochain map at " + std::to_string(c.k) + "-cell '" +
                          t.cell(c.k, c.tau).name + "'");
  if (!params.theta.empty() && static_cast<int>(params.theta.size()) != f.d + 1)
    throw std::invalid_argument("theta must list one value per degree 0..d");

  const int d = f.d;
  HomotopyRun run;
  run.d = d;
  run.base = choose_base_vertex(f, t, n);
  run.premise_holds = run.base.norm < params.mu;
  const auto rec = budget_recursion(d, params.L, params.eps);
  for (int k = 0; k <= d; ++k) run.budgets.push_back(rec.at(static_cast<std::size_t>(k), params.mu));
  run.g = constant_map(f, t, x, run.base.vertex);
  run.h = ChainCochainMap::zero(x, t, d, d - 1);
  const auto parent = bfs_tree(t, run.base.vertex);

  auto theta_of = [&](int j) -> ExtRational {
    if (!params.theta.empty()) return params.theta[static_cast<std::size_t>(j)];
    return cosystole(x, n, j, params.max_coset_dim).value;
  };

  // particular cofilling of F(v) - F(v0): F of the tree path from v0 to v
  const std::size_t nv = t.num_cells(0);
  std::vector<std::optional<BitVector>> path_value(nv);
  path_value[run.base.vertex] = BitVector(x.num_cells(d - 1));
  auto path_cofilling = [&](std::size_t v) {
    std::vector<std::size_t> chain;
    std::size_t cur = v;
    while (!path_value[cur]) {
      chain.push_back(cur);
      const auto& fs = t.cell(1, *parent[cur]).faces;
      cur = fs[0] == cur ? fs[1] : fs[0];
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      const auto& fs = t.cell(1, *parent[*it]).faces;
      const std::size_t up = fs[0] == *it ? fs[1] : fs[0];
      path_value[*it] = *path_value[up] ^ f.apply(1, *parent[*it]);
    }
    return *path_value[v];
  };

  for (int k = 0; k <= d && !run.finished; ++k) {
    const int q = d - k;  // degree of z
    const auto cocycles = q - 1 >= 0 ? cocycle_basis(x, q - 1) : std::vector<BitVector>{};
    const GF2Matrix& delta = x.coboundary(q);
    bool halted = false;
    for (std::size_t tau = 0; tau < t.num_cells(k); ++tau) {
      HomotopyStep st;
      st.k = k;
      st.tau = tau;
      st.z = f.apply(k, tau) ^ run.g.apply(k, tau);
      if (k > 0)
        for (std::size_t face : t.cell(k, tau).faces) {
          st.z ^= run.h.apply(k - 1, face);
          st.norm_h_boundary += n.norm(q, run.h.apply(k - 1, face));
        }
      st.norm_z = n.norm(q, st.z);
      st.norm_f = k == 0 ? st.norm_z : n.norm(q, f.apply(k, tau));
      st.z_bound = k == 0 ? 2 * params.mu : st.norm_f + Rational(k + 1) * run.budgets[k - 1];

      std::optional<BitVector> particular;
      if (k == 0) {
        particular = path_cofilling(tau);
      } else {
        auto sol = solve(delta, st.z);
        particular = std::move(sol.solution);
      }
      if (!particular) {
        st.cohomologically_trivial = false;
        st.within_budget = false;
        st.identity_holds = false;
        run.steps.push_back(st);
        Obstruction ob{k, tau, st.z, st.norm_z, theta_of(q), false};
        ob.certificate_holds = !ob.theta.is_infinite() && st.norm_z >= ob.theta.value();
        run.obstruction = std::move(ob);
        run.outcome = HomotopyOutcome::cosystolic_obstruction;
        halted = true;
        break;
      }
      if (q - 1 >= 0) {
        const auto best = coset_min_weight(cocycles, *particular, n, q - 1, params.max_coset_dim);
        st.h = best.argmin;
        st.norm_h = best.value;
      } else {
        st.h = *particular;  // C^{-1}: the cofilling is unique
        st.norm_h = n.norm(-1, st.h);
      }
      set_column(run.h.blocks[static_cast<std::size_t>(k)], tau, st.h);

      if (k < d) {
        st.budget = run.budgets[static_cast<std::size_t>(k)];
        st.within_budget = st.norm_h < st.budget;
      } else {
        st.budget = 1;
        st.within_budget = st.norm_z < 1 && st.h.none();
      }
      if (k == 0) st.cofilling_bound_holds = st.norm_h <= params.L * st.norm_f;
      st.identity_holds = (f.apply(k, tau) ^ run.g.apply(k, tau)) == homotopy_side(run.h, t, x, k, tau);
      run.steps.push_back(st);
      if (!st.within_budget) {
        run.budget_violations.push_back(run.steps.size() - 1);
        if (params.halt_on_budget) {
          run.obstruction = Obstruction{k, tau, st.z, st.norm_z, ExtRational(), false};
          run.outcome = HomotopyOutcome::budget_obstruction;
          halted = true;
          break;
        }
      }
    }
    if (halted) return run;
  }
  run.finished = true;

  const BitVector all_top = BitVector::ones(t.num_cells(d));
  run.f_fundamental = f.apply_chain(d, all_top);
  const BitVector boundary = boundary_matrix(t, d).multiply(all_top);
  run.homotopy_fundamental = x.coboundary(0).multiply(run.h.apply_chain(d, all_top)) ^
                             run.h.apply_chain(d - 1, boundary);

  if (run.f_fundamental.any()) {
    run.outcome = HomotopyOutcome::fundamental_class_contradiction;
  } else if (!run.budget_violations.empty()) {
    const auto& st = run.steps[run.budget_violations.front()];
    run.obstruction = Obstruction{st.k, st.tau, st.z, st.norm_z, ExtRational(), false};
    run.outcome = HomotopyOutcome::budget_obstruction;
  } else {
    run.outcome = HomotopyOutcome::completed;
  }
  return run;
}

}  // namespace overlap
