#include "overlap/report.hpp"

namespace overlap {

namespace {

Json ext(const ExtRational& r) { return to_string(r); }
Json rat(const Rational& r) { return to_string(r); }

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(rat(r));
  return a;
}

}  // namespace

Json report_header(const std::string& command, const Json& config) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["config"] = config;
  return j;
}

Json cell_names(const ComplexSkeleton& x, int k, const BitVector& bits) {
  Json a = Json::array();
  for (std::size_t i : bits.support()) a.push_back(k == -1 ? std::string("(empty)") : x.cell(k, i).name);
  return a;
}

Json cochain_json(const ComplexSkeleton& x, const WeightedNorm& n, int k, const BitVector& bits) {
  Json j;
  j["degree"] = k;
  j["support"] = cell_names(x, k, bits);
  j["norm"] = rat(n.norm(k, bits));
  return j;
}

Json to_json(const MuThreshold& m) {
  Json j;
  j["status"] = m.status == MuThreshold::Status::ok ? "ok" : "not_sparse_enough";
  j["mu_max"] = rat(m.mu_max);
  j["theta_effective"] = rat(m.theta_effective);
  j["binding_k"] = m.binding_k;
  j["s_recursion"] = rationals(m.s_table);
  j["s_closed_form"] = rationals(m.s_closed_form);
  j["eps0_recursion_bound"] = rat(m.eps0_recursion_bound);
  j["quoted_bound"] = rat(m.quoted_bound);
  return j;
}

Json to_json(const ExpansionReport& r, const ComplexSkeleton& x) {
  Json j;
  j["dim"] = r.dim;
  Json counts = Json::array();
  for (int k = 0; k <= r.dim; ++k) counts.push_back(x.num_cells(k));
  j["cell_counts"] = counts;
  Json per_k = Json::array();
  for (int k = 1; k <= r.dim; ++k) {
    Json e;
    e["k"] = k;
    e["cofilling_L"] = ext(r.cofilling[k - 1]);
    e["expansion_eta"] = ext(r.expansion[k - 1]);
    per_k.push_back(e);
  }
  j["coboundary"] = per_k;
  Json cos = Json::array();
  for (int q = 0; q <= r.dim; ++q) {
    Json e;
    e["j"] = q;
    e["cosystole_theta"] = ext(r.cosystole[q]);
    cos.push_back(e);
  }
  j["cosystoles"] = cos;
  Json sp;
  sp["epsilon"] = rat(r.sparsity.value);
  sp["tau_dim"] = r.sparsity.tau_dim;
  sp["tau"] = x.cell(r.sparsity.tau_dim, r.sparsity.tau).name;
  sp["degree"] = r.sparsity.degree;
  j["local_sparsity"] = sp;
  j["reduced_betti"] = r.betti;
  j["L"] = ext(r.L);
  j["theta"] = ext(r.theta);
  j["mu_threshold"] = r.mu ? to_json(*r.mu) : Json();
  if (!r.mu_note.empty()) j["mu_note"] = r.mu_note;
  return j;
}

Json to_json(const PointValue& p, const ComplexSkeleton& x, int d) {
  Json j;
  Json pt = Json::array();
  for (const auto& c : p.point.coords) pt.push_back(rat(c));
  j["witness"] = pt;
  j["value"] = rat(p.value);
  Json cells = Json::array();
  for (std::size_t c : p.covering_cells) cells.push_back(x.cell(d, c).name);
  j["covering_cells"] = cells;
  return j;
}

Json to_json(const OverlapResult& r, const ComplexSkeleton& x, int d) {
  Json j;
  j["closed"] = to_json(r.closed, x, d);
  j["generic"] = to_json(r.generic, x, d);
  j["candidates"] = r.candidates;
  return j;
}

Json to_json(const HomotopyRun& run, const ComplexSkeleton& t, const ComplexSkeleton& x, const WeightedNorm& n) {
  const int d = run.d;
  Json j;
  j["outcome"] = to_string(run.outcome);
  Json base;
  base["vertex"] = t.cell(0, run.base.vertex).name;
  base["norm"] = rat(run.base.norm);
  base["premise_norm_below_mu"] = run.premise_holds;
  j["base_vertex"] = base;
  j["budgets"] = rationals(run.budgets);
  Json steps = Json::array();
  for (const auto& st : run.steps) {
    const int q = d - st.k;
    Json s;
    s["k"] = st.k;
    s["cell"] = t.cell(st.k, st.tau).name;
    s["norm_f"] = rat(st.norm_f);
    s["norm_h_boundary"] = rat(st.norm_h_boundary);
    s["z"] = cochain_json(x, n, q, st.z);
    s["z_bound"] = rat(st.z_bound);
    s["cohomologically_trivial"] = st.cohomologically_trivial;
    if (st.cohomologically_trivial) {
      s["h"] = cochain_json(x, n, q - 1, st.h);
      s["budget"] = rat(st.budget);
      s["within_budget"] = st.within_budget;
      if (st.k == 0) s["cofilling_bound_holds"] = st.cofilling_bound_holds;
      s["identity_holds"] = st.identity_holds;
    }
    steps.push_back(s);
  }
  j["steps"] = steps;
  if (run.obstruction) {
    const auto& ob = *run.obstruction;
    Json o;
    o["k"] = ob.k;
    o["cell"] = t.cell(ob.k, ob.tau).name;
    o["z"] = cochain_json(x, n, d - ob.k, ob.z);
    if (run.outcome == HomotopyOutcome::cosystolic_obstruction) {
      o["theta"] = ext(ob.theta);
      o["norm_at_least_theta"] = ob.certificate_holds;
    }
    j["obstruction"] = o;
  }
  Json viol = Json::array();
  for (std::size_t i : run.budget_violations) {
    Json v;
    v["k"] = run.steps[i].k;
    v["cell"] = t.cell(run.steps[i].k, run.steps[i].tau).name;
    viol.push_back(v);
  }
  j["budget_violations"] = viol;
  j["finished"] = run.finished;
  if (run.finished) {
    Json fc;
    fc["f_of_fundamental_class"] = cochain_json(x, n, 0, run.f_fundamental);
    fc["homotopy_side"] = cochain_json(x, n, 0, run.homotopy_fundamental);
    j["fundamental_class"] = fc;
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace overlap
