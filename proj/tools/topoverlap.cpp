// topoverlap: analyze complexes, compute overlap points, intersection pairings
// and proof-engine homotopies; generate test complexes.
#include "overlap/circle.hpp"
#include "overlap/complex_io.hpp"
#include "overlap/errors.hpp"
#include "overlap/expansion.hpp"
#include "overlap/generators.hpp"
#include "overlap/geometry.hpp"
#include "overlap/homotopy.hpp"
#include "overlap/map_io.hpp"
#include "overlap/overlap_search.hpp"
#include "overlap/pairing.hpp"
#include "overlap/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

using namespace overlap;

namespace {

struct Common {
  std::string norm = "hamming";
  int budget_coset = 24;
  int budget_subsets = 20;
  int perturb_denom = 0;
  std::uint64_t seed = 1;
  std::string out;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--norm", c.norm, "'hamming' or a weights file")->capture_default_str();
  app->add_option("--budget-coset", c.budget_coset, "largest coset dimension enumerated exhaustively")
      ->check(CLI::Range(1, 40))
      ->capture_default_str();
  app->add_option("--budget-subsets", c.budget_subsets, "log2 of the subset-family cap for general position")
      ->check(CLI::Range(1, 40))
      ->capture_default_str();
  app->add_option("--perturb-denom", c.perturb_denom, "perturb vertex images by m/2^k, m in [-16,16] (0: off)")
      ->check(CLI::Range(0, 200))
      ->capture_default_str();
  app->add_option("--seed", c.seed, "seed for perturbations and generators")->capture_default_str();
  app->add_option("--out", c.out, "output file (default: stdout)");
}

Json common_config(const Common& c) {
  Json j;
  j["norm"] = c.norm;
  j["budget_coset"] = c.budget_coset;
  j["budget_subsets"] = c.budget_subsets;
  j["perturb_denom"] = c.perturb_denom;
  j["seed"] = std::to_string(c.seed);
  return j;
}

WeightedNorm load_norm(const ComplexSkeleton& x, const std::string& spec) {
  if (spec == "hamming") return WeightedNorm::hamming(x);
  return parse_weights(x, read_text_file(spec));
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.out, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + c.out + "'");
  out << text;
}

Rational parse_rational_arg(const std::string& s, const std::string& what) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument&) {
    throw ValidationError("bad rational for " + what + ": '" + s + "'");
  }
}

// ------------------------------------------------------------------ analyze

struct AnalyzeArgs {
  Common c;
  std::string complex;
};

void run_analyze(const AnalyzeArgs& a) {
  const auto x = read_complex_file(a.complex);
  const auto n = load_norm(x, a.c.norm);
  const auto rep = analyze(x, n, a.c.budget_coset);
  Json config = common_config(a.c);
  config["complex"] = a.complex;
  Json j = report_header("analyze", config);
  j["result"] = to_json(rep, x);
  emit(a.c, dump(j));
}

// ------------------------------------------------------------------ overlap

struct OverlapArgs {
  Common c;
  std::string complex;
  std::string map;
  std::vector<std::string> at;
};

void run_overlap(const OverlapArgs& a) {
  const auto x = read_complex_file(a.complex);
  const auto n = load_norm(x, a.c.norm);
  const auto parsed = read_map_file(x, a.map);
  if (parsed.is_circle()) throw ValidationError("overlap needs a map into R1 or R2");
  EuclideanMap f = std::get<EuclideanMap>(parsed.map);
  if (a.c.perturb_denom > 0) {
    std::mt19937_64 rng(a.c.seed);
    f = perturb(f, a.c.perturb_denom, rng);
  }
  const int d = f.target_dim;
  if (x.dim() < d) throw ValidationError("the complex has no " + std::to_string(d) + "-cells");

  Json config = common_config(a.c);
  config["complex"] = a.complex;
  config["map"] = a.map;
  Json j = report_header("overlap", config);
  Json images = Json::array();
  for (std::size_t v = 0; v < f.images.size(); ++v) {
    Json e;
    e["vertex"] = x.cell(0, v).name;
    Json pt = Json::array();
    for (const auto& c : f.images[v].coords) pt.push_back(to_string(c));
    e["image"] = pt;
    images.push_back(e);
  }
  j["vertex_images"] = images;
  const auto gp = strongly_general_position_check(x, f, a.c.budget_subsets);
  Json g;
  g["strongly_general"] = gp.ok;
  if (!gp.ok) {
    Json cells = Json::array();
    for (const auto& [k, i] : gp.violation) cells.push_back(x.cell(k, i).name);
    g["violation"] = cells;
    g["intersection_dim"] = gp.intersection_dim;
    g["bound"] = gp.bound;
  }
  j["general_position"] = g;
  j["result"] = to_json(geometric_overlap(x, f, n), x, d);
  if (!a.at.empty()) {
    RationalPoint p;
    for (const auto& s : a.at) p.coords.push_back(parse_rational_arg(s, "--at"));
    if (p.dim() != d) throw ValidationError("--at needs " + std::to_string(d) + " coordinate(s)");
    j["at_point"] = to_json(overlap_at_point(x, f, n, p), x, d);
  }
  emit(a.c, dump(j));
}

// ------------------------------------------------------------------ pairing

struct CircleInput {
  CircleMap f;
  CircleTriangulation t;
  Json info;
};

CircleInput load_circle(const ComplexSkeleton& x, const WeightedNorm& n, const std::string& path, const Common& c,
                        bool refine) {
  const auto parsed = read_map_file(x, path);
  if (!parsed.is_circle()) throw ValidationError("expected a map into the circle");
  CircleMap f = std::get<CircleMap>(parsed.map);
  if (c.perturb_denom > 0) {
    std::mt19937_64 rng(c.seed);
    f = perturb(x, f, c.perturb_denom, rng);
  }
  std::optional<CircleTriangulation> t = parsed.triangulation;
  Json info;
  if (!t) {
    if (!refine) throw ValidationError("the map file has no triangulation; add one or pass --refine");
    t.emplace(std::vector<Rational>{Rational(0), Rational(1, 3), Rational(2, 3)});
  }
  if (refine) {
    auto r = refine_until_fine(*t, f, x, n);
    Json ri;
    ri["refinements"] = r.refinements;
    ri["fine"] = r.fine;
    ri["bound"] = to_string(r.bound);
    if (r.offending_arc) ri["offending_arc"] = "a" + std::to_string(*r.offending_arc);
    info["refinement"] = ri;
    t = r.triangulation;
  }
  Json tv = Json::array();
  for (const auto& v : t->vertices()) tv.push_back(to_string(v));
  info["triangulation"] = tv;
  return {std::move(f), std::move(*t), std::move(info)};
}

struct PairingArgs {
  Common c;
  std::string complex;
  std::string map;
  bool refine = false;
  std::string matrix_out;
};

void run_pairing(const PairingArgs& a) {
  const auto x = read_complex_file(a.complex);
  const auto n = load_norm(x, a.c.norm);
  auto in = load_circle(x, n, a.map, a.c, a.refine);
  const auto tc = in.t.to_complex();
  const auto m = transversal_pairing(x, in.f, in.t);
  const auto check = verify_chain_cochain(m, tc, x);
  const auto fc = fundamental_class_pairing(m, tc);

  Json config = common_config(a.c);
  config["complex"] = a.complex;
  config["map"] = a.map;
  config["refine"] = a.refine;
  Json j = report_header("pairing", config);
  j["target"] = in.info;
  Json res;
  Json verts = Json::array();
  for (std::size_t v = 0; v < tc.num_cells(0); ++v) {
    Json e;
    e["cell"] = tc.cell(0, v).name;
    e["pairing"] = cochain_json(x, n, 1, m.apply(0, v));
    verts.push_back(e);
  }
  res["vertices"] = verts;
  Json arcs = Json::array();
  for (std::size_t i = 0; i < tc.num_cells(1); ++i) {
    Json e;
    e["cell"] = tc.cell(1, i).name;
    e["pairing"] = cochain_json(x, n, 0, m.apply(1, i));
    arcs.push_back(e);
  }
  res["arcs"] = arcs;
  bool fine = true;
  const Rational bound = fineness_bound(x, n);
  for (std::size_t i = 0; i < in.t.size(); ++i)
    if (arc_load(x, in.f, in.t, i, n) > bound) fine = false;
  res["sufficiently_fine"] = fine;
  res["chain_cochain"] = check.ok;
  if (!check.ok) res["first_violation"] = tc.cell(check.k, check.tau).name;
  res["fundamental_class"] = cochain_json(x, n, 0, fc.bits);
  res["fundamental_class_is_all_ones"] = fc.bits == BitVector::ones(x.num_cells(0));
  j["result"] = res;
  if (!a.matrix_out.empty()) {
    std::ofstream out(a.matrix_out, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + a.matrix_out + "'");
    out << to_text(m);
  }
  emit(a.c, dump(j));
}

// ----------------------------------------------------------------- homotopy

struct HomotopyArgs {
  Common c;
  std::string complex;
  std::string map;
  std::string pairing;
  std::string target;
  std::string mu;
  bool refine = false;
  bool halt_on_budget = false;
};

void run_homotopy(const HomotopyArgs& a) {
  const auto x = read_complex_file(a.complex);
  const auto n = load_norm(x, a.c.norm);
  Json config = common_config(a.c);
  config["complex"] = a.complex;

  std::optional<ComplexSkeleton> t;
  ChainCochainMap f;
  Json target_info;
  if (!a.map.empty()) {
    if (!a.pairing.empty()) throw ValidationError("pass either --map or --pairing, not both");
    auto in = load_circle(x, n, a.map, a.c, a.refine);
    t = in.t.to_complex();
    f = transversal_pairing(x, in.f, in.t);
    target_info = in.info;
    config["map"] = a.map;
    config["refine"] = a.refine;
  } else {
    if (a.pairing.empty() || a.target.empty())
      throw ValidationError("homotopy needs --map, or --pairing together with --target");
    t = read_complex_file(a.target);
    f = chain_cochain_map_from_text(read_text_file(a.pairing));
    config["pairing"] = a.pairing;
    config["target"] = a.target;
  }
  if (f.d < 1 || x.dim() < f.d) throw ValidationError("the complex must have dimension at least " + std::to_string(f.d));

  const auto rep = analyze(x, n, a.c.budget_coset);
  const int d = f.d;
  HomotopyParams p;
  // constants of the d-dimensional part of X
  Rational L = 0;
  for (int k = 1; k <= d; ++k) {
    if (rep.cofilling[k - 1].is_infinite()) throw ValidationError("the cofilling constant is infinite");
    L = std::max(L, rep.cofilling[k - 1].value());
  }
  p.L = L;
  p.eps = rep.sparsity.value;
  p.theta.assign(rep.cosystole.begin(), rep.cosystole.begin() + d + 1);
  p.max_coset_dim = a.c.budget_coset;
  p.halt_on_budget = a.halt_on_budget;
  ExtRational theta = ExtRational::infinity();
  for (int q = 0; q < d; ++q) theta = std::min(theta, rep.cosystole[q]);
  std::optional<MuThreshold> thr;
  if (L > 0 && (theta.is_infinite() || theta.value() > 0)) thr = mu_threshold(d, L, theta, p.eps);
  if (!a.mu.empty()) {
    p.mu = parse_rational_arg(a.mu, "--mu");
    if (p.mu <= 0) throw ValidationError("--mu must be positive");
  } else {
    if (!thr || thr->status != MuThreshold::Status::ok)
      throw ValidationError("the complex is not sparse enough for an automatic mu; pass --mu");
    p.mu = thr->mu_max / 2;
  }
  config["mu"] = to_string(p.mu);
  config["halt_on_budget"] = a.halt_on_budget;

  const auto run = build_homotopy(f, *t, x, n, p);
  Json j = report_header("homotopy", config);
  if (!target_info.is_null()) j["target"] = target_info;
  Json consts;
  consts["d"] = d;
  consts["L"] = to_string(p.L);
  consts["epsilon"] = to_string(p.eps);
  Json th = Json::array();
  for (const auto& v : p.theta) th.push_back(to_string(v));
  consts["theta"] = th;
  consts["mu"] = to_string(p.mu);
  consts["mu_threshold"] = thr ? to_json(*thr) : Json();
  j["constants"] = consts;
  j["result"] = to_json(run, *t, x, n);
  if (run.finished) {
    const auto v = verify_homotopy(f, run.g, run.h, *t, x);
    j["result"]["homotopy_identity"] = v.ok;
  }
  emit(a.c, dump(j));
}

// ----------------------------------------------------------------- generate

struct GenerateArgs {
  Common c;
  std::string family;
  int n = 0;
  int d = 1;
  std::string p = "1/2";
};

void run_generate(const GenerateArgs& a) {
  SimplexList s;
  if (a.family == "complete_skeleton") {
    s = complete_skeleton(a.n, a.d);
  } else if (a.family == "cycle") {
    s = cycle(a.n);
  } else {
    const Rational p = parse_rational_arg(a.p, "--p");
    if (p < 0 || p > 1) throw ValidationError("--p must lie in [0, 1]");
    const auto num = boost::multiprecision::numerator(p);
    const auto den = boost::multiprecision::denominator(p);
    if (den > BigInt(std::numeric_limits<std::uint64_t>::max())) throw ValidationError("--p denominator too large");
    s = linial_meshulam(a.n, static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den), a.c.seed);
  }
  std::string head = "# " + a.family + " n=" + std::to_string(a.n);
  if (a.family == "complete_skeleton") head += " d=" + std::to_string(a.d);
  if (a.family == "linial_meshulam") head += " p=" + a.p + " seed=" + std::to_string(a.c.seed);
  emit(a.c, head + "\n" + format_simplices(s));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Overlap constants, overlap points and intersection pairings for finite complexes"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* c_an = app.add_subcommand("analyze", "cofilling, expansion, cosystoles, sparsity and the mu threshold");
  add_common(c_an, an.c);
  c_an->add_option("complex", an.complex, "complex file")->required();

  OverlapArgs ov;
  auto* c_ov = app.add_subcommand("overlap", "largest overlap of an affine map into R1 or R2");
  add_common(c_ov, ov.c);
  c_ov->add_option("complex", ov.complex, "complex file")->required();
  c_ov->add_option("map", ov.map, "map file")->required();
  c_ov->add_option("--at", ov.at, "also evaluate at this point");

  PairingArgs pa;
  auto* c_pa = app.add_subcommand("pairing", "intersection pairing of a graph mapped into the circle");
  add_common(c_pa, pa.c);
  c_pa->add_option("complex", pa.complex, "complex file")->required();
  c_pa->add_option("map", pa.map, "circle map file")->required();
  c_pa->add_flag("--refine", pa.refine, "refine the triangulation until it is fine for the map");
  c_pa->add_option("--matrix-out", pa.matrix_out, "write the pairing matrices to this file");

  HomotopyArgs ho;
  auto* c_ho = app.add_subcommand("homotopy", "run the inductive homotopy construction");
  add_common(c_ho, ho.c);
  c_ho->add_option("complex", ho.complex, "complex file")->required();
  c_ho->add_option("--map", ho.map, "circle map file (the pairing is computed from it)");
  c_ho->add_option("--pairing", ho.pairing, "pairing matrices file");
  c_ho->add_option("--target", ho.target, "complex file of the target triangulation (with --pairing)");
  c_ho->add_option("--mu", ho.mu, "assumed overlap bound (default: half the computed threshold)");
  c_ho->add_flag("--refine", ho.refine, "refine the triangulation until it is fine for the map");
  c_ho->add_flag("--halt-on-budget", ho.halt_on_budget, "stop at the first cofilling over budget");

  GenerateArgs ge;
  auto* c_ge = app.add_subcommand("generate", "write a complex from a standard family");
  add_common(c_ge, ge.c);
  c_ge->add_option("family", ge.family, "complete_skeleton | cycle | linial_meshulam")
      ->required()
      ->check(CLI::IsMember({"complete_skeleton", "cycle", "linial_meshulam"}));
  c_ge->add_option("--n", ge.n, "n (simplex dimension, cycle length or vertex count)")->required();
  c_ge->add_option("--d", ge.d, "skeleton dimension")->capture_default_str();
  c_ge->add_option("--p", ge.p, "triangle probability as a rational")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (c_an->parsed()) run_analyze(an);
    if (c_ov->parsed()) run_overlap(ov);
    if (c_pa->parsed()) run_pairing(pa);
    if (c_ho->parsed()) run_homotopy(ho);
    if (c_ge->parsed()) run_generate(ge);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const GeneralPositionError& e) {
    std::cerr << "general position: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
