// The inductive construction of a chain-cochain homotopy H between an
// intersection pairing F and the constant map G, run as an algorithm.
// Each step either assigns a minimal cofilling or stops at an obstruction;
// the full trace is kept.
#pragma once

#include "overlap/complex.hpp"
#include "overlap/pairing.hpp"
#include "overlap/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace overlap {

struct BaseVertex {
  std::size_t vertex = 0;
  Rational norm;  // ||F(v0)||
};

/// argmin over vertices of ||F(v)||, first vertex on ties. Throws
/// std::invalid_argument when T has no vertices.
BaseVertex choose_base_vertex(const ChainCochainMap& f, const ComplexSkeleton& t, const WeightedNorm& n);

struct HomotopyParams {
  Rational mu;
  Rational L;
  Rational eps;
  /// theta_j for j = 0..d; when empty, computed on demand for certificates.
  std::vector<ExtRational> theta;
  int max_coset_dim = 24;
  /// Stop at the first cell whose cofilling misses its budget.
  bool halt_on_budget = false;
};

enum class HomotopyOutcome {
  completed,
  cosystolic_obstruction,
  budget_obstruction,
  fundamental_class_contradiction,
};

std::string to_string(HomotopyOutcome o);

struct HomotopyStep {
  int k = 0;
  std::size_t tau = 0;
  /// ||F(tau)||; for k = 0, ||F(v) - F(v0)|| (which the premise keeps below 2 mu).
  Rational norm_f;
  /// Sum of ||H(rho)|| over the faces rho of tau (zero for k = 0).
  Rational norm_h_boundary;
  /// z = F(tau) + G(tau) + H(boundary tau), the cochain to cofill.
  BitVector z;
  Rational norm_z;
  /// ||F(tau)|| + (k + 1) s_{k-1}; the a priori bound on ||z|| for k >= 1.
  Rational z_bound;
  bool cohomologically_trivial = true;
  BitVector h;
  Rational norm_h;
  /// s_k for k < d. For k = d the requirement is ||z|| < 1, forcing H(tau) = 0.
  Rational budget;
  bool within_budget = true;
  /// For k = 0: ||H(v)|| <= L ||F(v) - F(v0)||.
  bool cofilling_bound_holds = true;
  /// The homotopy identity re-checked on tau right after assigning H(tau).
  bool identity_holds = true;
};

struct Obstruction {
  int k = 0;
  std::size_t tau = 0;
  BitVector z;
  Rational norm_z;
  /// For cosystolic obstructions: theta_{d-k} and whether ||z|| >= theta.
  ExtRational theta;
  bool certificate_holds = false;
};

struct HomotopyRun {
  int d = 0;
  BaseVertex base;
  /// The proof's premise ||F(v0)|| < mu.
  bool premise_holds = false;
  std::vector<Rational> budgets;  // s_0..s_d
  ChainCochainMap g;
  ChainCochainMap h;
  std::vector<HomotopyStep> steps;
  HomotopyOutcome outcome = HomotopyOutcome::completed;
  std::optional<Obstruction> obstruction;
  /// Indices into steps of cells that missed their budget.
  std::vector<std::size_t> budget_violations;
  /// False when the run stopped before every cell was processed.
  bool finished = false;
  BitVector f_fundamental;        // F([M])
  BitVector homotopy_fundamental;  // H(boundary [M]) + delta H([M])
};

/// Throws ValidationError if the shapes disagree, F is not a chain-cochain
/// map, or the 1-skeleton of T is disconnected; BudgetExceeded if a coset
/// enumeration is too large.
HomotopyRun build_homotopy(const ChainCochainMap& f, const ComplexSkeleton& t, const ComplexSkeleton& x,
                           const WeightedNorm& n, const HomotopyParams& params);

/// F - G = H boundary + delta H on every cell of T.
ChainCochainCheck verify_homotopy(const ChainCochainMap& f, const ChainCochainMap& g, const ChainCochainMap& h,
                                  const ComplexSkeleton& t, const ComplexSkeleton& x);

/// G(v) = F(v0) on vertices and 0 above.
ChainCochainMap constant_map(const ChainCochainMap& f, const ComplexSkeleton& t, const ComplexSkeleton& x,
                             std::size_t v0);

}  // namespace overlap
