// The constants of the overlap theorem's hypothesis, computed exactly:
// cofilling L_k, cohomological expansion eta_k, cosystoles theta_j, local
// sparsity epsilon, and the overlap threshold derived from the inductive
// cofilling budgets s_k.
#pragma once

#include "overlap/complex.hpp"
#include "overlap/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace overlap {

struct CofillingResult {
  /// max over nonzero beta in B^k of min{||alpha|| : delta alpha = beta} / ||beta||.
  /// Zero when B^k = {0}; infinite only if some nonzero coboundary has norm 0.
  ExtRational value;
  BitVector worst_coboundary;
  BitVector minimal_cofilling;
};

/// 1 <= k <= dim. Enumerates C^{k-1} as (complement of Z^{k-1}) x Z^{k-1};
/// each factor must have dimension <= max_dim.
CofillingResult cofilling_constant(const ComplexSkeleton& x, const WeightedNorm& n, int k, int max_dim = 24);

struct ExpansionResult {
  /// min over classes [alpha] in C^{k-1}/B^{k-1} with ||[alpha]|| > 0 of
  /// ||delta alpha|| / ||[alpha]||; infinite when no such class exists.
  ExtRational value;
  /// Minimum-norm representative of the minimizing class.
  BitVector witness;
};

ExpansionResult expansion_constant(const ComplexSkeleton& x, const WeightedNorm& n, int k, int max_dim = 24);

struct CosystoleResult {
  /// min ||alpha|| over alpha in Z^j \ B^j; infinite when H^j = 0.
  ExtRational value;
  BitVector witness;
};

CosystoleResult cosystole(const ComplexSkeleton& x, const WeightedNorm& n, int j, int max_dim = 24);

struct SparsityResult {
  Rational value;
  int tau_dim = 0;
  std::size_t tau = 0;
  int degree = 0;
};

/// max over nonempty cells tau and degrees k of ||iota^k_tau||.
SparsityResult local_sparsity(const ComplexSkeleton& x, const WeightedNorm& n);

/// dim H^k of the augmented (reduced) cochain complex, k = 0..dim.
std::vector<int> betti_numbers(const ComplexSkeleton& x);

/// s_k(mu) = offset[k] + slope[k] * mu for the budget recursion
/// s_0 = 2 L mu, s_k = L (d eps + (k + 1) s_{k-1}).
struct BudgetRecursion {
  std::vector<Rational> offset;
  std::vector<Rational> slope;
  Rational at(std::size_t k, const Rational& mu) const { return offset[k] + slope[k] * mu; }
};

BudgetRecursion budget_recursion(int d, const Rational& L, const Rational& eps);

/// The published closed form d eps (L + ... + L^k) + (k+1)! L^{k+1} 2 mu.
Rational budget_closed_form(int d, int k, const Rational& L, const Rational& eps, const Rational& mu);

struct MuThreshold {
  enum class Status { ok, not_sparse_enough };

  Status status = Status::ok;
  /// Supremum of mu with d eps + (k+1) s_{k-1}(mu) < min(theta, 1) for all
  /// k = 1..d. Nonpositive exactly when status is not_sparse_enough.
  Rational mu_max;
  Rational theta_effective;
  int binding_k = 1;
  /// s_0..s_d from the recursion at mu = max(mu_max, 0).
  std::vector<Rational> s_table;
  /// The published closed form at the same mu.
  std::vector<Rational> s_closed_form;
  /// theta' / (2 (d+1)! L^d): the k = d constraint of the recursion at eps = 0.
  Rational eps0_recursion_bound;
  /// theta' / ((d+1)! L^d): the usual quoted bound, a factor 2 above the recursion.
  Rational quoted_bound;
};

/// Throws std::invalid_argument unless d >= 1, L > 0, eps >= 0 and theta > 0.
/// Infinite theta counts as min(theta, 1) = 1.
MuThreshold mu_threshold(int d, const Rational& L, const ExtRational& theta, const Rational& eps);

struct ExpansionReport {
  int dim = 0;
  std::vector<ExtRational> cofilling;  // k = 1..d at index k - 1
  std::vector<ExtRational> expansion;  // k = 1..d at index k - 1
  std::vector<ExtRational> cosystole;  // j = 0..d
  SparsityResult sparsity;
  std::vector<int> betti;              // k = 0..d
  /// Aggregates fed to the threshold: max_k L_k and min_{j<d} theta_j.
  ExtRational L;
  ExtRational theta;
  std::optional<MuThreshold> mu;
  std::string mu_note;
};

ExpansionReport analyze(const ComplexSkeleton& x, const WeightedNorm& n, int max_dim = 24);

}  // namespace overlap
