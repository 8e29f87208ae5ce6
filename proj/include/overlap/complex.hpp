// Finite cell complexes with their augmented F2 cochain complex, cochains and
// weighted Hamming norms.
#pragma once

#include "overlap/gf2.hpp"
#include "overlap/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace overlap {

/// Whether C^{-1} = F2 (the empty cell) takes part in a matrix view.
enum class Augmentation { augmented, non_augmented };

struct Cell {
  std::string name;
  /// Sorted indices into the 0-cells; the closure of the cell's boundary.
  std::vector<std::size_t> vertices;
  /// Indices into the (k-1)-cells with incidence number 1.
  std::vector<std::size_t> faces;
};

/// Explicit polyhedral input: cell names per dimension (k = 0..d) in order,
/// and for k >= 1 the list of (cell, faces) incidences.
struct CellSpec {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::vector<std::pair<std::string, std::vector<std::string>>>> incidence;
};

class ComplexSkeleton {
 public:
  /// Downward closure of the given simplices (non-maximal entries allowed).
  /// Vertices and k-faces are ordered by first appearance.
  static ComplexSkeleton from_simplices(const std::vector<std::vector<std::string>>& simplices);
  static ComplexSkeleton from_cells(const CellSpec& spec);

  int dim() const { return static_cast<int>(cells_.size()) - 2; }
  /// Number of k-cells; 1 for k = -1, 0 outside [-1, dim].
  std::size_t num_cells(int k) const;
  const Cell& cell(int k, std::size_t i) const { return cells_.at(static_cast<std::size_t>(k + 1)).at(i); }
  const std::vector<Cell>& cells(int k) const { return cells_.at(static_cast<std::size_t>(k + 1)); }
  std::optional<std::size_t> find(int k, std::string_view name) const;
  bool is_simplicial() const { return simplicial_; }

  /// delta^k : C^{k-1} -> C^k in the augmented complex, for 0 <= k <= dim + 1
  /// (delta^0 is the augmentation column, delta^{dim+1} the zero map).
  const GF2Matrix& coboundary(int k) const;

  /// Two cells meet iff they share a vertex.
  bool cells_meet(int k1, std::size_t i1, int k2, std::size_t i2) const;

 private:
  ComplexSkeleton() = default;
  void finish();

  // cells_[k + 1] holds the k-cells, k = -1..dim
  std::vector<std::vector<Cell>> cells_;
  std::vector<std::map<std::string, std::size_t, std::less<>>> index_;
  std::vector<GF2Matrix> coboundary_;  // coboundary_[k], k = 0..dim+1
  bool simplicial_ = false;
};

/// Matrix of delta : C^{k-1} -> C^k with entry (sigma, tau) = [sigma : tau].
/// Non-augmented view: delta^0 is the n_0 x 0 matrix. Throws std::out_of_range
/// unless 0 <= k <= dim.
GF2Matrix coboundary_matrix(const ComplexSkeleton& x, int k, Augmentation aug = Augmentation::augmented);

/// Boundary operator on chains, the transpose of the coboundary.
/// Non-augmented: boundary of a vertex is zero (a 0 x n_0 matrix).
GF2Matrix boundary_matrix(const ComplexSkeleton& x, int k, Augmentation aug = Augmentation::non_augmented);

struct Cochain {
  int degree = 0;
  BitVector bits;

  static Cochain zero(const ComplexSkeleton& x, int k) { return {k, BitVector(x.num_cells(k))}; }
  static Cochain ones(const ComplexSkeleton& x, int k) { return {k, BitVector::ones(x.num_cells(k))}; }
  std::vector<std::size_t> support() const { return bits.support(); }
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// Z^k = ker(delta : C^k -> C^{k+1}) and B^k = im(delta : C^{k-1} -> C^k) in
/// the augmented complex; both in reduced echelon form.
std::vector<BitVector> cocycle_basis(const ComplexSkeleton& x, int k);
std::vector<BitVector> coboundary_basis(const ComplexSkeleton& x, int k);

/// iota^k_tau: k-cells sharing at least one vertex with tau.
Cochain incidence_cochain(const ComplexSkeleton& x, int tau_dim, std::size_t tau, int k);

/// Additive norm: the norm of a cochain is the total weight of its support.
/// Weights are per cell and normalized so that every all-ones cochain has
/// norm 1. C^{-1} carries weight 1 on the empty cell.
class WeightedNorm {
 public:
  static WeightedNorm hamming(const ComplexSkeleton& x);
  /// weights[k][i] for k = 0..dim. Throws ValidationError when a weight is
  /// negative, a row has the wrong length, or a row does not sum to 1.
  static WeightedNorm from_weights(const ComplexSkeleton& x, std::vector<std::vector<Rational>> weights);

  int dim() const { return static_cast<int>(weights_.size()) - 2; }
  bool is_hamming() const { return hamming_; }
  const Rational& weight(int k, std::size_t i) const { return weights_.at(static_cast<std::size_t>(k + 1)).at(i); }
  const std::vector<Rational>& weights(int k) const { return weights_.at(static_cast<std::size_t>(k + 1)); }
  const ScaledWeights& scaled(int k) const { return scaled_.at(static_cast<std::size_t>(k + 1)); }

  Rational norm(int k, const BitVector& bits) const;
  Rational norm(const Cochain& c) const { return norm(c.degree, c.bits); }

 private:
  WeightedNorm() = default;
  void finish();

  std::vector<std::vector<Rational>> weights_;  // index k + 1
  std::vector<ScaledWeights> scaled_;
  bool hamming_ = false;
};

inline Rational norm(const WeightedNorm& n, const Cochain& c) { return n.norm(c); }

/// Minimum of ||alpha + v|| over v in span(basis), computed in degree k.
CosetMin coset_min_weight(const std::vector<BitVector>& basis, const BitVector& alpha, const WeightedNorm& n,
                          int k, int max_dim = 24);

}  // namespace overlap
