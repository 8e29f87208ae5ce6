// Chain-cochain maps C_k(T) -> C^{top-k}(X) and the intersection-number
// pairing of a graph mapped into the circle.
#pragma once

#include "overlap/circle.hpp"
#include "overlap/complex.hpp"
#include "overlap/gf2.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace overlap {

/// blocks[k] has one column per k-cell of T and one row per (top-k)-cell of X,
/// k = 0..d. The intersection pairing has top = d; a homotopy has
/// top = d - 1, so its last block lands in C^{-1}(X) (a single row).
struct ChainCochainMap {
  int d = 0;
  int top = 0;
  std::vector<GF2Matrix> blocks;

  static ChainCochainMap zero(const ComplexSkeleton& x, const ComplexSkeleton& t, int d, int top);

  int target_degree(int k) const { return top - k; }
  BitVector apply(int k, std::size_t tau) const { return blocks.at(k).column(tau); }
  BitVector apply_chain(int k, const BitVector& chain) const { return blocks.at(k).multiply(chain); }

  friend bool operator==(const ChainCochainMap&, const ChainCochainMap&) = default;
};

/// "chain_cochain_map <d> <top>" then, per k, "block <k> <rows> <cols>"
/// followed by rows of 0/1 characters.
std::string to_text(const ChainCochainMap& f);
ChainCochainMap chain_cochain_map_from_text(std::string_view text);

/// Throws ValidationError unless every block matches the cell counts of X and T.
void check_shape(const ChainCochainMap& f, const ComplexSkeleton& x, const ComplexSkeleton& t);

/// M_0(v)(e) = crossing parity of the path of e at v; M_1(a)(x) = 1 iff f(x)
/// lies in the open arc a. Throws GeneralPositionError naming the offending
/// pair when an image point or path vertex sits on a vertex of T.
ChainCochainMap transversal_pairing(const ComplexSkeleton& x, const CircleMap& f, const CircleTriangulation& t);

struct ChainCochainCheck {
  bool ok = true;
  int k = 0;            // dimension of the first violating cell of T
  std::size_t tau = 0;  // its index
};

/// M_{k-1}(boundary tau) = delta M_k(tau) for every k-cell tau, k = 1..d.
ChainCochainCheck verify_chain_cochain(const ChainCochainMap& f, const ComplexSkeleton& t, const ComplexSkeleton& x);

/// F applied to the sum of all d-cells of T.
Cochain fundamental_class_pairing(const ChainCochainMap& f, const ComplexSkeleton& t);

struct RefineResult {
  CircleTriangulation triangulation;
  int refinements = 0;
  bool fine = true;
  Rational bound;
  /// When not fine: an arc whose load cannot be brought under the bound
  /// because the vertex images in it coincide.
  std::optional<std::size_t> offending_arc;
};

/// Total weight of the vertices of X whose image lies in arc i.
Rational arc_load(const ComplexSkeleton& x, const CircleMap& f, const CircleTriangulation& t, std::size_t i,
                  const WeightedNorm& n);

/// max over vertices v of ||iota^0_v||, i.e. the largest vertex weight.
Rational fineness_bound(const ComplexSkeleton& x, const WeightedNorm& n);

/// Splits arcs until every arc carries vertex-image weight at most
/// max_v ||iota^0_v|| (the largest vertex weight). Split points are arc
/// midpoints, moved by len / 2^j (j = 2, 3, ...) when they would land on an
/// image point or a path vertex.
RefineResult refine_until_fine(const CircleTriangulation& t, const CircleMap& f, const ComplexSkeleton& x,
                               const WeightedNorm& n, int max_refinements = 100000);

}  // namespace overlap
