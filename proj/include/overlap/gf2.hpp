// Dense linear algebra over F2 with packed 64-bit rows.
#pragma once

#include "overlap/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace overlap {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector from_string(std::string_view bits);
  static BitVector ones(std::size_t size);
  static BitVector unit(std::size_t size, std::size_t index);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }
  /// Index of the first set bit, or size() when none.
  std::size_t first() const;
  std::vector<std::size_t> support() const;
  /// Parity of the bitwise AND.
  bool dot(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::span<const std::uint64_t> words() const { return words_; }

  /// Bits in index order, e.g. "0110".
  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic order on the bit string b[0] b[1] ... (0 < 1 at the first
/// differing index). Used for all deterministic tie-breaking.
bool lex_less(const BitVector& a, const BitVector& b);

class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);
  static GF2Matrix identity(std::size_t n);
  static GF2Matrix from_rows(std::vector<BitVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return data_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { data_[r].set(c, v); }
  const BitVector& row(std::size_t r) const { return data_[r]; }
  BitVector column(std::size_t c) const;

  /// y = M x.
  BitVector multiply(const BitVector& x) const;
  GF2Matrix multiply(const GF2Matrix& other) const;
  GF2Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

  /// Rows of 0/1 characters, one per line, preceded by "matrix <rows> <cols>".
  std::string to_text() const;
  static GF2Matrix from_text(std::string_view text);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

/// Reduced row echelon form of a list of vectors: zero rows dropped, leading
/// indices strictly increasing, every leading column cleared in other rows.
std::vector<BitVector> row_reduce(std::vector<BitVector> vectors);

std::size_t rank(const GF2Matrix& m);

struct SolveResult {
  std::optional<BitVector> solution;
  /// When no solution exists: y with y^T M = 0 and y . b = 1.
  std::optional<BitVector> infeasibility_certificate;
};

/// Particular solution of M x = b with all free variables zero.
SolveResult solve(const GF2Matrix& m, const BitVector& b);

std::vector<BitVector> kernel_basis(const GF2Matrix& m);
/// Basis of the column space.
std::vector<BitVector> image_basis(const GF2Matrix& m);

/// Vectors W, in reduced echelon form, such that span(subspace) + span(W) =
/// span(space) is a direct sum. Representatives of span(space)/span(subspace).
std::vector<BitVector> complement_basis(const std::vector<BitVector>& subspace,
                                        const std::vector<BitVector>& space);

bool in_span(const std::vector<BitVector>& reduced_basis, const BitVector& v);

/// Per-cell weights over a common denominator: weight(i) = numerators[i] * unit.
struct ScaledWeights {
  std::vector<std::int64_t> numerators;
  Rational unit{1};

  static ScaledWeights from_rationals(const std::vector<Rational>& weights);
  std::int64_t weight_of(const BitVector& v) const;
  Rational to_rational(std::int64_t scaled) const { return unit * scaled; }
};

struct CosetMin {
  Rational value;
  std::int64_t scaled_value = 0;
  /// The minimizing coset element alpha + v.
  BitVector argmin;
};

/// Exact minimum of weight(alpha + v) over v in span(basis), by Gray-code
/// enumeration of all 2^dim elements. Ties go to the lexicographically
/// smallest coset element. Throws BudgetExceeded when dim > max_dim.
CosetMin coset_min_weight(const std::vector<BitVector>& basis, const BitVector& alpha,
                          const ScaledWeights& weights, int max_dim = 24);

/// Calls visit(element, scaled_weight) for every alpha + v, v in span(basis),
/// in Gray-code order starting from alpha itself.
template <class Visit>
void for_each_coset_element(const std::vector<BitVector>& basis, const BitVector& alpha,
                            const ScaledWeights& weights, Visit&& visit);

}  // namespace overlap

#include "overlap/detail/gf2_enumerate.hpp"
