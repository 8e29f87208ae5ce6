#include "overlap/gf2.hpp"

#include "overlap/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace overlap {

// ---------------------------------------------------------------- BitVector

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw std::invalid_argument("bit string may only contain 0 and 1");
  }
  return v;
}

BitVector BitVector::ones(std::size_t size) {
  BitVector v(size);
  for (std::size_t i = 0; i < size; ++i) v.set(i);
  return v;
}

BitVector BitVector::unit(std::size_t size, std::size_t index) {
  BitVector v(size);
  v.set(index);
  return v;
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitVector::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return size_;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) throw std::invalid_argument("BitVector::dot: size mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector xor: size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

bool lex_less(const BitVector& a, const BitVector& b) {
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    const std::uint64_t diff = wa[i] ^ wb[i];
    if (diff != 0) return (wa[i] & (diff & (~diff + 1))) == 0;
  }
  return false;
}

// ---------------------------------------------------------------- GF2Matrix

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

GF2Matrix GF2Matrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
  for (const auto& r : rows)
    if (r.size() != cols) throw std::invalid_argument("GF2Matrix::from_rows: ragged rows");
  GF2Matrix m;
  m.rows_ = rows.size();
  m.cols_ = cols;
  m.data_ = std::move(rows);
  return m;
}

BitVector GF2Matrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (data_[r].test(c)) v.set(r);
  return v;
}

BitVector GF2Matrix::multiply(const BitVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("GF2Matrix::multiply: dimension mismatch");
  BitVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (data_[r].dot(x)) y.set(r);
  return y;
}

GF2Matrix GF2Matrix::multiply(const GF2Matrix& other) const {
  if (other.rows_ != cols_) throw std::invalid_argument("GF2Matrix::multiply: dimension mismatch");
  GF2Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k : data_[r].support()) out.data_[r] ^= other.data_[k];
  return out;
}

GF2Matrix GF2Matrix::transpose() const {
  GF2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c : data_[r].support()) t.set(c, r);
  return t;
}

bool GF2Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BitVector& r) { return r.none(); });
}

std::string GF2Matrix::to_text() const {
  std::string out = "matrix " + std::to_string(rows_) + " " + std::to_string(cols_) + "\n";
  for (const auto& r : data_) out += r.to_string() + "\n";
  return out;
}

GF2Matrix GF2Matrix::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag;
  std::size_t rows = 0;
  std::size_t cols = 0;
  if (!(in >> tag >> rows >> cols) || tag != "matrix")
    throw std::invalid_argument("matrix text must start with 'matrix <rows> <cols>'");
  std::vector<BitVector> data;
  data.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    std::string line;
    if (cols == 0) {
      data.emplace_back(0);
      continue;
    }
    if (!(in >> line) || line.size() != cols)
      throw std::invalid_argument("matrix row " + std::to_string(r) + " has wrong length");
    data.push_back(BitVector::from_string(line));
  }
  return from_rows(std::move(data), cols);
}

// ----------------------------------------------------------- elimination

std::vector<BitVector> row_reduce(std::vector<BitVector> vectors) {
  std::vector<BitVector> basis;  // kept sorted by leading index
  std::vector<std::size_t> leads;
  for (auto& v : vectors) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (v.test(leads[i])) v ^= basis[i];
    if (v.none()) continue;
    const std::size_t lead = v.first();
    for (auto& b : basis)
      if (b.test(lead)) b ^= v;
    auto pos = static_cast<std::size_t>(std::lower_bound(leads.begin(), leads.end(), lead) - leads.begin());
    basis.insert(basis.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    leads.insert(leads.begin() + static_cast<std::ptrdiff_t>(pos), lead);
  }
  return basis;
}

std::size_t rank(const GF2Matrix& m) {
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return row_reduce(std::move(rows)).size();
}

SolveResult solve(const GF2Matrix& m, const BitVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  const std::size_t n = m.cols();
  const std::size_t rows = m.rows();
  // Augmented rows [M | b | e_r]: the identity block records row combinations.
  std::vector<BitVector> aug;
  aug.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    BitVector v(n + 1 + rows);
    for (std::size_t c : m.row(r).support()) v.set(c);
    if (b.test(r)) v.set(n);
    v.set(n + 1 + r);
    aug.push_back(std::move(v));
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t next = 0;
  for (std::size_t c = 0; c < n && next < rows; ++c) {
    std::size_t p = next;
    while (p < rows && !aug[p].test(c)) ++p;
    if (p == rows) continue;
    std::swap(aug[p], aug[next]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != next && aug[r].test(c)) aug[r] ^= aug[next];
    pivot_cols.push_back(c);
    ++next;
  }

  SolveResult result;
  for (std::size_t r = next; r < rows; ++r) {
    if (aug[r].test(n)) {
      BitVector y(rows);
      for (std::size_t i = 0; i < rows; ++i)
        if (aug[r].test(n + 1 + i)) y.set(i);
      result.infeasibility_certificate = std::move(y);
      return result;
    }
  }
  BitVector x(n);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i)
    if (aug[i].test(n)) x.set(pivot_cols[i]);
  result.solution = std::move(x);
  return result;
}

std::vector<BitVector> kernel_basis(const GF2Matrix& m) {
  const std::size_t n = m.cols();
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  auto reduced = row_reduce(std::move(rows));

  std::vector<bool> is_pivot(n, false);
  std::vector<std::size_t> leads;
  for (const auto& r : reduced) {
    leads.push_back(r.first());
    is_pivot[leads.back()] = true;
  }
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(n);
    v.set(f);
    for (std::size_t i = 0; i < reduced.size(); ++i)
      if (reduced[i].test(f)) v.set(leads[i]);
    basis.push_back(std::move(v));
  }
  return row_reduce(std::move(basis));
}

std::vector<BitVector> image_basis(const GF2Matrix& m) {
  std::vector<BitVector> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return row_reduce(std::move(cols));
}

bool in_span(const std::vector<BitVector>& reduced_basis, const BitVector& v) {
  BitVector r = v;
  for (const auto& b : reduced_basis)
    if (r.test(b.first())) r ^= b;
  return r.none();
}

std::vector<BitVector> complement_basis(const std::vector<BitVector>& subspace,
                                        const std::vector<BitVector>& space) {
  std::vector<BitVector> reducer = row_reduce(subspace);
  std::vector<BitVector> extra;
  for (const auto& v : space) {
    BitVector r = v;
    // reducer stays in echelon form: reduce in order of leading index
    for (const auto& b : reducer)
      if (r.test(b.first())) r ^= b;
    if (r.none()) continue;
    extra.push_back(r);
    reducer.push_back(r);
    reducer = row_reduce(std::move(reducer));
  }
  // Normalize representatives modulo the subspace, then echelonize.
  auto reduced_sub = row_reduce(subspace);
  auto w = row_reduce(std::move(extra));
  for (auto& v : w)
    for (const auto& b : reduced_sub)
      if (v.test(b.first())) v ^= b;
  return row_reduce(std::move(w));
}

// ---------------------------------------------------------- coset minimum

ScaledWeights ScaledWeights::from_rationals(const std::vector<Rational>& weights) {
  BigInt lcm = 1;
  for (const auto& w : weights) {
    if (w < 0) throw std::invalid_argument("cell weights must be nonnegative");
    lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(w)));
  }
  ScaledWeights out;
  out.unit = Rational(BigInt(1), lcm);
  BigInt total = 0;
  const BigInt limit = std::numeric_limits<std::int64_t>::max() / 4;
  for (const auto& w : weights) {
    BigInt scaled = boost::multiprecision::numerator(w) * (lcm / boost::multiprecision::denominator(w));
    total += scaled;
    if (total > limit) throw std::overflow_error("cell weights too fine for 64-bit exact summation");
    out.numerators.push_back(static_cast<std::int64_t>(scaled));
  }
  return out;
}

std::int64_t ScaledWeights::weight_of(const BitVector& v) const {
  if (v.size() != numerators.size()) throw std::invalid_argument("weight_of: size mismatch");
  std::int64_t w = 0;
  for (std::size_t i : v.support()) w += numerators[i];
  return w;
}

namespace {

struct Best {
  std::int64_t value = std::numeric_limits<std::int64_t>::max();
  BitVector vec;
  bool set = false;

  void offer(const BitVector& v, std::int64_t w) {
    if (!set || w < value || (w == value && lex_less(v, vec))) {
      value = w;
      vec = v;
      set = true;
    }
  }
};

constexpr std::size_t kParallelThreshold = 20;

}  // namespace

CosetMin coset_min_weight(const std::vector<BitVector>& basis, const BitVector& alpha,
                          const ScaledWeights& weights, int max_dim) {
  if (alpha.size() != weights.numerators.size())
    throw std::invalid_argument("coset_min_weight: vector and weights differ in length");
  for (const auto& b : basis)
    if (b.size() != alpha.size()) throw std::invalid_argument("coset_min_weight: basis length mismatch");
  if (static_cast<int>(basis.size()) > max_dim)
    throw BudgetExceeded("coset enumeration over a subspace", static_cast<int>(basis.size()), max_dim);

  Best best;
  const unsigned hw = std::thread::hardware_concurrency();
  if (basis.size() >= kParallelThreshold && hw > 1) {
    // Fix the top `split` basis coefficients per worker; each worker runs a
    // Gray code over the remaining ones. Reduction is order independent.
    const std::size_t split = std::min<std::size_t>(std::bit_width(hw) - 1 + 1, 6);
    const std::size_t parts = std::size_t{1} << split;
    std::vector<BitVector> low(basis.begin(), basis.end() - static_cast<std::ptrdiff_t>(split));
    std::vector<Best> partial(parts);
    std::vector<std::thread> workers;
    for (std::size_t p = 0; p < parts; ++p) {
      workers.emplace_back([&, p] {
        BitVector start = alpha;
        for (std::size_t j = 0; j < split; ++j)
          if ((p >> j) & 1) start ^= basis[basis.size() - split + j];
        for_each_coset_element(low, start, weights,
                               [&](const BitVector& v, std::int64_t w) { partial[p].offer(v, w); });
      });
    }
    for (auto& t : workers) t.join();
    for (auto& p : partial) best.offer(p.vec, p.value);
  } else {
    for_each_coset_element(basis, alpha, weights, [&](const BitVector& v, std::int64_t w) { best.offer(v, w); });
  }
  return CosetMin{weights.to_rational(best.value), best.value, std::move(best.vec)};
}

}  // namespace overlap
