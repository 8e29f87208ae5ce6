#include "overlap/complex.hpp"

#include "overlap/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace overlap {

namespace {

std::string join_labels(const std::vector<std::string>& labels, const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ',';
    out += labels[idx[i]];
  }
  return out;
}

}  // namespace

ComplexSkeleton ComplexSkeleton::from_simplices(const std::vector<std::vector<std::string>>& simplices) {
  if (simplices.empty()) throw ValidationError("empty complex: no simplices given");

  std::vector<std::string> labels;
  std::map<std::string, std::size_t, std::less<>> vertex_of;
  std::vector<std::vector<std::size_t>> tops;
  std::size_t max_size = 0;
  for (const auto& s : simplices) {
    if (s.empty()) throw ValidationError("empty simplex in simplex list");
    std::vector<std::size_t> idx;
    for (const auto& label : s) {
      auto [it, inserted] = vertex_of.try_emplace(label, labels.size());
      if (inserted) labels.push_back(label);
      idx.push_back(it->second);
    }
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
      throw ValidationError("simplex lists a vertex twice");
    max_size = std::max(max_size, idx.size());
    tops.push_back(std::move(idx));
  }

  const int d = static_cast<int>(max_size) - 1;
  ComplexSkeleton x;
  x.simplicial_ = true;
  x.cells_.resize(static_cast<std::size_t>(d + 2));
  x.cells_[0].push_back(Cell{"", {}, {}});
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> seen(static_cast<std::size_t>(d + 1));

  for (const auto& top : tops) {
    const std::size_t n = top.size();
    for (std::size_t size = 1; size <= n; ++size) {
      // k-faces of this simplex in lexicographic order of positions
      std::vector<std::size_t> pos(size);
      for (std::size_t i = 0; i < size; ++i) pos[i] = i;
      while (true) {
        std::vector<std::size_t> verts(size);
        for (std::size_t i = 0; i < size; ++i) verts[i] = top[pos[i]];
        auto& bucket = seen[size - 1];
        if (!bucket.contains(verts)) {
          bucket.emplace(verts, x.cells_[size].size());
          x.cells_[size].push_back(Cell{join_labels(labels, verts), verts, {}});
        }
        std::size_t i = size;
        while (i > 0 && pos[i - 1] == n - size + i - 1) --i;
        if (i == 0) break;
        ++pos[i - 1];
        for (std::size_t j = i; j < size; ++j) pos[j] = pos[j - 1] + 1;
      }
    }
  }

  for (std::size_t size = 1; size <= static_cast<std::size_t>(d + 1); ++size) {
    for (auto& c : x.cells_[size]) {
      if (size == 1) {
        c.faces = {0};
        continue;
      }
      for (std::size_t drop = 0; drop < size; ++drop) {
        std::vector<std::size_t> f;
        for (std::size_t i = 0; i < size; ++i)
          if (i != drop) f.push_back(c.vertices[i]);
        c.faces.push_back(seen[size - 2].at(f));
      }
      std::sort(c.faces.begin(), c.faces.end());
    }
  }
  x.finish();
  return x;
}

ComplexSkeleton ComplexSkeleton::from_cells(const CellSpec& spec) {
  std::size_t top = spec.cells.size();
  while (top > 0 && spec.cells[top - 1].empty()) --top;
  if (top == 0 || spec.cells[0].empty()) throw ValidationError("empty complex: no 0-cells");

  ComplexSkeleton x;
  x.cells_.resize(top + 1);
  x.cells_[0].push_back(Cell{"", {}, {}});
  std::vector<std::map<std::string, std::size_t, std::less<>>> names(top);
  for (std::size_t k = 0; k < top; ++k) {
    for (const auto& name : spec.cells[k]) {
      if (!names[k].emplace(name, names[k].size()).second)
        throw ValidationError("duplicate " + std::to_string(k) + "-cell '" + name + "'");
      x.cells_[k + 1].push_back(Cell{name, {}, {}});
    }
  }
  for (auto& v : x.cells_[1]) v.faces = {0};
  for (std::size_t k = 1; k < top; ++k) {
    std::vector<bool> given(spec.cells[k].size(), false);
    if (k < spec.incidence.size()) {
      for (const auto& [cell, faces] : spec.incidence[k]) {
        auto it = names[k].find(cell);
        if (it == names[k].end())
          throw ValidationError("incidence for undeclared " + std::to_string(k) + "-cell '" + cell + "'");
        if (given[it->second])
          throw ValidationError("incidence for " + std::to_string(k) + "-cell '" + cell + "' given twice");
        given[it->second] = true;
        auto& c = x.cells_[k + 1][it->second];
        for (const auto& f : faces) {
          auto ft = names[k - 1].find(f);
          if (ft == names[k - 1].end())
            throw ValidationError("dangling incidence: '" + cell + "' names nonexistent " + std::to_string(k - 1) +
                                  "-cell '" + f + "'");
          c.faces.push_back(ft->second);
        }
        std::sort(c.faces.begin(), c.faces.end());
        if (std::adjacent_find(c.faces.begin(), c.faces.end()) != c.faces.end())
          throw ValidationError("'" + cell + "' lists a face twice");
      }
    }
    for (std::size_t i = 0; i < given.size(); ++i)
      if (!given[i]) throw ValidationError(std::to_string(k) + "-cell '" + spec.cells[k][i] + "' has no incidence");
  }
  x.finish();

  for (int k = 0; k < x.dim(); ++k) {
    if (!x.coboundary(k + 1).multiply(x.coboundary(k)).is_zero())
      throw ValidationError("coboundary composition delta^" + std::to_string(k + 1) + " o delta^" +
                            std::to_string(k) + " is nonzero (a cell boundary is not a cycle)");
  }
  return x;
}

void ComplexSkeleton::finish() {
  const int d = dim();
  index_.assign(static_cast<std::size_t>(d + 2), {});
  for (int k = 0; k <= d; ++k) {
    auto& level = cells_[static_cast<std::size_t>(k + 1)];
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (k == 0) {
        level[i].vertices = {i};
      } else if (!simplicial_) {
        std::set<std::size_t> vs;
        for (auto f : level[i].faces) {
          const auto& fv = cells_[static_cast<std::size_t>(k)][f].vertices;
          vs.insert(fv.begin(), fv.end());
        }
        level[i].vertices.assign(vs.begin(), vs.end());
      }
      index_[static_cast<std::size_t>(k + 1)].emplace(level[i].name, i);
    }
  }
  coboundary_.clear();
  for (int k = 0; k <= d + 1; ++k) {
    GF2Matrix m(num_cells(k), num_cells(k - 1));
    if (k <= d)
      for (std::size_t s = 0; s < m.rows(); ++s)
        for (auto f : cell(k, s).faces) m.set(s, f);
    coboundary_.push_back(std::move(m));
  }
  // augmented delta o delta: every edge has an even number of endpoints, etc.
  if (d >= 1 && !coboundary_[1].multiply(coboundary_[0]).is_zero())
    throw ValidationError("an edge does not have exactly two endpoints (delta^1 o delta^0 is nonzero)");
}

std::size_t ComplexSkeleton::num_cells(int k) const {
  if (k < -1 || k > dim()) return 0;
  return cells_[static_cast<std::size_t>(k + 1)].size();
}

std::optional<std::size_t> ComplexSkeleton::find(int k, std::string_view name) const {
  if (k < -1 || k > dim()) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(k + 1)];
  auto it = idx.find(name);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

const GF2Matrix& ComplexSkeleton::coboundary(int k) const {
  if (k < 0 || k > dim() + 1) throw std::out_of_range("coboundary degree " + std::to_string(k) + " out of range");
  return coboundary_[static_cast<std::size_t>(k)];
}

bool ComplexSkeleton::cells_meet(int k1, std::size_t i1, int k2, std::size_t i2) const {
  const auto& a = cell(k1, i1).vertices;
  const auto& b = cell(k2, i2).vertices;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return false;
}

GF2Matrix coboundary_matrix(const ComplexSkeleton& x, int k, Augmentation aug) {
  if (k < 0 || k > x.dim())
    throw std::out_of_range("coboundary_matrix: k = " + std::to_string(k) + " outside [0, " +
                            std::to_string(x.dim()) + "]");
  if (k == 0 && aug == Augmentation::non_augmented) return GF2Matrix(x.num_cells(0), 0);
  return x.coboundary(k);
}

GF2Matrix boundary_matrix(const ComplexSkeleton& x, int k, Augmentation aug) {
  return coboundary_matrix(x, k, aug).transpose();
}

std::vector<BitVector> cocycle_basis(const ComplexSkeleton& x, int k) {
  if (k == -1) return kernel_basis(x.coboundary(0));
  return kernel_basis(x.coboundary(k + 1));
}

std::vector<BitVector> coboundary_basis(const ComplexSkeleton& x, int k) {
  if (k == -1) return {};
  return image_basis(x.coboundary(k));
}

Cochain incidence_cochain(const ComplexSkeleton& x, int tau_dim, std::size_t tau, int k) {
  if (tau_dim < 0) throw std::invalid_argument("incidence_cochain: tau must be a nonempty cell");
  if (tau_dim > x.dim() || tau >= x.num_cells(tau_dim)) throw std::out_of_range("incidence_cochain: no such cell");
  if (k < 0 || k > x.dim()) throw std::out_of_range("incidence_cochain: degree out of range");
  Cochain c = Cochain::zero(x, k);
  for (std::size_t s = 0; s < x.num_cells(k); ++s)
    if (x.cells_meet(tau_dim, tau, k, s)) c.bits.set(s);
  return c;
}

// ------------------------------------------------------------ WeightedNorm

WeightedNorm WeightedNorm::hamming(const ComplexSkeleton& x) {
  WeightedNorm n;
  n.hamming_ = true;
  n.weights_.push_back({Rational(1)});
  for (int k = 0; k <= x.dim(); ++k) {
    const auto count = x.num_cells(k);
    n.weights_.emplace_back(count, Rational(1, static_cast<long long>(count)));
  }
  n.finish();
  return n;
}

WeightedNorm WeightedNorm::from_weights(const ComplexSkeleton& x, std::vector<std::vector<Rational>> weights) {
  if (static_cast<int>(weights.size()) != x.dim() + 1)
    throw ValidationError("weights must be given for every dimension 0.." + std::to_string(x.dim()));
  WeightedNorm n;
  n.weights_.push_back({Rational(1)});
  bool uniform = true;
  for (int k = 0; k <= x.dim(); ++k) {
    auto& row = weights[static_cast<std::size_t>(k)];
    if (row.size() != x.num_cells(k))
      throw ValidationError("weights for dimension " + std::to_string(k) + " have the wrong length");
    Rational total = 0;
    for (const auto& w : row) {
      if (w < 0) throw ValidationError("negative weight in dimension " + std::to_string(k));
      total += w;
      if (w != row.front()) uniform = false;
    }
    if (total != 1)
      throw ValidationError("weights in dimension " + std::to_string(k) + " sum to " + to_string(total) +
                            ", expected 1/1");
    n.weights_.push_back(std::move(row));
  }
  n.hamming_ = uniform;
  n.finish();
  return n;
}

void WeightedNorm::finish() {
  scaled_.clear();
  for (const auto& row : weights_) scaled_.push_back(ScaledWeights::from_rationals(row));
}

Rational WeightedNorm::norm(int k, const BitVector& bits) const {
  const auto& row = weights(k);
  if (bits.size() != row.size())
    throw std::invalid_argument("norm: cochain of degree " + std::to_string(k) + " has the wrong length");
  return scaled(k).to_rational(scaled(k).weight_of(bits));
}

CosetMin coset_min_weight(const std::vector<BitVector>& basis, const BitVector& alpha, const WeightedNorm& n, int k,
                          int max_dim) {
  return coset_min_weight(basis, alpha, n.scaled(k), max_dim);
}

}  // namespace overlap
