#include "overlap/geometry.hpp"

#include "overlap/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace overlap {

bool lex_less(const RationalPoint& a, const RationalPoint& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end());
}

std::string to_string(const RationalPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) s += ", ";
    s += to_string(p.coords[i]);
  }
  return s + ")";
}

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form over the first `cols` columns; returns
// the pivot columns.
std::vector<std::size_t> rref(RMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j < m[r].size(); ++j) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

// Equations n . x = c describing aff(points) in R^d (points nonempty).
RMatrix hull_equations(const std::vector<RationalPoint>& points, int d) {
  const auto n = static_cast<std::size_t>(d);
  RMatrix dirs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = points[i].coords[j] - points[0].coords[j];
    dirs.push_back(std::move(row));
  }
  auto pivots = rref(dirs, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  RMatrix eqs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> normal(n, Rational(0));
    normal[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) normal[pivots[i]] = -dirs[i][f];
    Rational c = 0;
    for (std::size_t j = 0; j < n; ++j) c += normal[j] * points[0].coords[j];
    normal.push_back(c);
    eqs.push_back(std::move(normal));
  }
  return eqs;
}

int stacked_dimension(RMatrix eqs, int d) {
  const auto n = static_cast<std::size_t>(d);
  auto pivots = rref(eqs, n);
  for (std::size_t r = pivots.size(); r < eqs.size(); ++r)
    if (eqs[r][n] != 0) return -1;
  return d - static_cast<int>(pivots.size());
}

int expected_dimension(int dim_sum, int d, int r) { return std::max(-1, dim_sum - d * (r - 1)); }

void check_common_dimension(const std::vector<RationalPoint>& points, int d) {
  for (const auto& p : points)
    if (p.dim() != d) throw std::invalid_argument("points of different dimensions");
}

}  // namespace

int rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const auto cols = rows[0].size();
  return static_cast<int>(rref(rows, cols).size());
}

int affine_dimension(const std::vector<RationalPoint>& points) {
  if (points.empty()) return -1;
  RMatrix dirs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> row;
    for (std::size_t j = 0; j < points[i].coords.size(); ++j) row.push_back(points[i].coords[j] - points[0].coords[j]);
    dirs.push_back(std::move(row));
  }
  return rational_rank(std::move(dirs));
}

int hull_intersection_dimension(const std::vector<std::vector<RationalPoint>>& point_sets, int d) {
  RMatrix eqs;
  for (const auto& s : point_sets) {
    if (s.empty()) return -1;
    check_common_dimension(s, d);
    auto e = hull_equations(s, d);
    eqs.insert(eqs.end(), e.begin(), e.end());
  }
  return stacked_dimension(std::move(eqs), d);
}

bool subspaces_in_general_position(const std::vector<std::vector<RationalPoint>>& subspaces, int d) {
  const std::size_t m = subspaces.size();
  if (m > 30) throw BudgetExceeded("sub-collections of affine subspaces", static_cast<int>(m), 30);
  std::vector<RMatrix> eqs;
  std::vector<int> dims;
  for (const auto& s : subspaces) {
    check_common_dimension(s, d);
    dims.push_back(affine_dimension(s));
    eqs.push_back(s.empty() ? RMatrix{} : hull_equations(s, d));
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const int r = std::popcount(mask);
    if (r < 2) continue;
    RMatrix stacked;
    int dim_sum = 0;
    bool has_empty = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (!((mask >> i) & 1)) continue;
      if (dims[i] < 0) has_empty = true;
      dim_sum += dims[i];
      stacked.insert(stacked.end(), eqs[i].begin(), eqs[i].end());
    }
    const int actual = has_empty ? -1 : stacked_dimension(std::move(stacked), d);
    if (actual != expected_dimension(dim_sum, d, r)) return false;
  }
  return true;
}

bool points_in_general_position(const std::vector<RationalPoint>& points, int budget_log2) {
  const std::size_t n = points.size();
  if (n < 2) return true;
  if (n > 62) throw BudgetExceeded("points in general position", static_cast<int>(n), 62);
  const int d = points[0].dim();
  check_common_dimension(points, d);

  std::map<std::uint64_t, std::pair<int, RMatrix>> cache;  // subset -> (dim, equations)
  auto hull_of = [&](std::uint64_t mask) -> const std::pair<int, RMatrix>& {
    auto it = cache.find(mask);
    if (it != cache.end()) return it->second;
    std::vector<RationalPoint> sub;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) sub.push_back(points[i]);
    return cache.emplace(mask, std::make_pair(affine_dimension(sub), hull_equations(sub, d))).first->second;
  };

  const std::uint64_t cap = budget_log2 >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << budget_log2);
  std::uint64_t examined = 0;
  std::vector<std::uint64_t> blocks;
  bool ok = true;

  // Each point is unused or joins an existing block or opens a new one, so
  // every unordered family of disjoint nonempty subsets appears exactly once.
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (!ok) return;
    if (i == n) {
      if (blocks.size() < 2) return;
      if (++examined > cap) throw BudgetExceeded("families of disjoint point subsets", budget_log2 + 1, budget_log2);
      RMatrix stacked;
      int dim_sum = 0;
      for (auto b : blocks) {
        const auto& h = hull_of(b);
        dim_sum += h.first;
        stacked.insert(stacked.end(), h.second.begin(), h.second.end());
      }
      const int r = static_cast<int>(blocks.size());
      if (stacked_dimension(std::move(stacked), d) != expected_dimension(dim_sum, d, r)) ok = false;
      return;
    }
    self(self, i + 1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b] |= std::uint64_t{1} << i;
      self(self, i + 1);
      blocks[b] &= ~(std::uint64_t{1} << i);
    }
    blocks.push_back(std::uint64_t{1} << i);
    self(self, i + 1);
    blocks.pop_back();
  };
  recurse(recurse, 0);
  return ok;
}

// ------------------------------------------------------------------ plane

bool lex_less(const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

Rational orient(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

ConvexSet2 ConvexSet2::hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) { return lex_less(a, b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  ConvexSet2 out;
  if (pts.size() <= 2) {
    out.vertices_ = std::move(pts);
    return out;
  }
  std::vector<Point2> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  out.vertices_ = std::move(h);
  return out;
}

int ConvexSet2::dimension() const {
  if (vertices_.size() >= 3) return 2;
  return static_cast<int>(vertices_.size()) - 1;
}

bool ConvexSet2::contains(const Point2& p) const {
  switch (vertices_.size()) {
    case 0:
      return false;
    case 1:
      return vertices_[0] == p;
    case 2: {
      const auto& a = vertices_[0];
      const auto& b = vertices_[1];
      if (orient(a, b, p) != 0) return false;
      const Rational dot = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
      const Rational len = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
      return dot >= 0 && dot <= len;
    }
    default:
      for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (orient(vertices_[i], vertices_[(i + 1) % vertices_.size()], p) < 0) return false;
      return true;
  }
}

std::optional<Point2> segment_crossing(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const Rational dx1 = b.x - a.x, dy1 = b.y - a.y;
  const Rational dx2 = d.x - c.x, dy2 = d.y - c.y;
  const Rational denom = dx1 * dy2 - dy1 * dx2;
  if (denom == 0) return std::nullopt;
  const Rational ex = c.x - a.x, ey = c.y - a.y;
  const Rational t = (ex * dy2 - ey * dx2) / denom;
  const Rational u = (ex * dy1 - ey * dx1) / denom;
  if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
  return Point2{a.x + t * dx1, a.y + t * dy1};
}

ConvexSet2 ConvexSet2::intersect(const ConvexSet2& other) const {
  if (empty() || other.empty()) return {};
  std::vector<Point2> cand;
  for (const auto& p : vertices_)
    if (other.contains(p)) cand.push_back(p);
  for (const auto& p : other.vertices_)
    if (contains(p)) cand.push_back(p);
  auto edges = [](const std::vector<Point2>& v) {
    std::vector<std::pair<Point2, Point2>> e;
    if (v.size() == 2) e.emplace_back(v[0], v[1]);
    if (v.size() >= 3)
      for (std::size_t i = 0; i < v.size(); ++i) e.emplace_back(v[i], v[(i + 1) % v.size()]);
    return e;
  };
  for (const auto& [a, b] : edges(vertices_))
    for (const auto& [c, d] : edges(other.vertices_))
      if (auto p = segment_crossing(a, b, c, d)) cand.push_back(*p);
  return hull(std::move(cand));
}

// ------------------------------------------------------------ affine maps

ConvexSet2 cell_image(const ComplexSkeleton& x, const EuclideanMap& f, int k, std::size_t cell) {
  std::vector<Point2> pts;
  for (auto v : x.cell(k, cell).vertices) {
    const auto& c = f.images.at(v).coords;
    pts.push_back(Point2{c.at(0), f.target_dim >= 2 ? c.at(1) : Rational(0)});
  }
  return ConvexSet2::hull(std::move(pts));
}

GeneralPositionCheck strongly_general_position_check(const ComplexSkeleton& x, const EuclideanMap& f,
                                                     int budget_log2) {
  const int d = f.target_dim;
  if (d < 1 || d > 2) throw std::invalid_argument("strong general position is checked for targets R^1 and R^2 only");
  if (f.images.size() != x.num_cells(0)) throw std::invalid_argument("map does not give an image for every vertex");

  struct Item {
    int dim;
    std::size_t index;
    ConvexSet2 image;
  };
  std::vector<Item> items;
  for (int k = 0; k <= x.dim(); ++k)
    for (std::size_t i = 0; i < x.num_cells(k); ++i) items.push_back({k, i, cell_image(x, f, k, i)});

  const std::uint64_t cap = budget_log2 >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << budget_log2);
  GeneralPositionCheck out;
  std::vector<bool> used(x.num_cells(0), false);
  std::vector<std::size_t> chosen;

  auto recurse = [&](auto&& self, std::size_t start, const ConvexSet2& inter, int dim_sum) -> void {
    for (std::size_t i = start; i < items.size() && out.ok; ++i) {
      const auto& it = items[i];
      const auto& verts = x.cell(it.dim, it.index).vertices;
      if (std::any_of(verts.begin(), verts.end(), [&](std::size_t v) { return used[v]; })) continue;
      if (++out.tuples_examined > cap)
        throw BudgetExceeded("tuples of disjoint cells", budget_log2 + 1, budget_log2);
      ConvexSet2 next = chosen.empty() ? it.image : inter.intersect(it.image);
      chosen.push_back(i);
      const int r = static_cast<int>(chosen.size());
      const int bound = expected_dimension(dim_sum + it.dim, d, r);
      if (next.dimension() > bound) {
        out.ok = false;
        out.intersection_dim = next.dimension();
        out.bound = bound;
        for (auto c : chosen) out.violation.emplace_back(items[c].dim, items[c].index);
      } else if (!next.empty()) {
        for (auto v : verts) used[v] = true;
        self(self, i + 1, next, dim_sum + it.dim);
        for (auto v : verts) used[v] = false;
      }
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, ConvexSet2{}, 0);
  return out;
}

EuclideanMap perturb(const EuclideanMap& f, int denom_exponent, std::mt19937_64& rng) {
  if (denom_exponent < 0 || denom_exponent > 200) throw std::invalid_argument("perturbation exponent out of range");
  const BigInt denom = BigInt(1) << denom_exponent;
  EuclideanMap g = f;
  for (auto& p : g.images)
    for (auto& c : p.coords) {
      const auto m = static_cast<long long>(rng() % 33) - 16;
      c += Rational(BigInt(m), denom);
    }
  return g;
}

}  // namespace overlap
