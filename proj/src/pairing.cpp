#include "overlap/pairing.hpp"

#include "overlap/complex_io.hpp"
#include "overlap/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace overlap {

ChainCochainMap ChainCochainMap::zero(const ComplexSkeleton& x, const ComplexSkeleton& t, int d, int top) {
  ChainCochainMap f;
  f.d = d;
  f.top = top;
  for (int k = 0; k <= d; ++k) f.blocks.emplace_back(x.num_cells(top - k), t.num_cells(k));
  return f;
}

std::string to_text(const ChainCochainMap& f) {
  std::ostringstream out;
  out << "chain_cochain_map " << f.d << ' ' << f.top << '\n';
  for (int k = 0; k <= f.d; ++k) {
    const auto& m = f.blocks[k];
    out << "block " << k << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) out << m.row(r).to_string() << '\n';
  }
  return out.str();
}

ChainCochainMap chain_cochain_map_from_text(std::string_view text) {
  const auto lines = logical_lines(text);
  std::size_t i = 0;
  auto next = [&]() -> std::pair<int, std::vector<std::string>> {
    while (i < lines.size()) {
      auto toks = split_ws(lines[i]);
      ++i;
      if (!toks.empty()) return {static_cast<int>(i), toks};
    }
    return {0, {}};
  };
  auto to_int = [](const std::string& s, int ln) {
    try {
      std::size_t pos = 0;
      const long v = std::stol(s, &pos);
      if (pos != s.size() || v < 0) throw std::invalid_argument(s);
      return static_cast<int>(v);
    } catch (const std::exception&) {
      throw ValidationError("expected a nonnegative integer, got '" + s + "'", ln);
    }
  };
  auto [ln, head] = next();
  if (head.size() != 3 || head[0] != "chain_cochain_map")
    throw ValidationError("expected 'chain_cochain_map <d> <top>'", ln);
  ChainCochainMap f;
  f.d = to_int(head[1], ln);
  f.top = to_int(head[2], ln);
  for (int k = 0; k <= f.d; ++k) {
    auto [bl, b] = next();
    if (b.size() != 4 || b[0] != "block" || to_int(b[1], bl) != k)
      throw ValidationError("expected 'block " + std::to_string(k) + " <rows> <cols>'", bl);
    const auto rows = static_cast<std::size_t>(to_int(b[2], bl));
    const auto cols = static_cast<std::size_t>(to_int(b[3], bl));
    GF2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      auto [rl, row] = next();
      if (row.size() != 1 || row[0].size() != cols || row[0].find_first_not_of("01") != std::string::npos)
        throw ValidationError("expected a row of " + std::to_string(cols) + " bits", rl);
      for (std::size_t c = 0; c < cols; ++c)
        if (row[0][c] == '1') m.set(r, c);
    }
    f.blocks.push_back(std::move(m));
  }
  if (auto [tl, tail] = next(); !tail.empty()) throw ValidationError("trailing content", tl);
  return f;
}

void check_shape(const ChainCochainMap& f, const ComplexSkeleton& x, const ComplexSkeleton& t) {
  if (static_cast<int>(f.blocks.size()) != f.d + 1) throw ValidationError("wrong number of blocks");
  if (t.dim() != f.d) throw ValidationError("the target triangulation must have dimension " + std::to_string(f.d));
  if (f.top > x.dim()) throw ValidationError("the complex has no cells of dimension " + std::to_string(f.top));
  for (int k = 0; k <= f.d; ++k) {
    const auto& m = f.blocks[k];
    if (m.rows() != x.num_cells(f.top - k) || m.cols() != t.num_cells(k))
      throw ValidationError("block " + std::to_string(k) + " has shape " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected " + std::to_string(x.num_cells(f.top - k)) +
                            "x" + std::to_string(t.num_cells(k)));
  }
}

ChainCochainMap transversal_pairing(const ComplexSkeleton& x, const CircleMap& f, const CircleTriangulation& t) {
  validate_circle_map(x, f);
  for (std::size_t v = 0; v < f.images.size(); ++v)
    if (t.is_vertex(f.images[v]))
      throw GeneralPositionError("vertex '" + x.cell(0, v).name + "' maps onto a triangulation vertex");
  for (std::size_t e = 0; e < f.paths.size(); ++e)
    for (const auto& p : f.paths[e])
      if (t.is_vertex(p))
        throw GeneralPositionError("path of edge '" + x.cell(1, e).name + "' has a vertex " + to_string(mod1(p)) +
                                   " on the triangulation");

  const ComplexSkeleton tc = t.to_complex();
  ChainCochainMap m = ChainCochainMap::zero(x, tc, 1, 1);
  for (std::size_t v = 0; v < t.size(); ++v)
    for (std::size_t e = 0; e < f.paths.size(); ++e)
      if (circle_crossing_parity(f.paths[e], t.vertices()[v])) m.blocks[0].set(e, v);
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t v = 0; v < f.images.size(); ++v)
      if (t.arc_contains(a, f.images[v])) m.blocks[1].set(v, a);
  return m;
}

ChainCochainCheck verify_chain_cochain(const ChainCochainMap& f, const ComplexSkeleton& t, const ComplexSkeleton& x) {
  for (int k = 1; k <= f.d; ++k) {
    const int q = f.target_degree(k);
    const GF2Matrix& delta = x.coboundary(q + 1);
    for (std::size_t tau = 0; tau < t.num_cells(k); ++tau) {
      BitVector lhs(x.num_cells(q + 1));
      for (std::size_t face : t.cell(k, tau).faces) lhs ^= f.apply(k - 1, face);
      if (lhs != delta.multiply(f.apply(k, tau))) return {false, k, tau};
    }
  }
  return {};
}

Cochain fundamental_class_pairing(const ChainCochainMap& f, const ComplexSkeleton& t) {
  return {f.target_degree(f.d), f.apply_chain(f.d, BitVector::ones(t.num_cells(f.d)))};
}

Rational arc_load(const ComplexSkeleton& x, const CircleMap& f, const CircleTriangulation& t, std::size_t i,
                  const WeightedNorm& n) {
  Rational load = 0;
  for (std::size_t v = 0; v < x.num_cells(0); ++v)
    if (t.arc_contains(i, f.images[v])) load += n.weight(0, v);
  return load;
}

Rational fineness_bound(const ComplexSkeleton& x, const WeightedNorm& n) {
  Rational bound = 0;
  for (std::size_t v = 0; v < x.num_cells(0); ++v) bound = std::max(bound, n.weight(0, v));
  return bound;
}

RefineResult refine_until_fine(const CircleTriangulation& t, const CircleMap& f, const ComplexSkeleton& x,
                               const WeightedNorm& n, int max_refinements) {
  const Rational bound = fineness_bound(x, n);

  std::set<Rational> avoid(f.images.begin(), f.images.end());
  for (const auto& p : f.paths)
    for (const auto& q : p) avoid.insert(mod1(q));

  RefineResult res{t, 0, true, bound, std::nullopt};
  for (;;) {
    const CircleTriangulation& cur = res.triangulation;
    std::optional<std::size_t> bad;
    for (std::size_t a = 0; a < cur.size() && !bad; ++a)
      if (arc_load(x, f, cur, a, n) > bound) bad = a;
    if (!bad) return res;

    const auto [lo, hi] = cur.arc(*bad);
    std::set<Rational> inside;
    for (const auto& y : f.images)
      if (cur.arc_contains(*bad, y)) inside.insert(y);
    if (inside.size() <= 1 || res.refinements >= max_refinements) {
      res.fine = false;
      res.offending_arc = bad;
      return res;
    }
    const Rational len = hi - lo;
    Rational split = (lo + hi) / 2;
    for (int j = 2; avoid.count(mod1(split)); ++j) split = (lo + hi) / 2 + len / (BigInt(1) << j);
    std::vector<Rational> verts = cur.vertices();
    verts.push_back(mod1(split));
    std::sort(verts.begin(), verts.end());
    res.triangulation = CircleTriangulation(std::move(verts));
    ++res.refinements;
  }
}

}  // namespace overlap
