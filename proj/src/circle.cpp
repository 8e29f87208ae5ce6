#include "overlap/circle.hpp"

#include "overlap/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace overlap {

Rational mod1(const Rational& x) { return x - floor(x); }

CircleTriangulation::CircleTriangulation(std::vector<Rational> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw ValidationError("a circle triangulation needs at least three vertices");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] < 0 || vertices_[i] >= 1) throw ValidationError("triangulation vertices must lie in [0, 1)");
    if (i > 0 && vertices_[i] <= vertices_[i - 1])
      throw ValidationError("triangulation vertices must be strictly increasing");
  }
}

std::pair<Rational, Rational> CircleTriangulation::arc(std::size_t i) const {
  if (i + 1 < vertices_.size()) return {vertices_[i], vertices_[i + 1]};
  return {vertices_.back(), vertices_.front() + 1};
}

bool CircleTriangulation::arc_contains(std::size_t i, const Rational& x) const {
  const auto [lo, hi] = arc(i);
  Rational y = mod1(x);
  if (y <= lo) y += 1;
  return y > lo && y < hi;
}

bool CircleTriangulation::is_vertex(const Rational& x) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), mod1(x));
}

ComplexSkeleton CircleTriangulation::to_complex() const {
  CellSpec spec;
  spec.cells.resize(2);
  spec.incidence.resize(2);
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) spec.cells[0].push_back("t" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    spec.cells[1].push_back("a" + std::to_string(i));
    spec.incidence[1].emplace_back("a" + std::to_string(i),
                                   std::vector<std::string>{"t" + std::to_string(i), "t" + std::to_string((i + 1) % n)});
  }
  return ComplexSkeleton::from_cells(spec);
}

std::vector<Rational> geodesic_path(const Rational& from, const Rational& to) {
  Rational delta = mod1(to - from);
  if (delta == 0) return {from};
  if (delta == Rational(1, 2)) throw ValidationError("antipodal endpoints: the geodesic is ambiguous");
  if (delta > Rational(1, 2)) delta -= 1;
  return {from, from + delta};
}

void validate_circle_map(const ComplexSkeleton& x, const CircleMap& f) {
  if (f.images.size() != x.num_cells(0)) throw ValidationError("circle map must give an image for every vertex");
  if (f.paths.size() != x.num_cells(1)) throw ValidationError("circle map must give a path for every edge");
  for (const auto& y : f.images)
    if (y < 0 || y >= 1) throw ValidationError("circle images must lie in [0, 1)");
  for (std::size_t e = 0; e < f.paths.size(); ++e) {
    const auto& p = f.paths[e];
    const auto& verts = x.cell(1, e).vertices;
    const std::string name = "edge '" + x.cell(1, e).name + "'";
    if (verts.size() != 2) throw ValidationError(name + " does not have two endpoints");
    if (p.empty()) throw ValidationError(name + " has an empty path");
    if (mod1(p.front()) != f.images[verts[0]] || mod1(p.back()) != f.images[verts[1]])
      throw ValidationError(name + ": path endpoints do not match the vertex images");
    for (std::size_t i = 1; i < p.size(); ++i)
      if (p[i] == p[i - 1]) throw ValidationError(name + ": consecutive path points coincide");
  }
}

bool circle_crossing_parity(std::span<const Rational> path, const Rational& v) {
  const Rational t = mod1(v);
  for (const auto& p : path)
    if (mod1(p) == t)
      throw GeneralPositionError("circle point " + to_string(t) + " coincides with a path vertex");
  bool parity = false;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Rational& lo = std::min(path[i - 1], path[i]);
    const Rational& hi = std::max(path[i - 1], path[i]);
    // #{m in Z : lo < t + m < hi}, endpoints excluded by general position
    const Rational count = floor(hi - t) - floor(lo - t);
    if (boost::multiprecision::numerator(count) % 2 != 0) parity = !parity;
  }
  return parity;
}

CircleMap perturb(const ComplexSkeleton& x, const CircleMap& f, int denom_exponent, std::mt19937_64& rng) {
  if (denom_exponent < 0 || denom_exponent > 200) throw std::invalid_argument("perturbation exponent out of range");
  const BigInt denom = BigInt(1) << denom_exponent;
  std::vector<Rational> shift;
  CircleMap g = f;
  for (auto& y : g.images) {
    const auto m = static_cast<long long>(rng() % 33) - 16;
    shift.emplace_back(BigInt(m), denom);
    y = mod1(y + shift.back());
  }
  for (std::size_t e = 0; e < g.paths.size(); ++e) {
    auto& p = g.paths[e];
    const auto& verts = x.cell(1, e).vertices;
    if (p.size() == 1) p.push_back(p.front());
    p.front() += shift[verts[0]];
    p.back() += shift[verts[1]];
    p.erase(std::unique(p.begin(), p.end()), p.end());
  }
  return g;
}

}  // namespace overlap
