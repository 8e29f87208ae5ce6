#include "overlap/overlap_search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace overlap {

namespace {

struct Segment {
  Point2 a;
  Point2 b;
};

struct PointLess {
  bool operator()(const Point2& p, const Point2& q) const { return lex_less(p, q); }
};

RationalPoint lift(const Point2& p, int d) {
  if (d == 1) return RationalPoint{{p.x}};
  return RationalPoint{{p.x, p.y}};
}

Point2 flatten(const RationalPoint& p) {
  if (p.dim() == 1) return {p.coords[0], 0};
  return {p.coords.at(0), p.coords.at(1)};
}

void check_input(const ComplexSkeleton& x, const EuclideanMap& f) {
  if (f.target_dim != 1 && f.target_dim != 2)
    throw std::invalid_argument("overlap search supports targets R1 and R2 only");
  if (x.dim() < f.target_dim)
    throw std::invalid_argument("the complex has no cells of dimension " + std::to_string(f.target_dim));
  if (f.images.size() != x.num_cells(0)) throw std::invalid_argument("map does not cover every vertex");
}

PointValue evaluate(const std::vector<ConvexSet2>& images, const WeightedNorm& n, int d, const Point2& p) {
  PointValue pv{lift(p, d), 0, {}};
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i].contains(p)) {
      pv.value += n.weight(d, i);
      pv.covering_cells.push_back(i);
    }
  return pv;
}

bool better(const PointValue& a, const PointValue& b) {
  if (a.value != b.value) return a.value > b.value;
  return lex_less(a.point, b.point);
}

}  // namespace

PointValue overlap_at_point(const ComplexSkeleton& x, const EuclideanMap& f, const WeightedNorm& n,
                            const RationalPoint& p) {
  check_input(x, f);
  if (p.dim() != f.target_dim) throw std::invalid_argument("point has the wrong dimension");
  const int d = f.target_dim;
  std::vector<ConvexSet2> images;
  for (std::size_t i = 0; i < x.num_cells(d); ++i) images.push_back(cell_image(x, f, d, i));
  auto pv = evaluate(images, n, d, flatten(p));
  pv.point = p;
  return pv;
}

OverlapResult geometric_overlap(const ComplexSkeleton& x, const EuclideanMap& f, const WeightedNorm& n) {
  check_input(x, f);
  const int d = f.target_dim;
  std::vector<ConvexSet2> images;
  for (std::size_t i = 0; i < x.num_cells(d); ++i) images.push_back(cell_image(x, f, d, i));

  // boundary pieces of every image; for d = 1 the pieces are the endpoints
  std::vector<Segment> segments;
  std::set<Point2, PointLess> vertices;
  for (const auto& im : images) {
    const auto& vs = im.vertices();
    for (const auto& v : vs) vertices.insert(v);
    if (d == 1) continue;
    if (vs.size() == 2) segments.push_back({vs[0], vs[1]});
    if (vs.size() >= 3)
      for (std::size_t i = 0; i < vs.size(); ++i) segments.push_back({vs[i], vs[(i + 1) % vs.size()]});
  }
  if (d == 2)
    for (std::size_t e = 0; e < x.num_cells(1); ++e) {
      const auto im = cell_image(x, f, 1, e);
      const auto& vs = im.vertices();
      for (const auto& v : vs) vertices.insert(v);
      if (vs.size() == 2) segments.push_back({vs[0], vs[1]});
    }
  for (std::size_t i = 0; i < segments.size(); ++i)
    for (std::size_t j = i + 1; j < segments.size(); ++j)
      if (auto c = segment_crossing(segments[i].a, segments[i].b, segments[j].a, segments[j].b)) vertices.insert(*c);

  // one point in each open face of the arrangement
  std::set<Point2, PointLess> faces;
  std::vector<Rational> xs;
  for (const auto& v : vertices) xs.push_back(v.x);
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rational mid = (xs[i] + xs[i + 1]) / 2;
    std::vector<Rational> ys;
    for (const auto& s : segments) {
      const auto [lo, hi] = std::minmax(s.a.x, s.b.x);
      if (lo >= mid || hi <= mid) continue;
      ys.push_back(s.a.y + (s.b.y - s.a.y) * (mid - s.a.x) / (s.b.x - s.a.x));
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    if (ys.empty()) {
      faces.insert({mid, 0});
      continue;
    }
    for (std::size_t j = 0; j + 1 < ys.size(); ++j) faces.insert({mid, (ys[j] + ys[j + 1]) / 2});
    faces.insert({mid, ys.front() - 1});
    faces.insert({mid, ys.back() + 1});
  }
  const Point2 far{xs.empty() ? Rational(1) : xs.back() + 1, 0};
  faces.insert(far);

  OverlapResult res;
  bool have_closed = false;
  bool have_generic = false;
  auto consider_closed = [&](const PointValue& pv) {
    if (!have_closed || better(pv, res.closed)) res.closed = pv;
    have_closed = true;
  };
  for (const auto& v : vertices) consider_closed(evaluate(images, n, d, v));
  for (const auto& p : faces) {
    const auto pv = evaluate(images, n, d, p);
    consider_closed(pv);
    if (!have_generic || better(pv, res.generic)) res.generic = pv;
    have_generic = true;
  }
  res.candidates = vertices.size() + faces.size();
  return res;
}

}  // namespace overlap
