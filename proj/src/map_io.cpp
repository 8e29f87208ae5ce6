#include "overlap/map_io.hpp"

#include "overlap/complex_io.hpp"
#include "overlap/errors.hpp"

#include <algorithm>
#include <sstream>

namespace overlap {

namespace {

std::vector<Rational> parse_numbers(const std::vector<std::string>& toks, int line) {
  std::vector<Rational> out;
  for (const auto& t : toks) {
    try {
      out.push_back(parse_rational(t));
    } catch (const std::invalid_argument&) {
      throw ValidationError("bad rational '" + t + "'", line);
    }
  }
  return out;
}

std::size_t find_edge(const ComplexSkeleton& x, const std::vector<std::string>& head, int line) {
  if (x.dim() < 1) throw ValidationError("the complex has no edges", line);
  if (head.size() == 1) {
    if (auto e = x.find(1, head[0])) return *e;
    throw ValidationError("unknown edge '" + head[0] + "'", line);
  }
  if (head.size() != 2) throw ValidationError("expected 'edge <a> <b>:' or 'edge <name>:'", line);
  auto a = x.find(0, head[0]);
  auto b = x.find(0, head[1]);
  if (!a || !b) throw ValidationError("unknown vertex in edge '" + head[0] + " " + head[1] + "'", line);
  std::vector<std::size_t> want{std::min(*a, *b), std::max(*a, *b)};
  std::optional<std::size_t> hit;
  for (std::size_t e = 0; e < x.num_cells(1); ++e) {
    if (x.cell(1, e).vertices != want) continue;
    if (hit) throw ValidationError("edge '" + head[0] + " " + head[1] + "' is ambiguous; use its name", line);
    hit = e;
  }
  if (!hit) throw ValidationError("no edge between '" + head[0] + "' and '" + head[1] + "'", line);
  return *hit;
}

}  // namespace

ParsedMap parse_map(const ComplexSkeleton& x, std::string_view text) {
  const auto lines = logical_lines(text);
  std::string target;
  int target_dim = 0;
  std::vector<std::optional<std::vector<Rational>>> images(x.num_cells(0));
  std::vector<int> image_line(x.num_cells(0), 0);
  std::vector<std::pair<int, std::string>> edge_lines;
  std::optional<CircleTriangulation> tri;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int ln = static_cast<int>(li) + 1;
    const std::string_view line = trim(lines[li]);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ValidationError("expected ':'", ln);
    const auto head = split_ws(line.substr(0, colon));
    const auto body = split_ws(line.substr(colon + 1));
    if (head.empty()) throw ValidationError("missing key", ln);
    const std::string& key = head[0];
    if (key == "target") {
      if (!target.empty()) throw ValidationError("duplicate target", ln);
      if (head.size() != 1 || body.size() != 1) throw ValidationError("expected 'target: R1|R2|circle'", ln);
      target = body[0];
      if (target == "R1")
        target_dim = 1;
      else if (target == "R2")
        target_dim = 2;
      else if (target == "circle")
        target_dim = 1;
      else
        throw ValidationError("unknown target '" + target + "'", ln);
    } else if (key == "vertex") {
      if (target.empty()) throw ValidationError("'target' must come first", ln);
      if (head.size() != 2) throw ValidationError("expected 'vertex <label>:'", ln);
      auto v = x.find(0, head[1]);
      if (!v) throw ValidationError("unknown vertex '" + head[1] + "'", ln);
      if (images[*v]) throw ValidationError("duplicate image for vertex '" + head[1] + "'", ln);
      auto coords = parse_numbers(body, ln);
      if (static_cast<int>(coords.size()) != target_dim)
        throw ValidationError("expected " + std::to_string(target_dim) + " coordinate(s)", ln);
      images[*v] = std::move(coords);
      image_line[*v] = ln;
    } else if (key == "edge") {
      if (target != "circle") throw ValidationError("edge paths are only allowed for circle targets", ln);
      edge_lines.emplace_back(ln, std::string(line));
    } else if (key == "triangulation") {
      if (target != "circle") throw ValidationError("a triangulation needs a circle target", ln);
      if (tri) throw ValidationError("duplicate triangulation", ln);
      if (head.size() != 1) throw ValidationError("expected 'triangulation: t0 t1 ...'", ln);
      try {
        tri.emplace(parse_numbers(body, ln));
      } catch (const ValidationError& e) {
        if (e.line() > 0) throw;
        throw ValidationError(e.what(), ln);
      }
    } else {
      throw ValidationError("unknown key '" + key + "'", ln);
    }
  }
  if (target.empty()) throw ValidationError("missing 'target' line");
  for (std::size_t v = 0; v < images.size(); ++v)
    if (!images[v]) throw ValidationError("no image for vertex '" + x.cell(0, v).name + "'");

  if (target != "circle") {
    EuclideanMap f;
    f.target_dim = target_dim;
    for (auto& im : images) f.images.push_back(RationalPoint{std::move(*im)});
    return ParsedMap{std::move(f), std::nullopt};
  }

  CircleMap f;
  for (std::size_t v = 0; v < images.size(); ++v) {
    const Rational& y = images[v]->front();
    if (y < 0 || y >= 1) throw ValidationError("circle images must lie in [0, 1)", image_line[v]);
    f.images.push_back(y);
  }
  std::vector<std::optional<std::vector<Rational>>> paths(x.dim() >= 1 ? x.num_cells(1) : 0);
  for (const auto& [ln, text_line] : edge_lines) {
    const std::string_view l = text_line;
    const auto colon = l.find(':');
    auto head = split_ws(l.substr(0, colon));
    head.erase(head.begin());
    const std::size_t e = find_edge(x, head, ln);
    if (paths[e]) throw ValidationError("duplicate path for edge '" + x.cell(1, e).name + "'", ln);
    auto p = parse_numbers(split_ws(l.substr(colon + 1)), ln);
    if (p.empty()) throw ValidationError("empty path", ln);
    // stored from the edge's first vertex
    if (head.size() == 2 && x.find(0, head[0]) != x.cell(1, e).vertices[0]) std::reverse(p.begin(), p.end());
    paths[e] = std::move(p);
  }
  for (std::size_t e = 0; e < paths.size(); ++e) {
    const auto& verts = x.cell(1, e).vertices;
    if (verts.size() != 2) throw ValidationError("edge '" + x.cell(1, e).name + "' does not have two endpoints");
    if (paths[e]) {
      f.paths.push_back(std::move(*paths[e]));
    } else {
      try {
        f.paths.push_back(geodesic_path(f.images[verts[0]], f.images[verts[1]]));
      } catch (const ValidationError& err) {
        throw ValidationError("edge '" + x.cell(1, e).name + "': " + err.what());
      }
    }
  }
  validate_circle_map(x, f);
  return ParsedMap{std::move(f), std::move(tri)};
}

ParsedMap read_map_file(const ComplexSkeleton& x, const std::string& path) {
  return parse_map(x, read_text_file(path));
}

std::string format_map(const ComplexSkeleton& x, const EuclideanMap& f) {
  std::ostringstream out;
  out << "target: R" << f.target_dim << '\n';
  for (std::size_t v = 0; v < f.images.size(); ++v) {
    out << "vertex " << x.cell(0, v).name << ':';
    for (const auto& c : f.images[v].coords) out << ' ' << to_string(c);
    out << '\n';
  }
  return out.str();
}

std::string format_map(const ComplexSkeleton& x, const CircleMap& f, const CircleTriangulation* t) {
  std::ostringstream out;
  out << "target: circle\n";
  for (std::size_t v = 0; v < f.images.size(); ++v)
    out << "vertex " << x.cell(0, v).name << ": " << to_string(f.images[v]) << '\n';
  for (std::size_t e = 0; e < f.paths.size(); ++e) {
    out << "edge " << x.cell(1, e).name << ':';
    for (const auto& p : f.paths[e]) out << ' ' << to_string(p);
    out << '\n';
  }
  if (t) {
    out << "triangulation:";
    for (const auto& v : t->vertices()) out << ' ' << to_string(v);
    out << '\n';
  }
  return out.str();
}

}  // namespace overlap
