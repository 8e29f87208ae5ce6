#include "overlap/generators.hpp"

#include <random>
#include <stdexcept>

namespace overlap {

namespace {

void subsets(int n, int size, int start, std::vector<std::string>& cur, SimplexList& out) {
  if (static_cast<int>(cur.size()) == size) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n; ++v) {
    cur.push_back(std::to_string(v));
    subsets(n, size, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SimplexList complete_skeleton(int n, int d) {
  if (d < 0 || n < d) throw std::invalid_argument("complete_skeleton needs 0 <= d <= n");
  SimplexList out;
  std::vector<std::string> cur;
  subsets(n + 1, d + 1, 1, cur, out);
  return out;
}

SimplexList cycle(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  SimplexList out;
  for (int i = 1; i <= n; ++i) out.push_back({std::to_string(i), std::to_string(i % n + 1)});
  return out;
}

SimplexList linial_meshulam(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("linial_meshulam needs at least one vertex");
  if (den == 0 || num > den) throw std::invalid_argument("linial_meshulam needs 0 <= p <= 1");
  SimplexList out;
  std::vector<std::string> cur;
  if (n == 1) return {{"1"}};
  subsets(n, 2, 1, cur, out);
  SimplexList triangles;
  subsets(n, 3, 1, cur, triangles);
  std::mt19937_64 rng(seed);
  for (auto& t : triangles)
    if (rng() % den < num) out.push_back(std::move(t));
  return out;
}

}  // namespace overlap
