// Families of test complexes, returned as simplex lists (labels 1..n).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace overlap {

using SimplexList = std::vector<std::vector<std::string>>;

/// The d-skeleton of the n-simplex: n + 1 vertices, all (d+1)-subsets.
/// Throws std::invalid_argument unless 0 <= d <= n.
SimplexList complete_skeleton(int n, int d);

/// The cycle graph C_n, n >= 3.
SimplexList cycle(int n);

/// The complete graph on n vertices together with every triangle, each
/// kept independently when rng() % den < num (mt19937_64 seeded with seed).
/// Throws std::invalid_argument unless n >= 1 and 0 <= num <= den, den > 0.
SimplexList linial_meshulam(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed);

}  // namespace overlap
