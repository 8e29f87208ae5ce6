#pragma once

#include <bit>

namespace overlap {

template <class Visit>
void for_each_coset_element(const std::vector<BitVector>& basis, const BitVector& alpha,
                            const ScaledWeights& weights, Visit&& visit) {
  std::vector<std::vector<std::size_t>> supports;
  supports.reserve(basis.size());
  for (const auto& b : basis) supports.push_back(b.support());

  BitVector current = alpha;
  std::int64_t w = weights.weight_of(current);
  visit(static_cast<const BitVector&>(current), w);
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto j = static_cast<std::size_t>(std::countr_zero(i));
    for (std::size_t idx : supports[j]) {
      w += current.test(idx) ? -weights.numerators[idx] : weights.numerators[idx];
      current.flip(idx);
    }
    visit(static_cast<const BitVector&>(current), w);
  }
}

}  // namespace overlap
