#pragma once

#include <cstddef>
#include <span>

namespace dhankel {

// Pairwise (tree) summation. Leaves of at most kPairwiseLeaf terms are summed
// left to right, so the result depends only on the input order.
inline constexpr std::size_t kPairwiseLeaf = 16;

template <typename T>
T pairwise_sum(std::span<const T> xs) {
  if (xs.size() <= kPairwiseLeaf) {
    T s{};
    for (const auto& x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

/// Pairwise sum of term(i) for i in [begin, end) without materializing the terms.
template <typename F>
auto pairwise_accumulate(std::size_t begin, std::size_t end, const F& term) -> decltype(term(begin)) {
  using T = decltype(term(begin));
  if (end <= begin) return T{};
  if (end - begin <= kPairwiseLeaf) {
    T s{};
    for (std::size_t i = begin; i < end; ++i) s += term(i);
    return s;
  }
  const std::size_t mid = begin + (end - begin) / 2;
  return pairwise_accumulate(begin, mid, term) + pairwise_accumulate(mid, end, term);
}

}  // namespace dhankel
