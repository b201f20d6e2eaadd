#pragma once

#include <cstdint>
#include <vector>

namespace susyqm {

/// Binomial coefficient C(n, k); zero when k is outside [0, n].
std::int64_t binomial(int n, int k);

std::int64_t factorial(int n);

/// All k-subsets of {0, ..., n-1} as sorted index vectors, in lexicographic order.
std::vector<std::vector<int>> lexicographic_subsets(int n, int k);

/// Position of a sorted subset within lexicographic_subsets(n, k).
std::size_t subset_rank(int n, const std::vector<int>& subset);

} // namespace susyqm
