#include "susyqm/combinatorics.hpp"

#include "susyqm/errors.hpp"

namespace susyqm {

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::int64_t factorial(int n) {
    if (n < 0 || n > 20) throw Error(ErrorCode::InvalidArgument, "factorial argument out of range");
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::vector<std::vector<int>> lexicographic_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::size_t subset_rank(int n, const std::vector<int>& subset) {
    // Count the subsets that precede this one position by position.
    const int k = static_cast<int>(subset.size());
    std::int64_t rank = 0;
    int prev = -1;
    for (int pos = 0; pos < k; ++pos) {
        for (int v = prev + 1; v < subset[static_cast<std::size_t>(pos)]; ++v) {
            rank += binomial(n - v - 1, k - pos - 1);
        }
        prev = subset[static_cast<std::size_t>(pos)];
    }
    return static_cast<std::size_t>(rank);
}

} // namespace susyqm
