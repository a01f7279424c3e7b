#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace hyperiso {

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return result;
}

/// Calls fn(indices) for every k-subset of {1..n} in lexicographic order.
/// indices is ascending; fn must not retain the reference.
template <typename F>
void for_each_combination(int n, int k, F fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        fn(const_cast<const std::vector<int>&>(idx));
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// All k-subsets of the given (ascending) element list, in lexicographic order.
inline std::vector<std::vector<int>> subsets_of(const std::vector<int>& elems, int k) {
    std::vector<std::vector<int>> out;
    int n = static_cast<int>(elems.size());
    for_each_combination(n, k, [&](const std::vector<int>& idx) {
        std::vector<int> s;
        s.reserve(static_cast<std::size_t>(k));
        for (int i : idx) s.push_back(elems[static_cast<std::size_t>(i - 1)]);
        out.push_back(std::move(s));
    });
    return out;
}

}  // namespace hyperiso
