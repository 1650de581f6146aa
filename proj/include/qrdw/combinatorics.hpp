#pragma once

#include <cstdint>
#include <vector>

namespace qrdw {

// C(n,r), clamped to UINT64_MAX on overflow (callers compare against budgets
// far below that).
std::uint64_t binomial_clamped(std::uint64_t n, std::uint64_t r);

// r-combinations of {0..n-1} in colexicographic order (sorted by largest
// element, then next largest, ...). The visited vector is ascending and
// reused between calls.
template <typename Visit>
void for_each_combination(int n, int r, Visit&& visit) {
    if (r < 0 || r > n) {
        return;
    }
    if (r == 0) {
        visit(std::vector<int>{});
        return;
    }
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) {
        idx[static_cast<std::size_t>(k)] = k;
    }
    for (;;) {
        visit(static_cast<const std::vector<int>&>(idx));
        // colex successor: bump the leftmost index with room below its right
        // neighbor, resetting everything before it
        int t = 0;
        while (t + 1 < r && idx[static_cast<std::size_t>(t)] + 1 ==
                                idx[static_cast<std::size_t>(t) + 1]) {
            ++t;
        }
        if (t == r - 1 && idx[static_cast<std::size_t>(t)] + 1 == n) {
            return;
        }
        ++idx[static_cast<std::size_t>(t)];
        for (int k = 0; k < t; ++k) {
            idx[static_cast<std::size_t>(k)] = k;
        }
    }
}

} // namespace qrdw
