#include "qrdw/combinatorics.hpp"

#include <limits>

namespace qrdw {

std::uint64_t binomial_clamped(std::uint64_t n, std::uint64_t r) {
    if (r > n) {
        return 0;
    }
    if (r > n - r) {
        r = n - r;
    }
    unsigned __int128 acc = 1;
    for (std::uint64_t k = 1; k <= r; ++k) {
        acc = acc * (n - r + k) / k; // exact: prefix products of C are integers
        if (acc > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(acc);
}

} // namespace qrdw
