#include "bridgegirth/rng.hpp"

#include <algorithm>

namespace bridgegirth {

std::vector<std::size_t> Rng::sample_sorted(std::size_t n, std::size_t k) {
    if (k > n) k = n;
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    // partial Fisher-Yates: first k entries are the sample
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(below(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace bridgegirth
