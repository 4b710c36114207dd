#ifndef BRIDGEGIRTH_RNG_HPP
#define BRIDGEGIRTH_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace bridgegirth {

// Seeded generator with hand-rolled bounded draws. std::mt19937_64 itself is
// pinned by the standard, but std::uniform_int_distribution is not, and every
// randomized run must replay bit-identically from its seed across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    bool coin() { return (engine_() & 1u) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct values from [0, n), returned sorted
    std::vector<std::size_t> sample_sorted(std::size_t n, std::size_t k);

private:
    std::mt19937_64 engine_;
};

} // namespace bridgegirth

#endif
