#ifndef BRIDGEGIRTH_BIGINT_HPP
#define BRIDGEGIRTH_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace bridgegirth {

// Unbounded nonnegative integer. Edge weights in the hard distance-preserver
// instances grow geometrically (each path outweighs everything before it), so
// 64 bits run out after ~30 paths; weights are serialized as decimal strings.
// Base-1e9 limbs, little-endian. Only what the weight arithmetic needs:
// add, subtract (no underflow), small multiply, compare, decimal I/O.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);

    static BigUint from_decimal(const std::string& s); // throws InputError
    std::string to_decimal() const;

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const;
    std::uint64_t to_u64() const; // requires fits_u64()

    BigUint& operator+=(const BigUint& o);
    BigUint operator+(const BigUint& o) const { BigUint r = *this; r += o; return r; }
    // requires *this >= o
    BigUint& operator-=(const BigUint& o);
    BigUint operator-(const BigUint& o) const { BigUint r = *this; r -= o; return r; }
    BigUint& mul_u64(std::uint64_t m);
    BigUint operator*(std::uint64_t m) const { BigUint r = *this; r.mul_u64(m); return r; }

    std::strong_ordering operator<=>(const BigUint& o) const;
    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }

private:
    void trim();
    std::vector<std::uint32_t> limbs_; // base 1e9, empty == 0
};

} // namespace bridgegirth

#endif
