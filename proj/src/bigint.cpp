#include "bridgegirth/bigint.hpp"

#include <algorithm>
#include <cctype>

#include "bridgegirth/errors.hpp"

namespace bridgegirth {

namespace {
constexpr std::uint32_t kBase = 1000000000u;
constexpr int kBaseDigits = 9;
} // namespace

BigUint::BigUint(std::uint64_t v) {
    while (v > 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
        v /= kBase;
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::from_decimal(const std::string& s) {
    if (s.empty()) throw InputError("empty decimal integer");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InputError("malformed decimal integer: " + s);
    BigUint r;
    int n = static_cast<int>(s.size());
    for (int end = n; end > 0; end -= kBaseDigits) {
        int begin = std::max(0, end - kBaseDigits);
        r.limbs_.push_back(static_cast<std::uint32_t>(std::stoul(s.substr(begin, end - begin))));
    }
    r.trim();
    return r;
}

std::string BigUint::to_decimal() const {
    if (limbs_.empty()) return "0";
    std::string out = std::to_string(limbs_.back());
    for (int i = static_cast<int>(limbs_.size()) - 2; i >= 0; --i) {
        std::string part = std::to_string(limbs_[i]);
        out += std::string(kBaseDigits - part.size(), '0') + part;
    }
    return out;
}

bool BigUint::fits_u64() const {
    if (limbs_.size() > 3) return false;
    if (limbs_.size() < 3) return true;
    // 2^64-1 = 18446744073709551615 = (18, 446744073, 709551615) base 1e9
    if (limbs_[2] > 18u) return false;
    if (limbs_[2] < 18u) return true;
    if (limbs_[1] > 446744073u) return false;
    if (limbs_[1] < 446744073u) return true;
    return limbs_[0] <= 709551615u;
}

std::uint64_t BigUint::to_u64() const {
    std::uint64_t v = 0;
    for (int i = static_cast<int>(limbs_.size()) - 1; i >= 0; --i) v = v * kBase + limbs_[i];
    return v;
}

BigUint& BigUint::operator+=(const BigUint& o) {
    std::uint32_t carry = 0;
    std::size_t n = std::max(limbs_.size(), o.limbs_.size());
    limbs_.resize(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) + carry +
                            (i < o.limbs_.size() ? o.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
        carry = static_cast<std::uint32_t>(cur / kBase);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow -
                           (i < o.limbs_.size() ? o.limbs_[i] : 0);
        if (cur < 0) {
            cur += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<std::uint32_t>(cur);
    }
    trim();
    return *this;
}

BigUint& BigUint::mul_u64(std::uint64_t m) {
    if (m == 0 || limbs_.empty()) {
        limbs_.clear();
        return *this;
    }
    // split m to keep intermediate products inside 64 bits
    BigUint acc;
    BigUint shifted = *this;
    while (m > 0) {
        std::uint32_t d = static_cast<std::uint32_t>(m % kBase);
        if (d != 0) {
            BigUint part;
            part.limbs_.assign(shifted.limbs_.size() + 1, 0);
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < shifted.limbs_.size(); ++i) {
                std::uint64_t cur = static_cast<std::uint64_t>(shifted.limbs_[i]) * d + carry;
                part.limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            part.limbs_[shifted.limbs_.size()] = static_cast<std::uint32_t>(carry);
            part.trim();
            acc += part;
        }
        m /= kBase;
        if (m > 0) shifted.limbs_.insert(shifted.limbs_.begin(), 0);
    }
    *this = acc;
    return *this;
}

std::strong_ordering BigUint::operator<=>(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size())
        return limbs_.size() <=> o.limbs_.size();
    for (int i = static_cast<int>(limbs_.size()) - 1; i >= 0; --i)
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
    return std::strong_ordering::equal;
}

} // namespace bridgegirth
