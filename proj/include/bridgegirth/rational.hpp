#ifndef BRIDGEGIRTH_RATIONAL_HPP
#define BRIDGEGIRTH_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "bridgegirth/errors.hpp"

namespace bridgegirth {

// Exact fraction on 64-bit parts. Core statistics must satisfy identities
// exactly, so no floating point anywhere near them. Desk-scale magnitudes
// only; comparisons cross-multiply through __int128.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw InputError("rational division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
    }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    double to_double() const { return (double)num_ / (double)den_; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "a" or "a/b".
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s));
            long long n = std::stoll(s.substr(0, slash));
            long long d = std::stoll(s.substr(slash + 1));
            if (d == 0) throw InputError("rational with zero denominator: " + s);
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            throw InputError("malformed rational: " + s);
        } catch (const std::out_of_range&) {
            throw InputError("rational out of range: " + s);
        }
    }

private:
    void normalize() {
        if (den_ == 0) throw InputError("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace bridgegirth

#endif
