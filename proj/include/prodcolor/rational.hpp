#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace prodcolor {

// Exact rational on int64 with __int128 intermediates. Always stored in
// lowest terms with a positive denominator; construction throws on overflow
// rather than silently wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(long long num, long long den) { assign(num, den); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return make((__int128)num_ * o.den_ + (__int128)o.num_ * den_,
                    (__int128)den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return make((__int128)num_ * o.den_ - (__int128)o.num_ * den_,
                    (__int128)den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return make((__int128)num_ * o.num_, (__int128)den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return make((__int128)num_ * o.den_, (__int128)den_ * o.num_);
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
    }
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    // Largest integer <= value (floor also for negatives).
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    double approx() const { return (double)num_ / (double)den_; }

    // "p/q", or just "p" when the value is an integer.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    long long num_;
    long long den_;

    void assign(long long num, long long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        num_ = num;
        den_ = den;
    }

    static long long narrow(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error("Rational: value exceeds 64-bit range");
        return (long long)v;
    }

    static Rational make(__int128 num, __int128 den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { num /= a; den /= a; }
        Rational r;
        r.num_ = narrow(num);
        r.den_ = narrow(den);
        return r;
    }
};

}  // namespace prodcolor
