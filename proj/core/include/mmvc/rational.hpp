#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace mmvc {

// Minimal exact fraction for exponents and guarantee constants (1/4, 5/3,
// 4/(t+17), ...).  Values stay tiny, so plain 64-bit arithmetic suffices.
struct Rational {
    long long num = 0;
    long long den = 1;

    constexpr Rational() = default;
    constexpr Rational(long long n, long long d = 1) : num(n), den(d) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    constexpr double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    constexpr long double value_ld() const {
        return static_cast<long double>(num) / static_cast<long double>(den);
    }

    constexpr friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    constexpr friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    constexpr friend Rational operator*(Rational a, Rational b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    constexpr friend Rational operator/(Rational a, Rational b) {
        return Rational(a.num * b.den, a.den * b.num);
    }
    constexpr friend bool operator==(Rational a, Rational b) {
        return a.num == b.num && a.den == b.den;
    }
    constexpr friend bool operator<(Rational a, Rational b) {
        return a.num * b.den < b.num * a.den;
    }
    constexpr friend bool operator<=(Rational a, Rational b) {
        return a.num * b.den <= b.num * a.den;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline constexpr long long kPowSaturated = 4'000'000'000'000'000'000LL;

// Integer power with saturation at a large sentinel; used for kernel size
// functions like k^(t-1) where intermediate growth could overflow.
inline long long saturating_pow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > kPowSaturated / base) return kPowSaturated;
        r *= base;
    }
    return r;
}

// floor(n^(num/den)) for n >= 0 and 0 < num/den, computed in exact integer
// arithmetic: the largest s with s^den <= n^num.  Avoids float crossings at
// perfect powers (e.g. 9^(1/2)).
inline long long floor_pow(long long n, Rational exponent) {
    const int p = static_cast<int>(exponent.num);
    const int q = static_cast<int>(exponent.den);
    if (n <= 1) return n;
    const long long target = saturating_pow(n, p);
    long long lo = 1, hi = 1;
    while (saturating_pow(hi + 1, q) <= target) {
        lo = hi;
        hi = hi * 2;
    }
    while (lo < hi) { // invariant: lo^q <= target < (hi+1)^q
        const long long mid = lo + (hi - lo + 1) / 2;
        if (saturating_pow(mid, q) <= target)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

} // namespace mmvc
