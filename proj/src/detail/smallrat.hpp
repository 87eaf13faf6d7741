#pragma once

#include <cstdint>
#include <limits>
#include <numeric>

#include "actsets/rational.hpp"

namespace actsets::detail {

/// Internal control-flow token: a word-sized kernel overflowed and the caller
/// must redo the computation with big rationals. Never escapes the library.
struct ArithmeticOverflow {};

inline std::int64_t narrow_checked(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw ArithmeticOverflow{};
    return static_cast<std::int64_t>(v);
}

inline __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Exact fraction on int64 with int128 intermediates. Always canonical
/// (den > 0, reduced). Overflow throws ArithmeticOverflow; comparisons never
/// overflow.
class Rat64 {
public:
    Rat64() : num_(0), den_(1) {}
    Rat64(int v) : num_(v), den_(1) {}
    Rat64(std::int64_t v) : num_(v), den_(1) {}
    Rat64(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Rat64 operator+(const Rat64& a, const Rat64& b) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                     static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from128(n, d);
    }
    friend Rat64 operator-(const Rat64& a, const Rat64& b) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ -
                     static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from128(n, d);
    }
    friend Rat64 operator*(const Rat64& a, const Rat64& b) {
        __int128 n = static_cast<__int128>(a.num_) * b.num_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from128(n, d);
    }
    friend Rat64 operator/(const Rat64& a, const Rat64& b) {
        if (b.num_ == 0) throw ArithmeticOverflow{};  // caller bug; resolved in big mode
        __int128 n = static_cast<__int128>(a.num_) * b.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.num_;
        return from128(n, d);
    }
    Rat64 operator-() const {
        Rat64 r;
        r.num_ = narrow_checked(-static_cast<__int128>(num_));
        r.den_ = den_;
        return r;
    }
    Rat64& operator+=(const Rat64& o) { return *this = *this + o; }
    Rat64& operator-=(const Rat64& o) { return *this = *this - o; }
    Rat64& operator*=(const Rat64& o) { return *this = *this * o; }
    Rat64& operator/=(const Rat64& o) { return *this = *this / o; }

    friend bool operator==(const Rat64& a, const Rat64& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat64& a, const Rat64& b) { return !(a == b); }
    friend bool operator<(const Rat64& a, const Rat64& b) {
        return static_cast<__int128>(a.num_) * b.den_ <
               static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rat64& a, const Rat64& b) { return b < a; }
    friend bool operator<=(const Rat64& a, const Rat64& b) { return !(b < a); }
    friend bool operator>=(const Rat64& a, const Rat64& b) { return !(a < b); }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

private:
    static Rat64 from128(__int128 n, __int128 d) {
        Rat64 r;
        if (d == 0) throw ArithmeticOverflow{};
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            r.num_ = 0;
            r.den_ = 1;
            return r;
        }
        __int128 g = gcd128(n, d);
        r.num_ = narrow_checked(n / g);
        r.den_ = narrow_checked(d / g);
        return r;
    }
    void assign(std::int64_t n, std::int64_t d) {
        Rat64 r = from128(n, d);
        num_ = r.num_;
        den_ = r.den_;
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rat64 to_rat64(const Rational& r) {
    const auto& n = boost::multiprecision::numerator(r);
    const auto& d = boost::multiprecision::denominator(r);
    static const boost::multiprecision::mpz_int lo = std::numeric_limits<std::int64_t>::min();
    static const boost::multiprecision::mpz_int hi = std::numeric_limits<std::int64_t>::max();
    if (n < lo || n > hi || d > hi) throw ArithmeticOverflow{};
    return Rat64(n.convert_to<std::int64_t>(), d.convert_to<std::int64_t>());
}

inline Rational to_rational(const Rat64& r) {
    return Rational(r.num()) / r.den();
}

// Uniform scalar hooks so geometry kernels can be instantiated with either
// scalar type.
inline bool is_zero(const Rat64& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }
inline int sign(const Rat64& x) { return x.sign(); }
inline int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace actsets::detail
