#pragma once

#include "spinflat/checked.hpp"

#include <numeric>
#include <string>

namespace spinflat {

/// Exact rational with 64-bit numerator/denominator, always normalized
/// (den >= 1, gcd(num, den) == 1). All arithmetic is overflow-checked.
struct Rat {
    i64 num = 0;
    i64 den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw InternalError("rational with zero denominator");
        if (den < 0) {
            num = checked_neg(num);
            den = checked_neg(den);
        }
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    friend Rat operator+(const Rat& x, const Rat& y) {
        return Rat(checked_add(checked_mul(x.num, y.den), checked_mul(y.num, x.den)),
                   checked_mul(x.den, y.den));
    }
    friend Rat operator-(const Rat& x) { return Rat(checked_neg(x.num), x.den); }
    friend Rat operator-(const Rat& x, const Rat& y) { return x + (-y); }
    friend Rat operator*(const Rat& x, const Rat& y) {
        return Rat(checked_mul(x.num, y.num), checked_mul(x.den, y.den));
    }
    Rat reciprocal() const {
        if (num == 0) throw InternalError("division by zero rational");
        return Rat(den, num);
    }
    friend Rat operator/(const Rat& x, const Rat& y) { return x * y.reciprocal(); }

    friend bool operator==(const Rat& x, const Rat& y) {
        return x.num == y.num && x.den == y.den;
    }
    friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }

    std::string str() const;
};

/// Parses "p", "-p", "p/q"; throws ParseError on anything else.
Rat parse_rat(const std::string& token);

} // namespace spinflat
