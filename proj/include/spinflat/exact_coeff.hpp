#pragma once

#include "spinflat/checked.hpp"

#include <string>

namespace spinflat {

enum class UnitSign { plus, minus, neither };

/**
 * ExactCoeff: an element (a + b*sqrt2) / 2^k of the subring Z[sqrt2, 1/2].
 *
 * This is the smallest coefficient ring closed under the products that show
 * up when lifting signed permutation matrices through the spin double cover:
 * each transposition factor contributes one 1/sqrt2 = (0 + 1*sqrt2)/2^1.
 *
 * Normal form: k == 0, or a and b are not both even; zero is (0, 0, 0).
 * Equality of normal forms is component-wise and coincides with equality of
 * the represented real numbers.
 */
struct ExactCoeff {
    i64 a = 0;
    i64 b = 0;
    int k = 0;

    ExactCoeff() = default;
    ExactCoeff(i64 a_, i64 b_ = 0, int k_ = 0) : a(a_), b(b_), k(k_) { normalize(); }

    void normalize() {
        if (a == 0 && b == 0) {
            k = 0;
            return;
        }
        while (k > 0 && a % 2 == 0 && b % 2 == 0) {
            a /= 2;
            b /= 2;
            --k;
        }
    }

    bool is_zero() const { return a == 0 && b == 0; }

    UnitSign unit_sign() const {
        if (b != 0 || k != 0) return UnitSign::neither;
        if (a == 1) return UnitSign::plus;
        if (a == -1) return UnitSign::minus;
        return UnitSign::neither;
    }

    friend ExactCoeff operator+(const ExactCoeff& x, const ExactCoeff& y) {
        int K = x.k > y.k ? x.k : y.k;
        i64 a = checked_add(checked_shl(x.a, K - x.k), checked_shl(y.a, K - y.k));
        i64 b = checked_add(checked_shl(x.b, K - x.k), checked_shl(y.b, K - y.k));
        return ExactCoeff(a, b, K);
    }

    friend ExactCoeff operator-(const ExactCoeff& x) {
        return ExactCoeff(checked_neg(x.a), checked_neg(x.b), x.k);
    }

    friend ExactCoeff operator-(const ExactCoeff& x, const ExactCoeff& y) { return x + (-y); }

    // (a1 + b1 s)(a2 + b2 s) = (a1 a2 + 2 b1 b2) + (a1 b2 + b1 a2) s,  s = sqrt2
    friend ExactCoeff operator*(const ExactCoeff& x, const ExactCoeff& y) {
        i64 a = checked_add(checked_mul(x.a, y.a), checked_mul(2, checked_mul(x.b, y.b)));
        i64 b = checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a));
        return ExactCoeff(a, b, x.k + y.k);
    }

    friend bool operator==(const ExactCoeff& x, const ExactCoeff& y) {
        return x.a == y.a && x.b == y.b && x.k == y.k;
    }
    friend bool operator!=(const ExactCoeff& x, const ExactCoeff& y) { return !(x == y); }

    double value() const;

    // Diagnostic rendering, e.g. "(0+1*sqrt2)/2^1". Not a stability contract.
    std::string str() const;

    static ExactCoeff one() { return ExactCoeff(1); }
    static ExactCoeff minus_one() { return ExactCoeff(-1); }
    static ExactCoeff inv_sqrt2() { return ExactCoeff(0, 1, 1); }
};

} // namespace spinflat
