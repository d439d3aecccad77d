#pragma once

#include "spinflat/exact_coeff.hpp"
#include "spinflat/matrix.hpp"

#include <map>
#include <string>

namespace spinflat {

/// Basis blade of C_n as a bitmask: bit i-1 set means e_i is a factor.
/// Blades are canonical products e_{i1}...e_{ik} with i1 < ... < ik.
using Blade = unsigned;

inline int blade_grade(Blade m) { return __builtin_popcount(m); }

struct BladeProduct {
    Blade blade;
    int sign; // +1 or -1
};

/// Product of two canonical blades under e_i^2 = -1, e_i e_j = -e_j e_i.
/// The sign counts the transpositions needed to interleave the factors,
/// plus one -1 per repeated generator.
BladeProduct blade_mul(Blade a, Blade b);

/// Element of the real Clifford algebra C_n (2 <= n <= 8) with coefficients
/// in Z[sqrt2, 1/2]. Terms are kept sparse with no zero coefficients and
/// iterate in ascending blade-mask order.
class CliffordElement {
public:
    explicit CliffordElement(int n);

    static CliffordElement scalar(int n, const ExactCoeff& c);
    static CliffordElement one(int n) { return scalar(n, ExactCoeff::one()); }
    static CliffordElement blade_elem(int n, Blade mask, const ExactCoeff& c = ExactCoeff::one());
    static CliffordElement basis_vector(int n, int i); // e_i, i in 1..n

    int dim() const { return n_; }
    const std::map<Blade, ExactCoeff>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    ExactCoeff coeff(Blade mask) const;

    void add_term(Blade mask, const ExactCoeff& c);

    CliffordElement star() const;  // reversal: (e_{i1}...e_{ik})* = e_{ik}...e_{i1}
    CliffordElement prime() const; // grade involution: e_i -> -e_i
    CliffordElement bar() const;   // conjugation: bar(a) = (a')*

    bool is_spin() const; // x' == x and x * bar(x) == 1

    friend CliffordElement operator*(const CliffordElement& x, const CliffordElement& y);
    friend CliffordElement operator+(const CliffordElement& x, const CliffordElement& y);
    friend CliffordElement operator-(const CliffordElement& x);
    friend bool operator==(const CliffordElement& x, const CliffordElement& y);
    friend bool operator!=(const CliffordElement& x, const CliffordElement& y) {
        return !(x == y);
    }

    /// For x in Spin(n): the matrix of v -> x v bar(x) on span{e_1..e_n},
    /// column i = coordinates of x e_i bar(x). Throws InternalError if the
    /// image of some e_i is not a grade-1 vector with rational coordinates
    /// (which means x was not actually in Spin(n)).
    RatMat lambda_matrix() const;

    std::string str() const;

private:
    int n_;
    std::map<Blade, ExactCoeff> terms_;

    CliffordElement map_blades(int (*sign_of_grade)(int)) const;
};

} // namespace spinflat
