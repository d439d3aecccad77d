#include "spinflat/clifford.hpp"

#include <sstream>
#include <vector>

namespace spinflat {

BladeProduct blade_mul(Blade a, Blade b) {
    int swaps = 0;
    for (Blade t = a >> 1; t != 0; t >>= 1) swaps += __builtin_popcount(t & b);
    int negs = swaps + __builtin_popcount(a & b);
    return {a ^ b, (negs & 1) ? -1 : +1};
}

CliffordElement::CliffordElement(int n) : n_(n) {
    if (n < 2 || n > 8) throw InternalError("Clifford dimension out of range [2,8]");
}

CliffordElement CliffordElement::scalar(int n, const ExactCoeff& c) {
    CliffordElement x(n);
    x.add_term(0, c);
    return x;
}

CliffordElement CliffordElement::blade_elem(int n, Blade mask, const ExactCoeff& c) {
    if (mask >= (1u << n)) throw InternalError("blade mask out of range");
    CliffordElement x(n);
    x.add_term(mask, c);
    return x;
}

CliffordElement CliffordElement::basis_vector(int n, int i) {
    if (i < 1 || i > n) throw InternalError("basis vector index out of range");
    return blade_elem(n, 1u << (i - 1));
}

bool CliffordElement::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

ExactCoeff CliffordElement::coeff(Blade mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? ExactCoeff() : it->second;
}

void CliffordElement::add_term(Blade mask, const ExactCoeff& c) {
    if (mask >= (1u << n_)) throw InternalError("blade mask out of range");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mask, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {
int star_sign(int k) { return (k * (k - 1) / 2) % 2 ? -1 : +1; }
int prime_sign(int k) { return k % 2 ? -1 : +1; }
int bar_sign(int k) { return (k * (k + 1) / 2) % 2 ? -1 : +1; }
} // namespace

CliffordElement CliffordElement::map_blades(int (*sign_of_grade)(int)) const {
    CliffordElement r(n_);
    for (const auto& [mask, c] : terms_)
        r.terms_.emplace(mask, sign_of_grade(blade_grade(mask)) < 0 ? -c : c);
    return r;
}

CliffordElement CliffordElement::star() const { return map_blades(star_sign); }
CliffordElement CliffordElement::prime() const { return map_blades(prime_sign); }
CliffordElement CliffordElement::bar() const { return map_blades(bar_sign); }

bool CliffordElement::is_spin() const {
    if (prime() != *this) return false;
    return (*this) * bar() == one(n_);
}

CliffordElement operator*(const CliffordElement& x, const CliffordElement& y) {
    if (x.n_ != y.n_) throw InternalError("Clifford dimension mismatch in product");
    // dense accumulator: 2^n slots, n <= 8
    std::vector<ExactCoeff> acc(1u << x.n_);
    for (const auto& [ma, ca] : x.terms_)
        for (const auto& [mb, cb] : y.terms_) {
            BladeProduct p = blade_mul(ma, mb);
            ExactCoeff c = ca * cb;
            acc[p.blade] = p.sign < 0 ? acc[p.blade] - c : acc[p.blade] + c;
        }
    CliffordElement r(x.n_);
    for (Blade m = 0; m < acc.size(); ++m)
        if (!acc[m].is_zero()) r.terms_.emplace(m, acc[m]);
    return r;
}

CliffordElement operator+(const CliffordElement& x, const CliffordElement& y) {
    if (x.n_ != y.n_) throw InternalError("Clifford dimension mismatch in sum");
    CliffordElement r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, c);
    return r;
}

CliffordElement operator-(const CliffordElement& x) {
    CliffordElement r(x.n_);
    for (const auto& [m, c] : x.terms_) r.terms_.emplace(m, -c);
    return r;
}

bool operator==(const CliffordElement& x, const CliffordElement& y) {
    return x.n_ == y.n_ && x.terms_ == y.terms_;
}

RatMat CliffordElement::lambda_matrix() const {
    RatMat m(n_);
    CliffordElement conj = bar();
    for (int i = 1; i <= n_; ++i) {
        CliffordElement img = (*this) * basis_vector(n_, i) * conj;
        for (const auto& [mask, c] : img.terms_) {
            if (blade_grade(mask) != 1)
                throw InternalError("lambda image of a basis vector is not a vector; "
                                    "element is not in Spin(n)");
            if (c.b != 0)
                throw InternalError("lambda matrix entry is irrational");
            if (c.k >= 62) throw InternalError("lambda matrix entry denominator too large");
            int row = __builtin_ctz(mask);
            m.at(row, i - 1) = Rat(c.a, static_cast<i64>(1) << c.k);
        }
    }
    return m;
}

std::string CliffordElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, c] : terms_) {
        std::string blades;
        for (int i = 0; i < n_; ++i)
            if (mask & (1u << i)) {
                if (!blades.empty()) blades += ' ';
                blades += 'e';
                blades += std::to_string(i + 1);
            }
        UnitSign us = c.unit_sign();
        if (first) {
            if (us == UnitSign::minus)
                os << '-';
            else if (us == UnitSign::neither)
                os << c.str() << (blades.empty() ? "" : " ");
        } else {
            if (us == UnitSign::minus)
                os << " - ";
            else
                os << " + ";
            if (us == UnitSign::neither) os << c.str() << (blades.empty() ? "" : " ");
        }
        if (blades.empty() && us != UnitSign::neither)
            os << '1';
        else
            os << blades;
        first = false;
    }
    return os.str();
}

} // namespace spinflat
