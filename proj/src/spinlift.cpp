#include "spinflat/spinlift.hpp"

#include <stdexcept>

namespace spinflat {

IntMat signed_transposition_matrix(int n, int p, int q) {
    if (!(1 <= p && p < q && q <= n)) throw InternalError("bad transposition indices");
    IntMat m = IntMat::identity(n);
    m.at(p - 1, p - 1) = 0;
    m.at(q - 1, q - 1) = 0;
    // P_{(p q)} maps e_p -> e_q, e_q -> e_p; negating row p gives e_q -> -e_p
    m.at(q - 1, p - 1) = 1;
    m.at(p - 1, q - 1) = -1;
    return m;
}

SignedPermutationFactorization factor(const IntMat& X) {
    if (!X.is_signed_permutation())
        throw std::invalid_argument("matrix is not a signed permutation");
    if (X.signed_permutation_det() != 1)
        throw std::invalid_argument("matrix has determinant -1");

    int n = X.n;
    // sigma(i) = row of the nonzero entry in column i (0-based here)
    std::vector<int> sigma(n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r)
            if (X.at(r, c) != 0) sigma[c] = r;

    SignedPermutationFactorization f;
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (seen[start] || sigma[start] == start) {
            seen[start] = true;
            continue;
        }
        int prev = start;
        seen[start] = true;
        for (int cur = sigma[start]; cur != start; cur = sigma[cur]) {
            seen[cur] = true;
            int p = prev < cur ? prev : cur;
            int q = prev < cur ? cur : prev;
            f.transpositions.emplace_back(p + 1, q + 1);
            prev = cur;
        }
    }

    IntMat prod = IntMat::identity(n);
    for (auto [p, q] : f.transpositions) prod = prod * signed_transposition_matrix(n, p, q);
    // P' factors are orthogonal, so the inverse is the transpose
    IntMat prod_inv(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) prod_inv.at(r, c) = prod.at(c, r);
    IntMat D = prod_inv * X;

    f.diagonal.resize(n);
    int minus = 0;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c)
            if (r != c && D.at(r, c) != 0)
                throw InternalError("residual factor is not diagonal");
        i64 v = D.at(r, r);
        if (v != 1 && v != -1) throw InternalError("residual diagonal entry is not +-1");
        f.diagonal[r] = static_cast<int>(v);
        if (v < 0) ++minus;
    }
    if (minus % 2 != 0) throw InternalError("residual diagonal has odd number of -1 entries");

    if (prod * D != X) throw InternalError("factorization failed to reassemble input");
    return f;
}

CliffordElement lift(const IntMat& X) {
    SignedPermutationFactorization f = factor(X);
    int n = X.n;

    CliffordElement x = CliffordElement::one(n);
    for (auto [p, q] : f.transpositions) {
        CliffordElement t = CliffordElement::scalar(n, ExactCoeff::inv_sqrt2());
        t.add_term((1u << (p - 1)) | (1u << (q - 1)), ExactCoeff::inv_sqrt2());
        x = x * t;
    }
    Blade diag_mask = 0;
    for (int i = 0; i < n; ++i)
        if (f.diagonal[i] < 0) diag_mask |= 1u << i;
    if (diag_mask != 0) x = x * CliffordElement::blade_elem(n, diag_mask);
    return x;
}

} // namespace spinflat
