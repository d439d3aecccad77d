#pragma once

#include "spinflat/clifford.hpp"
#include "spinflat/matrix.hpp"

#include <utility>
#include <vector>

namespace spinflat {

/// Factorization X = P'_{(p1 q1)} ... P'_{(pk qk)} * D' of a signed
/// permutation matrix with det +1, where P'_{(p q)} is the permutation
/// matrix of (p q) with the p-th row negated so that its determinant is +1,
/// and D' is diagonal with entries +-1 and an even number of -1.
struct SignedPermutationFactorization {
    std::vector<std::pair<int, int>> transpositions; // 1-based, p < q
    std::vector<int> diagonal;                       // entries +-1
};

/// The signed P'-matrix of a transposition (p, q), 1-based, p < q.
IntMat signed_transposition_matrix(int n, int p, int q);

/// Decomposes X by expanding each cycle of the underlying permutation
/// (cycles ordered by smallest element) into chained transpositions, then
/// peeling off the remaining diagonal. Validates its own output by
/// reassembly. Throws std::invalid_argument if X is not a signed permutation
/// matrix of determinant +1.
SignedPermutationFactorization factor(const IntMat& X);

/// A preimage of X under the double cover Spin(n) -> SO(n,Z):
/// the product of (1 + e_p e_q)/sqrt2 over the transpositions, times
/// e_{n1}...e_{nl} for the -1 positions of the diagonal. The other preimage
/// is its negative. The factorization validates itself by reassembly;
/// callers that need the covering-map identity checked per element compare
/// lambda_matrix() against X (the decision pipeline and the CLI both do).
CliffordElement lift(const IntMat& X);

} // namespace spinflat
