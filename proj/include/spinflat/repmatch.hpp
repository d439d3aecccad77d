#pragma once

#include "spinflat/finite_group.hpp"

namespace spinflat {

/// Monomial representation Ind_H^G tau for a subgroup H with a {+-1}-valued
/// character tau: degree r = [G:H], one r x r signed permutation matrix per
/// generator of G, and the (integer) character over the conjugacy classes.
struct MonomialRep {
    int subgroup_index = 0;
    int tau_index = 0;
    int degree = 0;
    std::vector<IntMat> gen_matrices;
    std::vector<i64> character;
};

/// Direct sum of monomial summands realizing a representation
/// G -> SO(n,Z) with the same character as the matrix group itself.
struct OrthogonalIntegralRep {
    std::vector<IntMat> gen_matrices; // n x n, one per generator of G
    std::vector<MonomialRep> blocks;
};

/// Induction of tau from H to G over the fixed left coset representatives:
/// for g in G the matrix has entry tau(h) at (row sigma(i), column i) where
/// g t_i = t_sigma(i) h.
MonomialRep induce(const FiniteMatrixGroup& G, const SubgroupInfo& H,
                   const std::vector<int>& tau,
                   const std::vector<std::vector<int>>& classes);

/// Finds a multiset of induced monomial representations whose character sum
/// equals the character of G's own matrices, class by class, and assembles
/// the block-diagonal result. Candidates are ordered by (degree, subgroup
/// discovery index, character), deduplicated by character, and searched
/// depth-first; variant selects the variant-th exact cover (0 = first).
/// Requires a 2-group whose matrices all have determinant +1.
OrthogonalIntegralRep match_representation(const FiniteMatrixGroup& G, int variant = 0);

/// Number of distinct exact covers the matcher can see (capped at limit).
int count_matchings(const FiniteMatrixGroup& G, int limit = 64);

} // namespace spinflat
