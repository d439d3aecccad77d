#pragma once

#include "spinflat/matrix.hpp"
#include "spinflat/word.hpp"

#include <map>
#include <vector>

namespace spinflat {

/// Finite group of integer matrices, stored as an explicit element list.
/// Element 0 is the identity. words[i] is a breadth-first shortest word over
/// the input generators (letters 1..num_letters, all positive) evaluating to
/// elements[i]; the stored words form a prefix-closed spanning tree of the
/// Cayley graph.
struct FiniteMatrixGroup {
    int n = 0;
    std::vector<IntMat> elements;
    std::vector<Word> words;
    std::vector<int> gens;         // element index of each input generator
    std::vector<int> inverse;      // inverse[i] = index of elements[i]^-1
    std::map<std::vector<i64>, int> index; // matrix entries -> element index
    std::vector<int> mult_table;   // dense |G|x|G| product table (small groups only)

    // Set only by sylow2: each generator of this group written as a word
    // over the generators of the parent group.
    std::vector<Word> gen_parent_words;

    i64 order() const { return static_cast<i64>(elements.size()); }
    int num_letters() const { return static_cast<int>(gens.size()); }

    int index_of(const IntMat& m) const; // -1 if absent
    int mul(int i, int j) const;
    int inv(int i) const { return inverse[i]; }
    int conjugate(int g, int x) const; // g x g^-1
    i64 element_order(int i) const;

    /// Evaluates a word over this group's generators to an element index.
    int eval_word(const Word& w) const;
};

/// Breadth-first closure of the generated group. Deterministic: elements are
/// numbered in discovery order, shortest words first. Throws CapExceededError
/// if more than cap elements appear.
FiniteMatrixGroup close(const std::vector<IntMat>& generators, int n, i64 cap = 10000);

/// A Sylow 2-subgroup, built by greedy normalizer ascent: seed with a
/// 2-element of maximal order, then repeatedly adjoin the first 2-element
/// normalizing the current subgroup, until the full 2-part of |G| is reached.
/// The result is closed over its own generators; gen_parent_words carries
/// each chosen generator as a word over G's generators.
FiniteMatrixGroup sylow2(const FiniteMatrixGroup& G);

/// Subgroup of G given by parent element indices (sorted ascending), with
/// left coset representatives of G/H (also parent indices, identity first).
struct SubgroupInfo {
    std::vector<int> elements;
    std::vector<int> coset_reps;
};

/// All subgroups of a 2-group, by cyclic extension level by level:
/// every subgroup of order 2^(k+1) is H union Hx for a subgroup H of order
/// 2^k normalized by x with x^2 in H. Ordered by order, then element list.
std::vector<SubgroupInfo> subgroups_2group(const FiniteMatrixGroup& G);

/// Conjugation orbits; classes ordered by minimal element index, elements
/// within a class sorted ascending.
std::vector<std::vector<int>> conjugacy_classes(const FiniteMatrixGroup& G);

struct RelatorSet {
    std::vector<Word> words;
};

/// A complete relator set from the Cayley-graph spanning tree: for every
/// non-tree edge (g, x_j) the word  w_g x_j w_{g x_j}^-1  (freely reduced).
/// Words may contain inverse letters.
RelatorSet relators(const FiniteMatrixGroup& G);

/// All homomorphisms from the subgroup {G restricted to subset} into {+1,-1}.
/// subset must be a subgroup's sorted element-index list. Returned value
/// tables are aligned with subset; the trivial character comes first and the
/// order is deterministic.
std::vector<std::vector<int>> linear_characters_subset(const FiniteMatrixGroup& G,
                                                       const std::vector<int>& subset);

/// Characters of a whole 2-group H -> {+1,-1}.
std::vector<std::vector<int>> linear_characters(const FiniteMatrixGroup& H);

} // namespace spinflat
