#pragma once

#include "spinflat/matrix.hpp"
#include "spinflat/word.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace spinflat {

/// Element (A, t) of GL(n,Q) x| Q^n acting as x -> Ax + t.
/// Composition: (A1,t1)(A2,t2) = (A1 A2, A1 t2 + t1).
struct AffineIsometry {
    RatMat lin;
    std::vector<Rat> tr;

    AffineIsometry() = default;
    AffineIsometry(RatMat A, std::vector<Rat> t) : lin(std::move(A)), tr(std::move(t)) {}

    static AffineIsometry identity(int n);
    static AffineIsometry lattice_translation(int n, int i, int exponent = 1); // a_i^exponent

    int dim() const { return lin.n; }

    AffineIsometry compose(const AffineIsometry& o) const;
    AffineIsometry inverse() const;

    bool operator==(const AffineIsometry& o) const { return lin == o.lin && tr == o.tr; }
    bool operator!=(const AffineIsometry& o) const { return !(*this == o); }
};

/// A crystallographic group in CARAT-style normal form: the translation
/// lattice is implicitly Z^n (lattice generators a_i = (I, e_i)), and gens
/// holds the non-lattice generators with integral linear parts.
struct CrystalGroupInput {
    int n = 0;
    std::vector<AffineIsometry> gens;
};

using LatticeWord = std::vector<i64>;

/// Input format (UTF-8 text): "dim n"; then zero or more "gen" blocks, each
/// followed by n+1 lines of n+1 whitespace-separated rationals giving the
/// affine matrix in homogeneous form with last row (0,...,0,1). Comments
/// start with '#'. The n lattice translations are implicit.
CrystalGroupInput parse_group(std::istream& in);
CrystalGroupInput parse_group_string(const std::string& text);
CrystalGroupInput parse_group_file(const std::string& path);

/// Evaluates a word over the given affine generators (letters +-j, 1-based).
AffineIsometry eval_affine_word(const Word& word, const std::vector<AffineIsometry>& gens);

/// Evaluates a word whose letters may also name lattice translations:
/// letters +-j with 1 <= j <= gens refer to group generators, letters
/// +-(gens + i) refer to the lattice translation a_i. The evaluated element
/// must have identity linear part and integral translation; the returned
/// exponent vector alpha satisfies  word = a_1^alpha_1 ... a_n^alpha_n.
LatticeWord word_to_lattice(const Word& word, const CrystalGroupInput& group);

/// Lattice exponents of an element already known to be a pure translation.
LatticeWord translation_exponents(const AffineIsometry& g);

/// The linear parts of the non-lattice generators, as integer matrices.
std::vector<IntMat> holonomy_matrices(const CrystalGroupInput& group);

} // namespace spinflat
