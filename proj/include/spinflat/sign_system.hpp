#pragma once

#include "spinflat/checked.hpp"

#include <cstdint>
#include <vector>

namespace spinflat {

/// One affine F2 equation: xor of the variables in mask equals rhs.
struct F2Row {
    std::uint64_t mask = 0;
    int rhs = 0;
};

/// Linear system over F2 in variables u_1..u_n (bits 0..n-1, signs of the
/// lattice generators) and s_1..s_m (bits n..n+m-1, signs of the holonomy
/// generator lifts). Its solutions are exactly the sign choices extending to
/// a homomorphism; the solution count is 0 or 2^(n+m-rank).
struct SignSystem {
    int num_lattice = 0; // n
    int num_gens = 0;    // m
    std::vector<F2Row> rows;
    // rows[0..num_action_rows) come from the lattice action, the rest from
    // holonomy relators
    std::size_t num_action_rows = 0;

    int nvars() const { return num_lattice + num_gens; }
};

struct F2Solution {
    bool consistent = false;
    int rank = 0;
    unsigned long long count = 0;
    std::uint64_t particular = 0;
    std::vector<std::uint64_t> basis; // nullspace basis vectors

    /// All solutions (particular + span of basis), up to limit entries.
    std::vector<std::uint64_t> enumerate(std::size_t limit) const;
};

F2Solution solve(const SignSystem& system);

} // namespace spinflat
