#pragma once

#include "spinflat/affine.hpp"
#include "spinflat/clifford.hpp"
#include "spinflat/finite_group.hpp"
#include "spinflat/repmatch.hpp"
#include "spinflat/sign_system.hpp"

#include <optional>
#include <string>

namespace spinflat {

/// Everything needed to decide spin existence on the Sylow-cover group
/// generated by the lattice a_1..a_n and the lifts gamma_1..gamma_m:
///   rho[j]    integer linear part of gamma_j (the holonomy action)
///   gamma[j]  affine representative of the j-th holonomy generator
///   lifts[j]  a Spin preimage x_j of phi(g_j)
///   relators  complete relator set of the holonomy 2-group over g_1..g_m
struct CoverProblem {
    int n = 0;
    std::vector<IntMat> rho;
    std::vector<AffineIsometry> gamma;
    std::vector<CliffordElement> lifts;
    RelatorSet relators;
};

/// Translates the relations of the cover group into affine F2 equations:
/// lattice-action relations give rows over the u variables only, holonomy
/// relators give rows mixing s variables, lattice exponents, and a +-1
/// constant from the exact Clifford product of the lifts.
SignSystem build_system(const CoverProblem& problem);

/// Independent oracle: enumerates all 2^(n+m) sign assignments and checks
/// every relation by exact Clifford arithmetic, bypassing the linear-system
/// reduction entirely. Requires n + m <= 24.
unsigned long long brute_force_count(const CoverProblem& problem);
unsigned long long brute_force_count_serial(const CoverProblem& problem);

/// Checks one sign assignment (bits 0..n-1 = u, bits n..n+m-1 = s) against
/// every relation by exact Clifford products. Shared by both oracle variants.
bool assignment_satisfies_relations(const CoverProblem& problem, std::uint64_t assignment);

/// |Hom(G, Z_2)| for the full input group: the homogeneous variant of the
/// same presentation machinery, which equals |H^1| of the orbit space.
unsigned long long hom_count_z2(const CrystalGroupInput& group, i64 cap = 10000);

struct SignAssignment {
    std::vector<int> lattice_signs; // +-1 per a_i
    std::vector<int> gen_signs;     // +-1 per gamma_j
};

struct AnalyzeOptions {
    i64 cap = 10000;
    bool enumerate_assignments = false;
    bool run_oracle = false;
    int phi_variant = 0;
};

struct SpinReport {
    int dim = 0;
    bool orientable = false;
    unsigned long long holonomy_order = 0;
    unsigned long long sylow_order = 0;
    bool exists = false;
    unsigned long long count_cover = 0;
    unsigned long long hom_z2 = 0;
    unsigned long long count_manifold = 0;

    std::vector<std::string> lift_strings;     // base lift of each gamma_j
    std::vector<SignAssignment> assignments;   // filled when requested
    std::optional<unsigned long long> oracle_count;
};

/// The whole pipeline: orientability gate, holonomy closure, Sylow
/// 2-subgroup, affine lifts of its generators, representation matching,
/// spin lifts, sign system, solution count, and the |Hom(.,Z_2)| count for
/// the full group.
SpinReport analyze(const CrystalGroupInput& group, const AnalyzeOptions& opts = {});

/// The Sylow-cover data analyze works with, exposed for tests and tools.
CoverProblem build_cover_problem(const CrystalGroupInput& group, i64 cap = 10000,
                                 int phi_variant = 0);

/// Flat key=value rendering; field names are a stability contract.
std::string render_text(const SpinReport& report);
/// Same fields as a JSON document.
std::string render_json(const SpinReport& report, int indent = 2);

} // namespace spinflat
