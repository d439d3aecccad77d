#include "spinflat/decide.hpp"

#include "spinflat/spinlift.hpp"

#include <algorithm>

namespace spinflat {

SignSystem build_system(const CoverProblem& problem) {
    int n = problem.n;
    int m = static_cast<int>(problem.gamma.size());
    if (n + m > 63) throw CapExceededError("too many sign variables");
    SignSystem sys;
    sys.num_lattice = n;
    sys.num_gens = m;

    // lattice-action rows: gamma_j a_i gamma_j^-1 = prod_k a_k^rho[j](k,i)
    // forces  sum_k rho[j](k,i) u_k + u_i = 0  (mod 2)
    for (int j = 0; j < m; ++j) {
        const IntMat& r = problem.rho[j];
        for (int i = 0; i < n; ++i) {
            F2Row row;
            for (int k = 0; k < n; ++k)
                if (r.at(k, i) % 2 != 0) row.mask ^= std::uint64_t(1) << k;
            row.mask ^= std::uint64_t(1) << i;
            row.rhs = 0;
            if (row.mask != 0 || row.rhs != 0) sys.rows.push_back(row);
        }
    }

    sys.num_action_rows = sys.rows.size();

    // relator rows: for a relator w with lattice word alpha and Clifford
    // constant c = prod x_{i_l}^{+-1} in {+1,-1}:
    //   sum_l s_{i_l} + sum_t alpha_t u_t + [c == -1] = 0  (mod 2)
    CrystalGroupInput cover;
    cover.n = n;
    cover.gens = problem.gamma;
    for (const Word& w : problem.relators.words) {
        LatticeWord alpha = word_to_lattice(w, cover);
        CliffordElement c = CliffordElement::one(n);
        for (int letter : w) {
            int j = letter > 0 ? letter : -letter;
            const CliffordElement& x = problem.lifts[j - 1];
            c = c * (letter > 0 ? x : x.bar()); // x^-1 = bar(x) on Spin elements
        }
        if (!c.is_scalar()) throw InternalError("relator lift product is not scalar");
        UnitSign sign = c.coeff(0).unit_sign();
        if (sign == UnitSign::neither)
            throw InternalError("relator lift product is not +-1");

        F2Row row;
        for (int letter : w) {
            int j = letter > 0 ? letter : -letter;
            row.mask ^= std::uint64_t(1) << (n + j - 1);
        }
        for (int t = 0; t < n; ++t)
            if (alpha[t] % 2 != 0) row.mask ^= std::uint64_t(1) << t;
        row.rhs = sign == UnitSign::minus ? 1 : 0;
        if (row.mask != 0 || row.rhs != 0) sys.rows.push_back(row);
    }
    return sys;
}

bool assignment_satisfies_relations(const CoverProblem& problem, std::uint64_t assignment) {
    int n = problem.n;
    int m = static_cast<int>(problem.gamma.size());
    auto u = [&](int i) { return (assignment >> i) & 1 ? -1 : +1; };        // eps(a_i)
    auto s = [&](int j) { return (assignment >> (n + j)) & 1 ? -1 : +1; };  // sign on x_j

    // lattice-action relations, evaluated literally: one multiplication per
    // unit of each exponent
    for (int j = 0; j < m; ++j) {
        const IntMat& r = problem.rho[j];
        for (int i = 0; i < n; ++i) {
            int val = 1;
            for (int k = 0; k < n; ++k) {
                i64 e = r.at(k, i);
                for (i64 t = 0; t < (e < 0 ? -e : e); ++t) val *= u(k);
            }
            val *= u(i);
            if (val != 1) return false;
        }
    }

    // holonomy relators: exact Clifford product of the signed lifts, then
    // the lattice-sign factor
    CrystalGroupInput cover;
    cover.n = n;
    cover.gens = problem.gamma;
    for (const Word& w : problem.relators.words) {
        CliffordElement acc = CliffordElement::one(n);
        for (int letter : w) {
            int j = letter > 0 ? letter : -letter;
            CliffordElement x = problem.lifts[j - 1];
            if (s(j - 1) < 0) x = -x;
            acc = acc * (letter > 0 ? x : x.bar());
        }
        LatticeWord alpha = word_to_lattice(w, cover);
        int lattice_factor = 1;
        for (int t = 0; t < n; ++t) {
            i64 e = alpha[t];
            for (i64 k = 0; k < (e < 0 ? -e : e); ++k) lattice_factor *= u(t);
        }
        if (lattice_factor < 0) acc = -acc;
        if (!(acc == CliffordElement::one(n))) return false;
    }
    return true;
}

unsigned long long brute_force_count_serial(const CoverProblem& problem) {
    int nv = problem.n + static_cast<int>(problem.gamma.size());
    if (nv > 24) throw std::invalid_argument("sign assignment space exceeds 2^24");
    unsigned long long count = 0;
    std::uint64_t total = std::uint64_t(1) << nv;
    for (std::uint64_t a = 0; a < total; ++a)
        if (assignment_satisfies_relations(problem, a)) ++count;
    return count;
}

unsigned long long hom_count_z2(const CrystalGroupInput& group, i64 cap) {
    int n = group.n;
    int m = static_cast<int>(group.gens.size());
    if (n + m > 63) throw CapExceededError("too many sign variables");
    SignSystem sys;
    sys.num_lattice = n;
    sys.num_gens = m;

    for (int j = 0; j < m; ++j) {
        IntMat r = group.gens[j].lin.to_int();
        for (int i = 0; i < n; ++i) {
            F2Row row;
            for (int k = 0; k < n; ++k)
                if (r.at(k, i) % 2 != 0) row.mask ^= std::uint64_t(1) << k;
            row.mask ^= std::uint64_t(1) << i;
            if (row.mask != 0) sys.rows.push_back(row);
        }
    }

    FiniteMatrixGroup holonomy = close(holonomy_matrices(group), n, cap);
    RelatorSet rels = relators(holonomy);
    for (const Word& w : rels.words) {
        LatticeWord alpha = word_to_lattice(w, group);
        F2Row row;
        for (int letter : w) {
            int j = letter > 0 ? letter : -letter;
            row.mask ^= std::uint64_t(1) << (n + j - 1);
        }
        for (int t = 0; t < n; ++t)
            if (alpha[t] % 2 != 0) row.mask ^= std::uint64_t(1) << t;
        row.rhs = 0; // images in Z_2 are central; no Clifford constant here
        if (row.mask != 0) sys.rows.push_back(row);
    }
    return solve(sys).count;
}

CoverProblem build_cover_problem(const CrystalGroupInput& group, i64 cap, int phi_variant) {
    CoverProblem p;
    p.n = group.n;

    FiniteMatrixGroup holonomy = close(holonomy_matrices(group), group.n, cap);
    FiniteMatrixGroup S = sylow2(holonomy);

    for (std::size_t j = 0; j < S.gen_parent_words.size(); ++j) {
        AffineIsometry g = eval_affine_word(S.gen_parent_words[j], group.gens);
        if (g.lin.to_int() != S.elements[S.gens[j]])
            throw InternalError("affine lift does not project to its holonomy generator");
        p.gamma.push_back(std::move(g));
        p.rho.push_back(S.elements[S.gens[j]]);
    }

    OrthogonalIntegralRep phi = match_representation(S, phi_variant);
    for (const IntMat& mat : phi.gen_matrices) {
        CliffordElement x = lift(mat);
        if (!x.is_spin() || x.lambda_matrix() != mat.to_rational())
            throw InternalError("lift does not project to its representation matrix");
        p.lifts.push_back(std::move(x));
    }
    p.relators = relators(S);
    return p;
}

SpinReport analyze(const CrystalGroupInput& group, const AnalyzeOptions& opts) {
    SpinReport rep;
    rep.dim = group.n;

    rep.orientable = true;
    for (const AffineIsometry& g : group.gens)
        if (g.lin.det() != Rat(1)) rep.orientable = false;

    FiniteMatrixGroup holonomy = close(holonomy_matrices(group), group.n, opts.cap);
    rep.holonomy_order = static_cast<unsigned long long>(holonomy.order());

    rep.hom_z2 = hom_count_z2(group, opts.cap);

    if (!rep.orientable) {
        // no spin structure without an orientation; the Sylow machinery is
        // built for SO(n) holonomy, so stop here
        rep.sylow_order = 0;
        rep.exists = false;
        rep.count_cover = 0;
        rep.count_manifold = 0;
        return rep;
    }

    FiniteMatrixGroup S = sylow2(holonomy);
    rep.sylow_order = static_cast<unsigned long long>(S.order());

    CoverProblem problem = build_cover_problem(group, opts.cap, opts.phi_variant);
    for (const CliffordElement& x : problem.lifts) rep.lift_strings.push_back(x.str());

    SignSystem sys = build_system(problem);
    F2Solution sol = solve(sys);
    rep.count_cover = sol.count;
    rep.exists = sol.count > 0;
    rep.count_manifold = rep.exists ? rep.hom_z2 : 0;

    if (opts.run_oracle) {
        unsigned long long oracle = brute_force_count(problem);
        rep.oracle_count = oracle;
        if (oracle != rep.count_cover)
            throw InternalError("oracle disagrees with solver: " + std::to_string(oracle) +
                                " vs " + std::to_string(rep.count_cover));
    }

    if (opts.enumerate_assignments && rep.exists) {
        for (std::uint64_t a : sol.enumerate(1u << 16)) {
            SignAssignment sa;
            for (int i = 0; i < problem.n; ++i)
                sa.lattice_signs.push_back((a >> i) & 1 ? -1 : +1);
            for (std::size_t j = 0; j < problem.gamma.size(); ++j)
                sa.gen_signs.push_back((a >> (problem.n + j)) & 1 ? -1 : +1);
            rep.assignments.push_back(std::move(sa));
        }
    }
    return rep;
}

} // namespace spinflat
