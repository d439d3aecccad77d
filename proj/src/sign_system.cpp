#include "spinflat/sign_system.hpp"

#include "spinflat/errors.hpp"

namespace spinflat {

F2Solution solve(const SignSystem& system) {
    int nv = system.nvars();
    if (nv < 0 || nv > 63) throw InternalError("sign system has too many variables");

    // Gaussian elimination on (mask | rhs) rows
    std::vector<F2Row> reduced;
    std::vector<int> pivot_col;
    for (F2Row row : system.rows) {
        for (std::size_t i = 0; i < reduced.size(); ++i)
            if (row.mask & (std::uint64_t(1) << pivot_col[i])) {
                row.mask ^= reduced[i].mask;
                row.rhs ^= reduced[i].rhs;
            }
        if (row.mask == 0) {
            if (row.rhs != 0) {
                F2Solution sol;
                sol.consistent = false;
                sol.count = 0;
                sol.rank = static_cast<int>(reduced.size());
                return sol;
            }
            continue;
        }
        int pc = __builtin_ctzll(row.mask);
        // back-substitute into earlier rows to reach reduced row echelon form
        for (std::size_t i = 0; i < reduced.size(); ++i)
            if (reduced[i].mask & (std::uint64_t(1) << pc)) {
                reduced[i].mask ^= row.mask;
                reduced[i].rhs ^= row.rhs;
            }
        reduced.push_back(row);
        pivot_col.push_back(pc);
    }

    F2Solution sol;
    sol.consistent = true;
    sol.rank = static_cast<int>(reduced.size());
    int free_vars = nv - sol.rank; // < 64 since nv <= 63
    sol.count = 1ull << free_vars;

    std::vector<bool> is_pivot(nv, false);
    for (int pc : pivot_col) is_pivot[pc] = true;

    for (std::size_t i = 0; i < reduced.size(); ++i)
        if (reduced[i].rhs) sol.particular |= std::uint64_t(1) << pivot_col[i];

    for (int v = 0; v < nv; ++v) {
        if (is_pivot[v]) continue;
        std::uint64_t vec = std::uint64_t(1) << v;
        for (std::size_t i = 0; i < reduced.size(); ++i)
            if (reduced[i].mask & (std::uint64_t(1) << v))
                vec |= std::uint64_t(1) << pivot_col[i];
        sol.basis.push_back(vec);
    }
    return sol;
}

std::vector<std::uint64_t> F2Solution::enumerate(std::size_t limit) const {
    std::vector<std::uint64_t> out;
    if (!consistent) return out;
    std::size_t total = count < limit ? static_cast<std::size_t>(count) : limit;
    for (std::size_t sel = 0; sel < total; ++sel) {
        std::uint64_t v = particular;
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (sel & (std::size_t(1) << b)) v ^= basis[b];
        out.push_back(v);
    }
    return out;
}

} // namespace spinflat
