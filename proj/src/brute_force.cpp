#include "spinflat/decide.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spinflat {

// OpenMP variant: the assignment space is partitioned across threads and the
// per-assignment check is pure, so a plain reduction is enough. The count is
// identical to the serial reference by construction; tests assert it.
unsigned long long brute_force_count(const CoverProblem& problem) {
    int nv = problem.n + static_cast<int>(problem.gamma.size());
    if (nv > 24) throw std::invalid_argument("sign assignment space exceeds 2^24");
    const std::int64_t total = std::int64_t(1) << nv;

#ifdef _OPENMP
    if (total >= 1024) {
        unsigned long long count = 0;
        int failed = 0;
#pragma omp parallel for schedule(static) reduction(+ : count) reduction(| : failed)
        for (std::int64_t a = 0; a < total; ++a) {
            if (failed) continue; // short-circuits within the thread after its own failure
            try {
                if (assignment_satisfies_relations(problem, static_cast<std::uint64_t>(a)))
                    ++count;
            } catch (...) {
                failed = 1;
            }
        }
        if (failed) throw InternalError("relation check failed inside the parallel oracle");
        return count;
    }
#endif
    return brute_force_count_serial(problem);
}

} // namespace spinflat
