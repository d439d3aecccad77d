// Benchmark: serial reference vs OpenMP-partitioned enumeration oracle, plus
// lift throughput. Counts must agree between the two paths; the table shows
// the timing side by side.

#include "spinflat/decide.hpp"
#include "spinflat/spinlift.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace spinflat;
using Clock = std::chrono::steady_clock;

namespace {

CrystalGroupInput load(const std::string& name) {
    return parse_group_file(std::string(SPINFLAT_DATA_DIR) + "/" + name);
}

// block direct sum: every generator acts on its own coordinate block and
// fixes the other one
CrystalGroupInput direct_sum(const CrystalGroupInput& a, const CrystalGroupInput& b) {
    CrystalGroupInput out;
    out.n = a.n + b.n;
    auto embed = [&](const AffineIsometry& g, int offset, int dim) {
        AffineIsometry e = AffineIsometry::identity(out.n);
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) e.lin.at(offset + r, offset + c) = g.lin.at(r, c);
            e.tr[offset + r] = g.tr[r];
        }
        return e;
    };
    for (const AffineIsometry& g : a.gens) out.gens.push_back(embed(g, 0, a.n));
    for (const AffineIsometry& g : b.gens) out.gens.push_back(embed(g, a.n, b.n));
    return out;
}

template <typename F> double time_best_of(int reps, F&& f) {
    double best = 1e100;
    for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        f();
        double dt = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        if (dt < best) best = dt;
    }
    return best;
}

void bench_oracle(const char* label, const CrystalGroupInput& g) {
    CoverProblem p = build_cover_problem(g);
    int nv = p.n + static_cast<int>(p.gamma.size());

    unsigned long long serial_count = 0, parallel_count = 0;
    double serial_ms = time_best_of(3, [&] { serial_count = brute_force_count_serial(p); });
    double parallel_ms = time_best_of(3, [&] { parallel_count = brute_force_count(p); });
    unsigned long long solver = solve(build_system(p)).count;

    std::printf("%-28s %6d  %10.2f  %10.2f  %6.2fx  %8llu  %s\n", label, 1 << nv, serial_ms,
                parallel_ms, serial_ms / parallel_ms, serial_count,
                (serial_count == parallel_count && serial_count == solver) ? "yes" : "NO");
}

void bench_lift(int n, int samples) {
    std::mt19937_64 rng(1);
    std::vector<IntMat> mats;
    mats.reserve(samples);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uniform_int_distribution<unsigned> bits(0, (1u << n) - 1);
    for (int i = 0; i < samples; ++i) {
        std::shuffle(perm.begin(), perm.end(), rng);
        IntMat m(n);
        unsigned signs = bits(rng);
        for (int c = 0; c < n; ++c) m.at(perm[c], c) = (signs >> c & 1) ? -1 : 1;
        if (m.signed_permutation_det() != 1)
            for (int r = 0; r < n; ++r)
                if (m.at(r, 0) != 0) {
                    m.at(r, 0) = -m.at(r, 0);
                    break;
                }
        mats.push_back(std::move(m));
    }

    long long serial_terms = 0, parallel_terms = 0;
    double serial_ms = time_best_of(3, [&] {
        serial_terms = 0;
        for (const IntMat& m : mats) serial_terms += static_cast<long long>(lift(m).terms().size());
    });
    double parallel_ms = time_best_of(3, [&] {
        long long acc = 0;
#pragma omp parallel for schedule(static) reduction(+ : acc)
        for (long long i = 0; i < static_cast<long long>(mats.size()); ++i)
            acc += static_cast<long long>(lift(mats[i]).terms().size());
        parallel_terms = acc;
    });

    char label[64];
    std::snprintf(label, sizeof label, "lift roundtrip n=%d x%d", n, samples);
    std::printf("%-28s %6s  %10.2f  %10.2f  %6.2fx  %8lld  %s\n", label, "-", serial_ms,
                parallel_ms, serial_ms / parallel_ms, serial_terms,
                serial_terms == parallel_terms ? "yes" : "NO");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel path falls back to serial\n");
#endif
    std::printf("%-28s %6s  %10s  %10s  %7s  %8s  %s\n", "workload", "space", "serial_ms",
                "omp_ms", "speedup", "result", "agree");

    bench_oracle("dihedral cover (n=5)", load("sylow.134.1.2.2.grp"));
    bench_oracle("hw3+hw3+torus2 (n=8)",
                 direct_sum(direct_sum(load("hw3.grp"), load("hw3.grp")),
                            CrystalGroupInput{2, {}}));
    bench_oracle("dihedral+torus3 (n=8)",
                 direct_sum(load("sylow.134.1.2.2.grp"), CrystalGroupInput{3, {}}));
    bench_lift(6, 20000);
    return 0;
}
