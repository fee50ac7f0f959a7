// Timings for the OpenMP kernels against their serial references.
// Build and run:  ./bin/bench_kernels [grid_n]

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eulerint/defint.hpp"
#include "eulerint/planar.hpp"

using namespace eulerint;

namespace {

double time_best_of(int reps, const std::function<void()>& fn) {
    double best = 1e100;
    for (int r = 0; r < reps; ++r) {
        auto start = std::chrono::steady_clock::now();
        fn();
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        best = std::min(best, secs);
    }
    return best;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-32s serial %8.2f ms   parallel %8.2f ms   speedup %5.2fx\n", name,
                serial * 1e3, parallel * 1e3, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::max(4, std::atoi(argv[1])) : 60;
    const int reps = 3;
#ifdef _OPENMP
    std::printf("threads: %d, grid: %dx%d\n", omp_get_max_threads(), n, n);
#else
    std::printf("threads: 1 (no OpenMP), grid: %dx%d\n", n, n);
#endif

    auto K = grid_complex(n, n, {Rat(0), Rat(n)}, {Rat(0), Rat(n)});
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> d(-4, 4);
    RatVec vv(K->vertex_count());
    for (Rat& v : vv) v = rat_frac(d(rng), 2);
    DefFun h = deffun_from_vertex_values(K, vv);

    volatile double sink = 0;

    double s = time_best_of(reps, [&] { sink += rat_double(integrate_serial(h, Measure::Floor)); });
    double p = time_best_of(reps, [&] { sink += rat_double(integrate(h, Measure::Floor)); });
    report("integrate floor", s, p);

    std::vector<long long> cf_vals(K->cell_count());
    std::uniform_int_distribution<int> iv(-3, 3);
    for (long long& v : cf_vals) v = iv(rng);
    CFun cf(K, cf_vals);
    s = time_best_of(reps, [&] { sink += static_cast<double>(integrate_cf_serial(cf)); });
    p = time_best_of(reps, [&] { sink += static_cast<double>(integrate_cf(cf)); });
    report("integrate_cf", s, p);

    // The literal per-cell reference is much slower than the scaled kernel,
    // so compare at a size where both finish quickly.
    auto Ksmall = grid_complex(8, 8, {Rat(0), Rat(8)}, {Rat(0), Rat(8)});
    RatVec vvs(Ksmall->vertex_count());
    for (Rat& v : vvs) v = rat_frac(d(rng), 2);
    DefFun hs = deffun_from_vertex_values(Ksmall, vvs);
    s = time_best_of(reps, [&] { sink += rat_double(riemann_oracle_serial(hs, 500, Measure::Floor)); });
    p = time_best_of(reps, [&] { sink += rat_double(riemann_oracle(hs, 500, Measure::Floor)); });
    report("riemann n=500 (8x8)", s, p);

    s = time_best_of(reps, [&] { sink += rat_double(integrate_levelset(h, Measure::Floor)); });
    report("integrate_levelset", s, s);

    // betti0 sweep on a compact field (interior random, boundary zero).
    auto Kw = grid_complex(20, 20, {Rat(0), Rat(20)}, {Rat(0), Rat(20)});
    PlanarWindow W = make_planar_window(Kw);
    RatVec wv(Kw->vertex_count(), Rat(0));
    for (int j = 1; j < 20; ++j)
        for (int i = 1; i < 20; ++i) wv[j * 21 + i] = rat_frac(d(rng), 2);
    DefFun hw = deffun_from_vertex_values(Kw, wv);
    p = time_best_of(reps, [&] { sink += rat_double(integrate_betti0(W, hw)); });
    report("integrate_betti0 (20x20)", p, p);

    std::printf("(sink %.1f)\n", sink);
    return 0;
}
