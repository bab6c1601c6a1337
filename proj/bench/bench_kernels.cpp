// Serial reference kernels against their OpenMP versions.

#include <omp.h>

#include <cstdio>
#include <functional>
#include <string>

#include "chabauty/bertrand.hpp"
#include "chabauty/curve.hpp"
#include "chabauty/fixtures.hpp"

using namespace chabauty;

namespace {

double best_of(int reps, const std::function<void()>& body) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const double t0 = omp_get_wtime();
        body();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

template <typename R>
void row(const std::string& name, int reps, const std::function<R()>& serial_fn, const std::function<R()>& parallel_fn) {
    R a{}, b{};
    const double ts = best_of(reps, [&] { a = serial_fn(); });
    const double tp = best_of(reps, [&] { b = parallel_fn(); });
    std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name.c_str(), ts, tp, ts / tp, a == b ? "match" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

    const HyperellipticCurve grant = load_fixture("grant").curve;
    const HyperellipticCurve g5 = load_fixture("genus5").curve;

    for (std::uint64_t p : {10007ULL, 100003ULL}) {
        row<std::uint64_t>("count_points_fp grant p=" + std::to_string(p), 3,
                           [&] { return serial::count_points_fp(grant, p).total; },
                           [&] { return count_points_fp(grant, p).total; });
    }
    row<std::uint64_t>("count_points_fp2 genus5 p=997", 3, [&] { return serial::count_points_fp2(g5, 997); },
                       [&] { return count_points_fp2(g5, 997); });
    row<std::size_t>("search_rational_points grant H=200", 2,
                     [&] { return serial::search_rational_points(grant, 200).size(); },
                     [&] { return search_rational_points(grant, 200).size(); });
    row<std::uint64_t>("check_range n<=10^7", 2, [] { return serial::check_range(10'000'000).max_gap; },
                       [] { return check_range(10'000'000).max_gap; });
    return 0;
}
