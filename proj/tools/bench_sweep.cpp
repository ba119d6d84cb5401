// Times the exhaustive oracle sweeps: serial reference vs. OpenMP kernels.
// Not a correctness test; test_oracle already pins serial == parallel.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cwseq/oracle.hpp"

using namespace cwseq;

namespace {

template <typename F>
double best_of_3_ms(F&& body) {
    double best = 1e30;
    for (int i = 0; i < 3; ++i) {
        const auto start = std::chrono::steady_clock::now();
        body();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
    }
    return best;
}

void bench_case(int q, long long k, int e) {
    oracle::SweepOptions serial;
    serial.exec = oracle::Exec::serial;
    oracle::SweepOptions parallel;
    parallel.exec = oracle::Exec::parallel;

    const double range_serial =
        best_of_3_ms([&] { oracle::guaranteed_weight_range(q, k, e, serial); });
    const double range_parallel =
        best_of_3_ms([&] { oracle::guaranteed_weight_range(q, k, e, parallel); });

    // round-trip sweep at a mid-range guaranteed weight
    const auto report = oracle::guaranteed_weight_range(q, k, e, parallel);
    const long long W = report.guaranteed[report.guaranteed.size() / 2];
    const double trip_serial =
        best_of_3_ms([&] { oracle::exhaustive_roundtrip(q, k, e, W, serial); });
    const double trip_parallel =
        best_of_3_ms([&] { oracle::exhaustive_roundtrip(q, k, e, W, parallel); });

    std::printf("q=%d k=%lld e=%d\n", q, k, e);
    std::printf("  range sweep:      serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n",
                range_serial, range_parallel, range_serial / range_parallel);
    std::printf("  round trip (W=%lld): serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n", W,
                trip_serial, trip_parallel, trip_serial / trip_parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel falls back to the serial path\n");
#endif
    bench_case(2, 16, 3);
    bench_case(3, 9, 2);
    bench_case(4, 4, 1);
    return 0;
}
