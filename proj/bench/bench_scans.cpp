// Benchmark: OpenMP scan kernels vs their serial reference implementations.
//
// Usage: bench_scans [N]   (default N = 2000000; ranges scale off N)

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sp2gz/scan.hpp"

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s %12.1f %12.1f %9.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, equal ? "outputs match" : "OUTPUTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    const std::uint64_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2000000;

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel kernels run their serial fallback\n");
#endif
    std::printf("range size N = %llu\n\n", static_cast<unsigned long long>(n));
    std::printf("%-28s %12s %12s %10s\n", "kernel", "serial ms", "parallel ms", "speedup");

    {
        std::vector<std::uint64_t> s, p;
        const double ts = time_ms([&] { s = sp2gz::scan::shapiro_non_strict_serial(1, n); });
        const double tp = time_ms([&] { p = sp2gz::scan::shapiro_non_strict(1, n); });
        report("shapiro_non_strict", ts, tp, s == p);
    }
    {
        const sp2gz::Genus g(3);
        std::vector<std::uint64_t> s, p;
        const double ts = time_ms([&] { s = sp2gz::scan::admissible_orders_serial(g, 1, n); });
        const double tp = time_ms([&] { p = sp2gz::scan::admissible_orders(g, 1, n); });
        report("admissible_orders (g=3)", ts, tp, s == p);
    }
    {
        const sp2gz::Genus g(6);
        std::vector<std::uint8_t> s, p;
        const double ts = time_ms([&] { s = sp2gz::scan::solvable_flags_serial(g, 2, n); });
        const double tp = time_ms([&] { p = sp2gz::scan::solvable_flags(g, 2, n); });
        report("solvable_flags (g=6)", ts, tp, s == p);
    }
    return 0;
}
