// Benchmark comparing the serial reference sweep against the OpenMP fan-out,
// with a bitwise equality check between the two result sets.
//
// usage: spr3_bench [n_ratios] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "spr3/sweep.hpp"

using namespace spr3;

namespace {

double run_ms(const SwimmerGeometry& base, const std::vector<double>& ratios,
              ExecutionPolicy policy, int repeats, std::vector<CoefficientRow>* out) {
    using clock = std::chrono::steady_clock;
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = clock::now();
        auto rows = coefficient_table(base, ratios, policy);
        const auto t1 = clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
        if (out) *out = std::move(rows);
    }
    return best;
}

bool identical(const std::vector<CoefficientRow>& a, const std::vector<CoefficientRow>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& x = a[i].numeric;
        const auto& y = b[i].numeric;
        if (std::memcmp(&x, &y, sizeof x) != 0) return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 256;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    if (n < 1 || repeats < 1) {
        std::fprintf(stderr, "usage: spr3_bench [n_ratios >= 1] [repeats >= 1]\n");
        return 2;
    }

    const SwimmerGeometry base{0.01, 1.0, 1.0};
    std::vector<double> ratios(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        ratios[static_cast<std::size_t>(i)] = 0.001 + 0.099 * i / std::max(n - 1, 1);

    std::vector<CoefficientRow> serial_rows, parallel_rows;
    const double t_serial = run_ms(base, ratios, ExecutionPolicy::serial, repeats, &serial_rows);
    const double t_parallel =
        run_ms(base, ratios, ExecutionPolicy::parallel, repeats, &parallel_rows);

    std::printf("coefficient extraction sweep, %d ratios, best of %d\n", n, repeats);
    std::printf("  serial   : %9.3f ms\n", t_serial);
    std::printf("  parallel : %9.3f ms  (%d threads)\n", t_parallel, parallel_width());
    std::printf("  speedup  : %9.2fx\n", t_serial / t_parallel);
    std::printf("  results  : %s\n",
                identical(serial_rows, parallel_rows) ? "bitwise identical" : "MISMATCH");
    return identical(serial_rows, parallel_rows) ? 0 : 1;
}
