// Wall-clock comparison of the OpenMP kernels against their serial references.

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "surdlab/kernels.hpp"

namespace {

template <class F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time the OpenMP kernels against their serial references"};
    std::uint64_t d_value = 2;
    std::uint64_t n_max = 5000;
    std::uint64_t spec_max = 2000;
    app.add_option("--d", d_value, "Non-square radicand for the scan")->capture_default_str();
    app.add_option("--nmax", n_max, "Largest scan multiplier")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--spectrum-nmax", spec_max, "Largest n for the Euclid spectrum")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);
    const surdlab::Nat d(d_value);
    const int max_threads = omp_get_max_threads();

    std::printf("scan d=%s n<=%llu (hardware threads: %d)\n", d.get_str().c_str(),
                static_cast<unsigned long long>(n_max), max_threads);
    std::size_t checksum = 0;
    const double ref = time_ms([&] {
        for (const auto& r : surdlab::scan_periods_reference(d, n_max)) checksum += r.D;
    });
    std::printf("  %-22s %10.1f ms  (sum D = %zu)\n", "serial reference", ref, checksum);
    for (int w : {1, 2, 4, 8}) {
        std::size_t sum = 0;
        const double t = time_ms([&] {
            for (const auto& r : surdlab::scan_periods(d, n_max, w)) sum += r.D;
        });
        std::printf("  %-22s %10.1f ms  (sum D = %zu, x%.1f)\n", ("openmp, " + std::to_string(w) + " workers").c_str(),
                    t, sum, ref / t);
    }

    std::printf("euclid spectrum n<=%llu\n", static_cast<unsigned long long>(spec_max));
    const double sref = time_ms([&] { surdlab::euclid_spectrum_reference(1, spec_max, 5); });
    std::printf("  %-22s %10.1f ms\n", "serial reference", sref);
    for (int w : {1, 4}) {
        const double t = time_ms([&] { surdlab::euclid_spectrum(1, spec_max, 5, w); });
        std::printf("  %-22s %10.1f ms  (x%.1f)\n", ("openmp, " + std::to_string(w) + " workers").c_str(), t,
                    sref / t);
    }
    return 0;
}
