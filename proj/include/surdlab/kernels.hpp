#pragma once

// Data-parallel scans. Each OpenMP kernel has a single-threaded reference
// that takes the general (slower) code path; tests and bench_kernels
// compare the two.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "surdlab/bigint.hpp"

namespace surdlab {

struct ScanRecord {
    Nat d;
    std::uint64_t n = 0;
    Nat radicand;  // n^2 d
    std::size_t D = 0;

    bool operator==(const ScanRecord&) const = default;
};

// D(n sqrt(d)) for n = 1..n_max, ordered by n regardless of worker count.
std::vector<ScanRecord> scan_periods(const Nat& d, std::uint64_t n_max, int workers);
std::vector<ScanRecord> scan_periods_reference(const Nat& d, std::uint64_t n_max);

struct EuclidSpectrumRow {
    std::uint64_t n = 0;
    std::vector<std::size_t> attained;  // sorted {L(m, n) : 1 <= m <= n}
    bool covers_k = false;              // {1..k} subset of attained
    std::size_t smallest_missing = 0;   // least i <= k not attained, 0 if none

    bool operator==(const EuclidSpectrumRow&) const = default;
};

std::vector<EuclidSpectrumRow> euclid_spectrum(std::uint64_t n_min, std::uint64_t n_max, std::size_t k,
                                               int workers);
std::vector<EuclidSpectrumRow> euclid_spectrum_reference(std::uint64_t n_min, std::uint64_t n_max,
                                                         std::size_t k);

}  // namespace surdlab
