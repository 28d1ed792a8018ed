#include "surdlab/kernels.hpp"

#include <algorithm>
#include <set>

#include "surdlab/cf.hpp"
#include "surdlab/error.hpp"
#include "surdlab/euclid.hpp"

namespace surdlab {

namespace {

void require_scan_args(const Nat& d, std::uint64_t n_max) {
    require(d >= 2 && !is_perfect_square(d), "square-d", "d = " + to_decimal(d) + " must be a non-square >= 2");
    require(n_max >= 1, "precondition", "n_max must be >= 1");
}

EuclidSpectrumRow finish_row(std::uint64_t n, std::vector<std::size_t> attained, std::size_t k) {
    EuclidSpectrumRow row;
    row.n = n;
    row.attained = std::move(attained);
    row.covers_k = true;
    for (std::size_t i = 1; i <= k; ++i) {
        if (!std::binary_search(row.attained.begin(), row.attained.end(), i)) {
            row.covers_k = false;
            row.smallest_missing = i;
            break;
        }
    }
    return row;
}

}  // namespace

std::vector<ScanRecord> scan_periods(const Nat& d, std::uint64_t n_max, int workers) {
    require_scan_args(d, n_max);
    require(workers >= 1, "precondition", "workers must be >= 1");
    std::vector<ScanRecord> records(n_max);
    const auto count = static_cast<std::int64_t>(n_max);
#pragma omp parallel for schedule(dynamic, 64) num_threads(workers)
    for (std::int64_t i = 0; i < count; ++i) {
        ScanRecord& rec = records[static_cast<std::size_t>(i)];
        rec.d = d;
        rec.n = static_cast<std::uint64_t>(i) + 1;
        rec.radicand = d * rec.n * rec.n;
        rec.D = sqrt_period_length(rec.radicand);
    }
    return records;
}

std::vector<ScanRecord> scan_periods_reference(const Nat& d, std::uint64_t n_max) {
    require_scan_args(d, n_max);
    std::vector<ScanRecord> records;
    records.reserve(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        ScanRecord rec{d, n, d * n * n, 0};
        rec.D = expand_sqrt(rec.radicand).period_length();
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<EuclidSpectrumRow> euclid_spectrum(std::uint64_t n_min, std::uint64_t n_max, std::size_t k,
                                               int workers) {
    require(n_min >= 1 && n_min <= n_max, "precondition", "need 1 <= n_min <= n_max");
    require(k >= 1, "precondition", "k must be >= 1");
    require(workers >= 1, "precondition", "workers must be >= 1");
    std::vector<EuclidSpectrumRow> rows(n_max - n_min + 1);
    const auto count = static_cast<std::int64_t>(rows.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
    for (std::int64_t i = 0; i < count; ++i) {
        const std::uint64_t n = n_min + static_cast<std::uint64_t>(i);
        std::vector<char> seen;
        for (std::uint64_t m = 1; m <= n; ++m) {
            const std::size_t L = euclid_length(n, m);
            if (L >= seen.size()) seen.resize(L + 1, 0);
            seen[L] = 1;
        }
        std::vector<std::size_t> attained;
        for (std::size_t L = 1; L < seen.size(); ++L) {
            if (seen[L]) attained.push_back(L);
        }
        rows[static_cast<std::size_t>(i)] = finish_row(n, std::move(attained), k);
    }
    return rows;
}

std::vector<EuclidSpectrumRow> euclid_spectrum_reference(std::uint64_t n_min, std::uint64_t n_max,
                                                         std::size_t k) {
    require(n_min >= 1 && n_min <= n_max, "precondition", "need 1 <= n_min <= n_max");
    require(k >= 1, "precondition", "k must be >= 1");
    std::vector<EuclidSpectrumRow> rows;
    for (std::uint64_t n = n_min; n <= n_max; ++n) {
        std::set<std::size_t> attained;
        for (std::uint64_t m = 1; m <= n; ++m) {
            attained.insert(euclid_trace(Nat(m), Nat(n)).length());
        }
        rows.push_back(finish_row(n, {attained.begin(), attained.end()}, k));
    }
    return rows;
}

}  // namespace surdlab
