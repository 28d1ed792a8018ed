#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "surdlab/constructor.hpp"
#include "surdlab/kernels.hpp"

namespace surdlab {

// Empirical limit points: a D value counts as a candidate once it has
// occurred at least `threshold` times among n <= n_max. This is evidence,
// not a proof of membership.
struct LimitPointReport {
    Nat d;
    std::uint64_t n_max = 0;
    std::uint64_t threshold = 0;
    std::map<std::size_t, std::uint64_t> counts;
    std::vector<std::size_t> candidates;  // ascending
};

inline constexpr std::uint64_t kDefaultThreshold = 20;

LimitPointReport limit_points(const std::vector<ScanRecord>& records, std::uint64_t threshold);

// Header `d,n,radicand,D`, LF line endings.
void write_scan_csv(std::ostream& os, const std::vector<ScanRecord>& records);
void write_frequency_csv(std::ostream& os, const LimitPointReport& report);
void write_limit_report(std::ostream& os, const LimitPointReport& report);

// Header `n,attained,covers_k,smallest_missing`.
void write_spectrum_csv(std::ostream& os, const std::vector<EuclidSpectrumRow>& rows);

struct Q3Row {
    std::size_t k = 0;
    bool k_candidate = false;
    bool k1_candidate = false;
    bool satisfied() const { return k_candidate || k1_candidate; }
};

// For k = 1..k_max: is k or k+1 among the candidates?
std::vector<Q3Row> question3(const LimitPointReport& report, std::size_t k_max);
void write_q3_csv(std::ostream& os, const std::vector<Q3Row>& rows);

// Big integers are decimal strings.
nlohmann::ordered_json certificate_to_json(const ConstructionCertificate& cert);
ConstructionCertificate certificate_from_json(const nlohmann::ordered_json& j);

struct SuiteBounds {
    std::uint64_t dmax = 0;  // 0 selects the suite's default
    std::uint64_t nmax = 0;
    std::uint64_t bound = 0;
    std::uint64_t kmax = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 20240229;
    int workers = 1;
};

struct SuiteResult {
    std::string suite;
    std::uint64_t cases = 0;
    bool passed = true;
    std::string counterexample;
};

const std::vector<std::string>& suite_names();

// Throws "unknown-suite" for names not in suite_names().
SuiteResult run_suite(std::string_view name, const SuiteBounds& bounds);

// Entry point of the `surdlab` executable. Exit codes: 0 success,
// 1 verification failure, 2 usage error, 3 resource limit.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace surdlab
