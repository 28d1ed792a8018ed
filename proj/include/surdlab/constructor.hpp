#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "surdlab/bigint.hpp"
#include "surdlab/cf.hpp"

namespace surdlab {

struct PeriodTwoMultiplier {
    Nat n;                 // y of the fundamental Pell solution
    CFExpansion expected;  // [a-1; (1, 2(a-1))]
};

// n with D(n sqrt(d)) = 2, built from the fundamental solution (a, b): n = b.
PeriodTwoMultiplier period_two_multiplier(const Nat& d);

enum class SignSplit {
    PDividesXPlusOne,   // p | x_m + 1 and q | x_m - 1
    PDividesXMinusOne,  // p | x_m - 1 and q | x_m + 1
};

struct Lemma6Witness {
    Nat d;
    Nat p;
    Nat q;
    std::uint64_t m = 0;
    Nat n;  // y_m / (2pq)
    std::size_t L = 0;
    std::size_t measured_D = 0;
    SignSplit split = SignSplit::PDividesXPlusOne;
    bool beyond_size_bound = false;  // x_m, y_m > 4 p^2 q^2
};

struct Lemma6Search {
    std::vector<Lemma6Witness> witnesses;
    // Hits with x_m, y_m <= 4p^2q^2 whose period missed {2L, 2L+2}; the
    // lemma does not cover them.
    std::uint64_t small_misses = 0;
};

// Scans m <= index_bound on residues mod 2pq and measures D(n sqrt(d)) at
// each hit. Throws "falsified" if a hit beyond the size bound misses the window.
Lemma6Search find_lemma6_witnesses(const Nat& d, const Nat& p, const Nat& q, std::uint64_t index_bound);

// Integers strictly inside (log_phi p - 3, 2 log_phi p + 4), decided with
// exact phi-power comparisons. lo_approx/hi_approx are for display only.
struct LogWindow {
    std::int64_t lo_int = 0;
    std::int64_t hi_int = 0;
    double lo_approx = 0;
    double hi_approx = 0;

    bool contains(std::int64_t D) const { return lo_int <= D && D <= hi_int; }
};

LogWindow window_from_prime(const Nat& p);

struct PipelineLimits {
    std::uint64_t trial_division_limit = 1'000'000;
    std::uint64_t q_candidate_limit = 1'000'000;
    std::uint64_t max_solution_index = 1'000'000;
};

using CheckList = std::vector<std::pair<std::string, bool>>;

struct ConstructionCertificate {
    Nat d;
    Nat c;          // D(c sqrt(d)) = 2
    Nat working_d;  // d c^2
    std::uint64_t r = 0;
    Nat x_4r;
    Nat y_4r;
    std::uint64_t p = 0;
    std::uint64_t t = 0;
    Nat b;
    std::uint64_t q = 0;
    std::uint64_t m = 0;
    Nat x_m;
    Nat y_m;
    Nat n;
    std::size_t L = 0;  // L(p, q)
    std::size_t L_bp = 0;  // L(b, p)
    LogWindow log_window;
    std::size_t measured_D = 0;
    CheckList checks;

    std::size_t window_lo() const { return 2 * L; }
    std::size_t window_hi() const { return 2 * L + 2; }
    bool in_discrete_window() const { return measured_D == window_lo() || measured_D == window_hi(); }
    bool in_log_window() const { return log_window.contains(static_cast<std::int64_t>(measured_D)); }
    bool verified() const;
};

// The full construction for odd r. Throws Precondition ("r-not-odd",
// "square-d"), Limit ("no-prime-p", "no-prime-q", "index-limit",
// "primality-limit") or Falsified ("lemma6-conditions").
ConstructionCertificate theorem_pipeline(const Nat& d, std::uint64_t r, const PipelineLimits& limits = {});

// Re-derives every check from the values stored in the certificate, with
// no search.
CheckList recheck_certificate(const ConstructionCertificate& cert);

}  // namespace surdlab
