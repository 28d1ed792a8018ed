#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "surdlab/cf.hpp"
#include "surdlab/error.hpp"
#include "surdlab/euclid.hpp"
#include "surdlab/explorer.hpp"
#include "surdlab/pell.hpp"

namespace surdlab {

namespace {

using Check = std::function<std::optional<std::string>(std::uint64_t)>;

std::uint64_t pick(std::uint64_t value, std::uint64_t fallback) { return value ? value : fallback; }

bool is_square_u64(std::uint64_t d) { return is_perfect_square(Nat(d)); }

// Runs `check` on every non-square d in [2, dmax] across the worker pool and
// reports the smallest failing d.
SuiteResult over_radicands(std::string name, std::uint64_t dmax, int workers, const Check& check) {
    std::vector<std::optional<std::string>> failures(dmax + 1);
    std::vector<char> ran(dmax + 1, 0);
    const auto last = static_cast<std::int64_t>(dmax);
#pragma omp parallel for schedule(dynamic, 8) num_threads(workers)
    for (std::int64_t i = 2; i <= last; ++i) {
        const auto d = static_cast<std::uint64_t>(i);
        if (is_square_u64(d)) continue;
        ran[d] = 1;
        try {
            failures[d] = check(d);
        } catch (const std::exception& e) {
            failures[d] = std::string("exception: ") + e.what();
        }
    }
    SuiteResult result;
    result.suite = std::move(name);
    result.cases = static_cast<std::uint64_t>(std::count(ran.begin(), ran.end(), 1));
    for (std::uint64_t d = 2; d <= dmax; ++d) {
        if (failures[d]) {
            result.passed = false;
            result.counterexample = "d = " + std::to_string(d) + ": " + *failures[d];
            break;
        }
    }
    return result;
}

// True iff no proper divisor-length shift reproduces the word.
bool word_is_primitive(const std::vector<Nat>& w) {
    const std::size_t n = w.size();
    for (std::size_t s = 1; s < n; ++s) {
        if (n % s != 0) continue;
        bool same = true;
        for (std::size_t i = 0; i < n && same; ++i) same = w[i] == w[(i + s) % n];
        if (same) return false;
    }
    return true;
}

std::optional<std::string> check_galois(std::uint64_t d) {
    const CFExpansion cf = expand_sqrt(Nat(d));
    if (!cf.preperiod.empty()) return "nonempty preperiod";
    if (!is_galois_palindrome(cf)) return "period is not (palindrome, 2a0)";
    if (!word_is_primitive(cf.period)) return "period is not minimal";
    return std::nullopt;
}

std::optional<std::string> check_eq1eq2(std::uint64_t d, std::size_t kmax) {
    const CFExpansion cf = expand_sqrt(Nat(d));
    const auto conv = convergents(cf, kmax + 1);
    for (std::size_t k = 1; k <= kmax; ++k) {
        const Int lhs = conv[k].p * conv[k - 1].q - conv[k - 1].p * conv[k].q;
        const Int expected = (k % 2 == 1) ? 1 : -1;  // (-1)^{k-1}
        if (lhs != expected) return "determinant identity fails at k = " + std::to_string(k);
    }
    for (std::size_t k = 0; k <= kmax; ++k) {
        Rational fold(cf.term(k));
        for (std::size_t i = k; i-- > 0;) fold = Rational(cf.term(i)) + 1 / fold;
        if (fold != make_rational(conv[k].p, conv[k].q)) return "convergent does not equal the fold at k = " + std::to_string(k);
    }
    return std::nullopt;
}

std::optional<std::string> check_pell_period(std::uint64_t d, std::uint64_t bound) {
    const PellLemmaReport report = verify_pell_period_lemma(Nat(d), bound);
    for (const PellLemmaRow& row : report.rows) {
        if (!row.divides) {
            return "m_d(" + std::to_string(row.prime) + ") = " + std::to_string(row.x_period) +
                   " does not divide p^2 - 1";
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_period_two(std::uint64_t d) {
    const PeriodTwoMultiplier mult = period_two_multiplier(Nat(d));
    const CFExpansion actual = expand_sqrt(mult.n * mult.n * d);
    if (actual != mult.expected || actual.period_length() != 2) {
        return "expansion of " + to_decimal(mult.n) + " sqrt(d) differs from [a-1; (1, 2(a-1))]";
    }
    return std::nullopt;
}

bool negative_pell_by_search(std::uint64_t d) {
    const CFExpansion cf = expand_sqrt(Nat(d));
    const auto conv = convergents(cf, 2 * cf.period_length());
    return std::any_of(conv.begin(), conv.end(),
                       [&](const ConvergentPair& c) { return c.p * c.p - d * c.q * c.q == -1; });
}

std::optional<std::string> check_even_parity(std::uint64_t d, std::uint64_t nmax) {
    const bool solvable = negative_pell_solvable(Nat(d));
    if (solvable != negative_pell_by_search(d)) return "negative Pell solvability disagrees with convergent search";
    if (solvable) return std::nullopt;  // D(sqrt d) odd: nothing to check
    for (std::uint64_t n = 1; n <= nmax; ++n) {
        const std::size_t D = period_of_multiple(Nat(n), Nat(d));
        if (D % 2 != 0) return "D(" + std::to_string(n) + " sqrt d) = " + std::to_string(D) + " is odd";
    }
    return std::nullopt;
}

std::optional<std::string> check_middle(std::uint64_t d) {
    if (sqrt_period_length(Nat(d)) % 2 != 0) return std::nullopt;
    const IdentityReport r = verify_middle_identities(Nat(d));
    for (std::size_t i = 0; i < r.properties.size(); ++i) {
        if (!r.properties[i].holds) {
            std::ostringstream os;
            os << "property (" << i + 1 << ") fails: " << r.properties[i].lhs << " vs " << r.properties[i].rhs;
            return os.str();
        }
    }
    return std::nullopt;
}

SuiteResult fib_suite(const SuiteBounds& bounds) {
    const std::uint64_t samples = pick(bounds.samples, 10'000);
    const std::uint64_t bmax = pick(bounds.bound, 1'000'000);
    std::mt19937_64 rng(bounds.seed);
    std::uniform_int_distribution<std::uint64_t> pick_b(2, bmax);
    SuiteResult result;
    result.suite = "fib";
    while (result.cases < samples) {
        const Nat b(pick_b(rng));
        const Nat best = best_phi_numerator(b);
        for (long offset = -2; offset <= 2 && result.cases < samples; ++offset) {
            const Nat a = best + offset;
            if (a <= b) continue;
            const std::size_t L = euclid_length(a, b);
            for (std::uint64_t k = 1; result.cases < samples && fib_hypothesis_holds(a, b, k); ++k) {
                ++result.cases;
                if (L < k) {
                    result.passed = false;
                    result.counterexample = "L(" + to_decimal(a) + ", " + to_decimal(b) + ") = " +
                                            std::to_string(L) + " < k = " + std::to_string(k);
                    return result;
                }
            }
        }
    }
    return result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"galois", "eq1eq2",      "pell-period", "okres2",
                                                "even-parity", "wlasnosci", "fib"};
    return names;
}

SuiteResult run_suite(std::string_view name, const SuiteBounds& bounds) {
    const int w = std::max(1, bounds.workers);
    if (name == "galois") {
        return over_radicands("galois", pick(bounds.dmax, 5000), w, check_galois);
    }
    if (name == "eq1eq2") {
        const std::size_t kmax = pick(bounds.kmax, 50);
        return over_radicands("eq1eq2", pick(bounds.dmax, 1000), w,
                              [kmax](std::uint64_t d) { return check_eq1eq2(d, kmax); });
    }
    if (name == "pell-period") {
        const std::uint64_t bound = pick(bounds.bound, 200);
        return over_radicands("pell-period", pick(bounds.dmax, 50), w,
                              [bound](std::uint64_t d) { return check_pell_period(d, bound); });
    }
    if (name == "okres2") {
        return over_radicands("okres2", pick(bounds.dmax, 500), w, check_period_two);
    }
    if (name == "even-parity") {
        const std::uint64_t nmax = pick(bounds.nmax, 300);
        return over_radicands("even-parity", pick(bounds.dmax, 100), w,
                              [nmax](std::uint64_t d) { return check_even_parity(d, nmax); });
    }
    if (name == "wlasnosci") {
        return over_radicands("wlasnosci", pick(bounds.dmax, 3000), w, check_middle);
    }
    if (name == "fib") {
        return fib_suite(bounds);
    }
    fail(ErrorKind::Precondition, "unknown-suite", "unknown suite '" + std::string(name) + "'");
}

}  // namespace surdlab
