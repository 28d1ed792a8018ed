#include "surdlab/constructor.hpp"

#include <algorithm>
#include <cmath>
#include <compare>

#include "surdlab/error.hpp"
#include "surdlab/euclid.hpp"
#include "surdlab/pell.hpp"
#include "surdlab/primes.hpp"
#include "surdlab/surd.hpp"

namespace surdlab {

namespace {

using u128 = unsigned __int128;

void require_nonsquare(const Nat& d) {
    require(d >= 2 && !is_perfect_square(d), "square-d", "d = " + to_decimal(d) + " must be a non-square >= 2");
}

bool all_checks_pass(const CheckList& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

// Smallest positive m with m = 8r (mod 16r) and m = 0 (mod q^2 - 1).
Nat solve_index_congruences(std::uint64_t r, const Nat& q2m1) {
    const Nat mod_a = Nat(16) * r;
    const Nat target = Nat(8) * r;
    const Nat g = gcd(q2m1, mod_a);
    if (!divides(g, target)) {
        fail(ErrorKind::Falsified, "crt", "index congruences have no common solution");
    }
    const Nat reduced_mod = mod_a / g;
    Nat inv;
    const Nat reduced_q = q2m1 / g;
    if (reduced_mod == 1) {
        return q2m1;
    }
    mpz_invert(inv.get_mpz_t(), reduced_q.get_mpz_t(), reduced_mod.get_mpz_t());
    Nat k = (target / g) * inv;
    mpz_fdiv_r(k.get_mpz_t(), k.get_mpz_t(), reduced_mod.get_mpz_t());
    if (k == 0) k = reduced_mod;
    return q2m1 * k;
}

// phi^(L-1) <= p, i.e. L <= log_phi p + 1.
bool euclid_upper_bound_holds(std::size_t L, std::uint64_t p) {
    if (L == 0) return true;
    return compare_phi_power(L - 1, Nat(p)) != std::strong_ordering::greater;
}

}  // namespace

PeriodTwoMultiplier period_two_multiplier(const Nat& d) {
    require_nonsquare(d);
    const PellSolution f = fundamental_solution(d);
    PeriodTwoMultiplier out;
    out.n = f.y;
    out.expected.a0 = f.x - 1;
    out.expected.period = {Nat(1), 2 * (f.x - 1)};
    return out;
}

Lemma6Search find_lemma6_witnesses(const Nat& d, const Nat& p, const Nat& q, std::uint64_t index_bound) {
    require_nonsquare(d);
    require(sqrt_period_length(d) % 2 == 0, "lemma-precondition",
            "D(sqrt(" + to_decimal(d) + ")) is odd");
    require(p >= 3 && q >= 3, "precondition", "p and q must be >= 3");
    require(mpz_odd_p(p.get_mpz_t()) && mpz_odd_p(q.get_mpz_t()), "even-modulus", "p and q must be odd");
    require(gcd(p, q) == 1, "not-coprime", "p and q must be coprime");
    const Nat modulus_big = 2 * p * q;
    require(mpz_sizeinbase(modulus_big.get_mpz_t(), 2) <= 62, "precondition", "2pq too large for the residue scan");

    const std::uint64_t M = to_u64(modulus_big);
    const std::uint64_t pu = to_u64(p);
    const std::uint64_t qu = to_u64(q);
    const PellSolution f = fundamental_solution(d);
    const std::uint64_t x1 = mpz_fdiv_ui(f.x.get_mpz_t(), M);
    const std::uint64_t y1 = mpz_fdiv_ui(f.y.get_mpz_t(), M);
    const std::uint64_t dm = mpz_fdiv_ui(d.get_mpz_t(), M);
    const std::size_t L = euclid_length(pu, qu);
    const Nat size_bound = 4 * p * p * q * q;

    Lemma6Search out;
    std::uint64_t x = x1, y = y1;
    for (std::uint64_t m = 1; m <= index_bound; ++m) {
        if (m > 1) {
            const u128 nx = (static_cast<u128>(x) * x1 + static_cast<u128>(dm) * (static_cast<u128>(y) * y1 % M)) % M;
            const u128 ny = (static_cast<u128>(x) * y1 + static_cast<u128>(y) * x1) % M;
            x = static_cast<std::uint64_t>(nx);
            y = static_cast<std::uint64_t>(ny);
        }
        if (y != 0) continue;
        const bool p_plus = (x + 1) % pu == 0;
        const bool p_minus = (x + pu - 1) % pu == 0;
        const bool q_plus = (x + 1) % qu == 0;
        const bool q_minus = (x + qu - 1) % qu == 0;
        const bool opposite = (p_plus && q_minus) || (p_minus && q_plus);
        if (!opposite) continue;

        const PellSolution s = nth_solution(f, m);
        Lemma6Witness w;
        w.d = d;
        w.p = p;
        w.q = q;
        w.m = m;
        w.n = s.y / modulus_big;
        w.L = L;
        w.split = p_plus ? SignSplit::PDividesXPlusOne : SignSplit::PDividesXMinusOne;
        w.beyond_size_bound = s.x > size_bound && s.y > size_bound;
        w.measured_D = period_of_multiple(w.n, d);
        const bool in_window = w.measured_D == 2 * L || w.measured_D == 2 * L + 2;
        if (in_window) {
            out.witnesses.push_back(std::move(w));
        } else if (w.beyond_size_bound) {
            fail(ErrorKind::Falsified, "falsified",
                 "witness at m = " + std::to_string(m) + " has D = " + std::to_string(w.measured_D) +
                     " outside {" + std::to_string(2 * L) + ", " + std::to_string(2 * L + 2) + "}");
        } else {
            ++out.small_misses;
        }
    }
    return out;
}

LogWindow window_from_prime(const Nat& p) {
    require(p >= 2, "precondition", "window_from_prime needs p >= 2");
    LogWindow w;
    // D > log_phi p - 3  <=>  phi^(D+3) > p
    std::uint64_t e = 1;
    while (compare_phi_power(e, p) != std::strong_ordering::greater) ++e;
    w.lo_int = static_cast<std::int64_t>(e) - 3;
    // D < 2 log_phi p + 4  <=>  phi^(D-4) < p^2
    const Nat p2 = p * p;
    e = 0;
    while (compare_phi_power(e + 1, p2) == std::strong_ordering::less) ++e;
    w.hi_int = static_cast<std::int64_t>(e) + 4;

    const double log_phi_p = std::log(p.get_d()) / std::log((1.0 + std::sqrt(5.0)) / 2.0);
    w.lo_approx = log_phi_p - 3;
    w.hi_approx = 2 * log_phi_p + 4;
    return w;
}

bool ConstructionCertificate::verified() const {
    return all_checks_pass(checks) && in_discrete_window() && in_log_window();
}

ConstructionCertificate theorem_pipeline(const Nat& d, std::uint64_t r, const PipelineLimits& limits) {
    require(r % 2 == 1, "r-not-odd", "r must be odd, got " + std::to_string(r));
    require_nonsquare(d);

    ConstructionCertificate cert;
    cert.d = d;
    cert.r = r;
    cert.c = 1;
    if (sqrt_period_length(d) != 2) {
        cert.c = period_two_multiplier(d).n;
    }
    cert.working_d = d * cert.c * cert.c;
    const Nat& wd = cert.working_d;
    const PellSolution fundamental = fundamental_solution(wd);

    // Odd primes dividing x_{8r} + 1 = 2 x_{4r}^2 are the odd primes dividing x_{4r}.
    const PellSolution s4r = nth_solution(fundamental, 4 * r);
    cert.x_4r = s4r.x;
    cert.y_4r = s4r.y;
    const TrialFactorization fac = trial_factor(cert.x_4r, limits.trial_division_limit);
    std::vector<Nat> candidates(fac.primes.begin(), fac.primes.end());
    if (fac.complete && fac.cofactor > 1) candidates.push_back(fac.cofactor);
    bool found_p = false;
    for (const Nat& f : candidates) {
        if (f == 2 || divides(f, wd)) continue;
        cert.p = to_u64(f);
        found_p = true;
        break;
    }
    if (!found_p) {
        fail(ErrorKind::Limit, "no-prime-p",
             "no odd prime p | x_{8r}+1 with p not dividing d' found within trial-division limit " +
                 std::to_string(limits.trial_division_limit));
    }
    const Nat p(cert.p);

    cert.t = phi_interval_exponent(p);
    cert.b = best_phi_numerator(p);

    const std::uint64_t start = mpz_fdiv_ui(cert.b.get_mpz_t(), cert.p);
    bool found_q = false;
    for (std::uint64_t j = 0; j < limits.q_candidate_limit; ++j) {
        const u128 wide = static_cast<u128>(start) + static_cast<u128>(j) * cert.p;
        if (wide >= kPrimalityLimit) {
            fail(ErrorKind::Limit, "primality-limit", "q candidates exceed the deterministic primality bound");
        }
        const auto q = static_cast<std::uint64_t>(wide);
        if (q < 3 || q % 2 == 0 || q == cert.p) continue;
        if (mpz_divisible_ui_p(wd.get_mpz_t(), q) != 0) continue;
        const Nat q2m1 = Nat(q) * q - 1;
        if (gcd(Nat(2) * r, q2m1 / 8) != 1) continue;
        if (!is_prime(q)) continue;
        cert.q = q;
        found_q = true;
        break;
    }
    if (!found_q) {
        fail(ErrorKind::Limit, "no-prime-q",
             "no admissible prime q within " + std::to_string(limits.q_candidate_limit) + " candidates");
    }
    const Nat q(cert.q);
    const Nat q2m1 = q * q - 1;

    const Nat m = solve_index_congruences(r, q2m1);
    if (!fits_u64(m) || to_u64(m) > limits.max_solution_index) {
        fail(ErrorKind::Limit, "index-limit",
             "solution index m = " + to_decimal(m) + " exceeds limit " + std::to_string(limits.max_solution_index));
    }
    cert.m = to_u64(m);

    const PellSolution sm = nth_solution(fundamental, cert.m);
    cert.x_m = sm.x;
    cert.y_m = sm.y;
    const Nat two_pq = 2 * p * q;
    if (!divides(two_pq, sm.y) || !divides(p, sm.x + 1) || !divides(q, sm.x - 1)) {
        fail(ErrorKind::Falsified, "lemma6-conditions",
             "divisibility conditions fail at m = " + std::to_string(cert.m));
    }
    cert.n = sm.y / two_pq;
    cert.L = euclid_length(cert.p, cert.q);
    cert.L_bp = euclid_length(cert.b, p);
    cert.log_window = window_from_prime(p);
    cert.measured_D = period_of_multiple(cert.n, wd);

    // The 8r-th solution is recomputed directly rather than through doubling.
    const PellSolution s8r = nth_solution(fundamental, 8 * r);
    cert.checks = recheck_certificate(cert);
    auto at = std::find_if(cert.checks.begin(), cert.checks.end(),
                           [](const auto& c) { return c.first == "p_divides_x8r_plus_1"; });
    cert.checks.insert(at + 1, {"p_divides_x8r_plus_1_direct", divides(p, s8r.x + 1)});
    return cert;
}

CheckList recheck_certificate(const ConstructionCertificate& cert) {
    CheckList out;
    const Nat& wd = cert.working_d;
    const Nat p(cert.p);
    const Nat q(cert.q);
    const Nat q2m1 = q * q - 1;
    const Nat m(cert.m);
    const Nat r(cert.r);
    const Nat two_pq = 2 * p * q;
    const Nat size_bound = 4 * p * p * q * q;
    const Nat x8r = 2 * cert.x_4r * cert.x_4r - 1;

    out.emplace_back("working_d_is_d_c_squared", wd == cert.d * cert.c * cert.c);
    out.emplace_back("c_gives_period_two", period_of_multiple(cert.c, cert.d) == 2);
    out.emplace_back("x4r_solves_pell", cert.x_4r * cert.x_4r - wd * cert.y_4r * cert.y_4r == 1);
    out.emplace_back("p_prime", is_prime(cert.p));
    out.emplace_back("p_odd", cert.p % 2 == 1);
    out.emplace_back("p_divides_x8r_plus_1", divides(p, x8r + 1));
    out.emplace_back("p_not_dividing_d", !divides(p, wd));
    out.emplace_back("t_brackets_p", compare_phi_power(2 * cert.t, p) == std::strong_ordering::less &&
                                         compare_phi_power(2 * cert.t + 2, p) == std::strong_ordering::greater);
    out.emplace_back("b_within_one_over_p", sign_minus_phi(make_rational(cert.b - 1, p)) < 0 &&
                                                sign_minus_phi(make_rational(cert.b + 1, p)) > 0);
    out.emplace_back("euclid_lower_bound", cert.L_bp + 1 >= cert.t);
    out.emplace_back("euclid_upper_bound", euclid_upper_bound_holds(cert.L, cert.p));
    out.emplace_back("q_prime", is_prime(cert.q));
    out.emplace_back("q_congruent_b_mod_p", divides(p, q - cert.b));
    out.emplace_back("q_not_dividing_d", !divides(q, wd) && cert.q != cert.p);
    out.emplace_back("gcd_2r_q2m1_over_8_is_1", divides(Nat(8), q2m1) && gcd(2 * r, q2m1 / 8) == 1);
    out.emplace_back("m_congruent_8r_mod_16r", divides(16 * r, m - 8 * r));
    out.emplace_back("q2m1_divides_m", divides(q2m1, m));
    out.emplace_back("xm_solves_pell", cert.x_m * cert.x_m - wd * cert.y_m * cert.y_m == 1);
    out.emplace_back("2pq_divides_y_m", divides(two_pq, cert.y_m));
    out.emplace_back("p_divides_x_m_plus_1", divides(p, cert.x_m + 1));
    out.emplace_back("q_divides_x_m_minus_1", divides(q, cert.x_m - 1));
    out.emplace_back("lemma_size_hypothesis", cert.x_m > size_bound && cert.y_m > size_bound);
    out.emplace_back("n_is_y_m_over_2pq", cert.n * two_pq == cert.y_m);
    out.emplace_back("L_is_euclid_length", cert.L == euclid_length(cert.p, cert.q));
    bool measured_ok = false;
    try {
        measured_ok = cert.measured_D == period_of_multiple(cert.n, wd, cert.measured_D);
    } catch (const Error&) {
    }
    out.emplace_back("measured_D_recomputed", measured_ok);
    out.emplace_back("D_in_discrete_window", cert.in_discrete_window());
    out.emplace_back("D_in_log_window", cert.in_log_window());
    return out;
}

}  // namespace surdlab
