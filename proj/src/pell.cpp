#include "surdlab/pell.hpp"

#include <algorithm>

#include "surdlab/cf.hpp"
#include "surdlab/error.hpp"
#include "surdlab/primes.hpp"

namespace surdlab {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kLinearIndexLimit = 64;

struct Unit {
    Nat x;
    Nat y;
};

// (x1 + y1 sqrt d)(x2 + y2 sqrt d)
Unit compose(const Unit& a, const Unit& b, const Nat& d) {
    return {a.x * b.x + d * a.y * b.y, a.x * b.y + a.y * b.x};
}

PellSolution checked(std::uint64_t index, Unit u, const Nat& d) {
    PellSolution s{index, std::move(u.x), std::move(u.y), d};
    if (!s.satisfies()) {
        fail(ErrorKind::Falsified, "pell-identity",
             "computed Pell solution fails x^2 - d y^2 = 1 for d = " + to_decimal(d));
    }
    return s;
}

}  // namespace

PellSolution fundamental_solution(const Nat& d) {
    require(d >= 2 && !is_perfect_square(d), "square-d",
            "Pell equation needs a non-square d >= 2, got " + to_decimal(d));
    const CFExpansion cf = expand_sqrt(d);
    const std::size_t k = cf.period_length();
    const std::size_t index = (k % 2 == 0) ? k - 1 : 2 * k - 1;
    const auto conv = convergents(cf, index + 1);
    return checked(1, {conv.back().p, conv.back().q}, d);
}

PellSolution nth_solution(const PellSolution& fundamental, std::uint64_t n) {
    require(n >= 1, "precondition", "solution index must be >= 1");
    const Nat& d = fundamental.d;
    const Unit base{fundamental.x, fundamental.y};
    if (n <= kLinearIndexLimit) {
        Unit u = base;
        for (std::uint64_t i = 1; i < n; ++i) u = compose(u, base, d);
        return checked(n, std::move(u), d);
    }
    Unit result{1, 0};
    Unit power = base;
    for (std::uint64_t e = n; e != 0; e >>= 1) {
        if (e & 1) result = compose(result, power, d);
        if (e > 1) power = compose(power, power, d);
    }
    return checked(n, std::move(result), d);
}

PellSolution nth_solution(const Nat& d, std::uint64_t n) {
    return nth_solution(fundamental_solution(d), n);
}

bool negative_pell_solvable(const Nat& d) {
    require(d >= 2 && !is_perfect_square(d), "square-d",
            "Pell equation needs a non-square d >= 2, got " + to_decimal(d));
    return sqrt_period_length(d) % 2 == 1;
}

PellPeriodReport pell_period_mod(const Nat& d, std::uint64_t a) {
    return pell_period_mod(fundamental_solution(d), a);
}

PellPeriodReport pell_period_mod(const PellSolution& f, std::uint64_t a) {
    require(a >= 2 && a < (std::uint64_t{1} << 32), "precondition", "modulus must be in [2, 2^32)");
    const Nat& d = f.d;
    const std::uint64_t x1 = mpz_fdiv_ui(f.x.get_mpz_t(), a);
    const std::uint64_t y1 = mpz_fdiv_ui(f.y.get_mpz_t(), a);
    const std::uint64_t dm = mpz_fdiv_ui(d.get_mpz_t(), a);

    // xs[s] = x_s mod a for s = 0 .. pair_period-1, x_0 = 1
    std::vector<std::uint64_t> xs{1 % a};
    std::uint64_t x = x1, y = y1;
    const std::uint64_t max_steps = a * a + 1;
    while (!(x == 1 % a && y == 0)) {
        if (xs.size() > max_steps) {
            fail(ErrorKind::Falsified, "pell-period", "Pell residue sequence did not return to (1, 0)");
        }
        xs.push_back(x);
        const u128 nx = (static_cast<u128>(x) * x1 + static_cast<u128>(dm) * (static_cast<u128>(y) * y1 % a)) % a;
        const u128 ny = (static_cast<u128>(x) * y1 + static_cast<u128>(y) * x1) % a;
        x = static_cast<std::uint64_t>(nx);
        y = static_cast<std::uint64_t>(ny);
    }

    PellPeriodReport r;
    r.d = d;
    r.modulus = a;
    r.pair_period = xs.size();
    const std::uint64_t pp = r.pair_period;
    for (std::uint64_t s = 1; s <= pp; ++s) {
        if (pp % s != 0) continue;
        bool periodic = true;
        for (std::uint64_t i = 0; i < pp && periodic; ++i) {
            periodic = xs[(i + s) % pp] == xs[i];
        }
        if (periodic) {
            r.x_period = s;
            break;
        }
    }
    return r;
}

bool PellLemmaReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const PellLemmaRow& r) { return r.divides; });
}

PellLemmaReport verify_pell_period_lemma(const Nat& d, std::uint64_t prime_bound) {
    require(d >= 2 && !is_perfect_square(d), "square-d",
            "Pell equation needs a non-square d >= 2, got " + to_decimal(d));
    std::vector<std::uint64_t> odd_primes;
    for (std::uint64_t p : primes_up_to(prime_bound)) {
        if (p > 2) odd_primes.push_back(p);
    }
    PellLemmaReport report;
    report.d = d;
    report.rows.resize(odd_primes.size());
    const PellSolution fundamental = fundamental_solution(d);
    const auto count = static_cast<std::int64_t>(odd_primes.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        const std::uint64_t p = odd_primes[static_cast<std::size_t>(i)];
        const PellPeriodReport pr = pell_period_mod(fundamental, p);
        report.rows[static_cast<std::size_t>(i)] = {p, pr.x_period, pr.pair_period, (p * p - 1) % pr.x_period == 0};
    }
    return report;
}

}  // namespace surdlab
