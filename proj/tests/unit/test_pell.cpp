#include <doctest.h>

#include <cmath>

#include "surdlab/cf.hpp"
#include "surdlab/error.hpp"
#include "surdlab/pell.hpp"

using namespace surdlab;

namespace {

bool nonsquare(unsigned long n) { return !is_perfect_square(Nat(n)); }

// Linear composition with no doubling or powering.
std::vector<std::pair<Nat, Nat>> linear_solutions(const PellSolution& f, std::size_t count) {
    std::vector<std::pair<Nat, Nat>> out{{f.x, f.y}};
    while (out.size() < count) {
        const auto& [x, y] = out.back();
        out.emplace_back(f.x * x + f.d * f.y * y, f.x * y + f.y * x);
    }
    return out;
}

}  // namespace

TEST_CASE("fundamental solutions") {
    const PellSolution s2 = fundamental_solution(2);
    CHECK(s2.x == 3);
    CHECK(s2.y == 2);
    CHECK(s2.index == 1);
    const PellSolution s3 = fundamental_solution(3);
    CHECK(s3.x == 2);
    CHECK(s3.y == 1);
    const PellSolution s61 = fundamental_solution(61);
    CHECK(s61.x == Nat("1766319049"));
    CHECK(s61.y == Nat("226153980"));
    CHECK(s61.satisfies());
    CHECK_THROWS_AS(fundamental_solution(16), Error);
}

TEST_CASE("fundamental solution is minimal (brute force over y <= 10^5)") {
    for (unsigned long d = 2; d <= 200; ++d) {
        if (!nonsquare(d)) continue;
        const PellSolution f = fundamental_solution(d);
        REQUIRE(f.satisfies());
        const unsigned long limit = f.y < 100000 ? f.y.get_ui() : 100000;
        for (unsigned long y = 1; y < limit; ++y) {
            const Nat x2 = Nat(d) * y * y + 1;
            REQUIRE_FALSE(is_perfect_square(x2));
        }
        if (f.y < 100000) {
            REQUIRE(is_perfect_square(Nat(d) * f.y * f.y + 1));
        }
    }
}

TEST_CASE("nth_solution examples") {
    const PellSolution a = nth_solution(2, 3);
    CHECK(a.x == 99);
    CHECK(a.y == 70);
    const PellSolution b = nth_solution(3, 8);
    CHECK(b.x == 18817);
    CHECK(b.y == 10864);
    CHECK(b.x == 2 * 97 * 97 - 1);
    const PellSolution c = nth_solution(7, 1);
    const PellSolution f = fundamental_solution(7);
    CHECK(c.x == f.x);
    CHECK(c.y == f.y);
    CHECK_THROWS_AS(nth_solution(7, 0), Error);
}

TEST_CASE("binary powering agrees with linear iteration up to index 200") {
    for (unsigned long d : {2ul, 3ul, 13ul, 80ul}) {
        const PellSolution f = fundamental_solution(d);
        const auto lin = linear_solutions(f, 200);
        for (std::uint64_t n = 1; n <= 200; ++n) {
            const PellSolution s = nth_solution(f, n);
            REQUIRE(s.x == lin[n - 1].first);
            REQUIRE(s.y == lin[n - 1].second);
        }
    }
}

TEST_CASE("doubling identities") {
    for (unsigned long d : {2ul, 5ul, 3ul, 19ul}) {
        const PellSolution f = fundamental_solution(d);
        for (std::uint64_t j = 1; j <= 100; ++j) {
            const PellSolution sj = nth_solution(f, j);
            const PellSolution s2j = nth_solution(f, 2 * j);
            REQUIRE(s2j.x == 2 * sj.x * sj.x - 1);
            REQUIRE(s2j.y == 2 * sj.x * sj.y);
        }
    }
}

TEST_CASE("negative Pell solvability") {
    CHECK(negative_pell_solvable(2));
    CHECK_FALSE(negative_pell_solvable(3));
    CHECK(negative_pell_solvable(13));
    CHECK(18 * 18 - 13 * 5 * 5 == -1);
    CHECK_THROWS_AS(negative_pell_solvable(25), Error);

    for (unsigned long d = 2; d <= 500; ++d) {
        if (!nonsquare(d)) continue;
        const CFExpansion cf = expand_sqrt(d);
        const auto conv = convergents(cf, 2 * cf.period_length());
        bool found = false;
        for (const auto& c : conv) found = found || (c.p * c.p - Nat(d) * c.q * c.q == -1);
        REQUIRE(found == negative_pell_solvable(d));
    }
}

TEST_CASE("Pell residue periods") {
    const PellPeriodReport a = pell_period_mod(2, 5);
    CHECK(a.pair_period == 6);
    CHECK(a.x_period == 6);
    const PellPeriodReport b = pell_period_mod(2, 7);
    CHECK(b.x_period == 3);
    CHECK(b.pair_period == 3);
    const PellPeriodReport c = pell_period_mod(3, 5);
    CHECK(c.x_period == 3);
    // p | d: the x-only period differs from the pair period
    const PellPeriodReport e = pell_period_mod(20, 5);
    CHECK(e.x_period == 2);
    CHECK(e.pair_period == 10);
    CHECK(24 % e.x_period == 0);
    CHECK(24 % e.pair_period != 0);
    CHECK_THROWS_AS(pell_period_mod(2, 1), Error);
}

TEST_CASE("residue periods match big-integer solutions reduced mod a") {
    for (unsigned long d : {2ul, 3ul, 6ul, 20ul}) {
        const PellSolution f = fundamental_solution(d);
        const auto lin = linear_solutions(f, 2000);
        for (unsigned long a = 2; a <= 40; ++a) {
            const PellPeriodReport r = pell_period_mod(f, a);
            // x_0 = 1 precedes the listed solutions
            auto x_at = [&](std::size_t n) -> unsigned long {
                return n == 0 ? 1 % a : mpz_fdiv_ui(lin[n - 1].first.get_mpz_t(), a);
            };
            auto y_at = [&](std::size_t n) -> unsigned long {
                return n == 0 ? 0 : mpz_fdiv_ui(lin[n - 1].second.get_mpz_t(), a);
            };
            std::size_t pair = 1;
            while (!(x_at(pair) == 1 % a && y_at(pair) == 0)) REQUIRE(++pair < 1000);
            REQUIRE(r.pair_period == pair);
            std::size_t xp = 1;
            for (;; ++xp) {
                bool ok = true;
                for (std::size_t n = 0; n + xp < 1999 && ok; ++n) ok = x_at(n) == x_at(n + xp);
                if (ok) break;
            }
            REQUIRE(r.x_period == xp);
        }
    }
}

TEST_CASE("residue period of x divides p^2 - 1") {
    for (unsigned long d = 2; d <= 50; ++d) {
        if (!nonsquare(d)) continue;
        const PellLemmaReport r = verify_pell_period_lemma(d, 200);
        REQUIRE(r.rows.size() == 45);  // odd primes 3..199
        REQUIRE(r.all_pass());
    }
    const PellLemmaReport r3 = verify_pell_period_lemma(3, 5);
    REQUIRE(r3.rows.size() == 2);
    CHECK(r3.rows[1].prime == 5);
    CHECK(r3.rows[1].x_period == 3);
}
