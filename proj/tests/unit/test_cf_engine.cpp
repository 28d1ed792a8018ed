#include <doctest.h>

#include <random>

#include "surdlab/cf.hpp"
#include "surdlab/error.hpp"

using namespace surdlab;

namespace {

std::vector<Nat> word(std::initializer_list<long> xs) {
    std::vector<Nat> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

bool nonsquare(unsigned long n) { return !is_perfect_square(Nat(n)); }

// Replays the PQa recurrence from the expansion's own terms, asserting the
// loop invariant Q_i | D - P_i^2 at every step.
bool replay_invariant(const SurdState& s, const CFExpansion& cf, std::size_t steps) {
    Int P = s.P, Q = s.Q;
    for (std::size_t i = 0; i < steps; ++i) {
        if (!divides(Q, s.D - P * P)) return false;
        const Int next_p = cf.term(i) * Q - P;
        Q = (s.D - next_p * next_p) / Q;
        P = next_p;
    }
    return true;
}

}  // namespace

TEST_CASE("expand_sqrt examples") {
    const CFExpansion two = expand_sqrt(2);
    CHECK(two.a0 == 1);
    CHECK(two.preperiod.empty());
    CHECK(two.period == word({2}));

    const CFExpansion e108 = expand_sqrt(108);
    CHECK(e108.a0 == 10);
    CHECK(e108.period == word({2, 1, 1, 4, 1, 1, 2, 20}));
    CHECK(e108.period_length() == 8);

    CHECK_THROWS_AS(expand_sqrt(9), Error);
    try {
        expand_sqrt(9);
    } catch (const Error& e) {
        CHECK(e.reason() == "rational-input");
    }
}

TEST_CASE("expand_surd examples") {
    CHECK(expand_surd(SurdState{0, 1, 2}) == expand_sqrt(2));

    const CFExpansion golden = expand_surd(SurdState{1, 2, 5});
    CHECK(golden.a0 == 1);
    CHECK(golden.preperiod.empty());
    CHECK(golden.period == word({1}));

    // (-1 + sqrt5)/2 = 0.618..: a0 = 0, then the tail is phi itself.
    const CFExpansion conj = expand_surd(SurdState{-1, 2, 5});
    CHECK(conj.a0 == 0);
    CHECK(conj.preperiod.empty());
    CHECK(conj.period == word({1}));

    // (1 + sqrt2)/3 = 0.8047..: hand PQa on (3, 9, 18) gives [0; 1, (4, 8)]
    const CFExpansion mixed = expand_surd(normalize_surd(1, 3, 2));
    CHECK(mixed.a0 == 0);
    CHECK(mixed.preperiod == word({1}));
    CHECK(mixed.period == word({4, 8}));

    // -sqrt2 = [-2; 1, 1, (2)]
    const CFExpansion neg = expand_surd(SurdState{0, -1, 2});
    CHECK(neg.a0 == -2);
    CHECK(neg.preperiod == word({1, 1}));
    CHECK(neg.period == word({2}));

    CHECK_THROWS_AS(expand_surd(SurdState{1, 3, 2}), Error);  // not canonical
    CHECK_THROWS_AS(expand_surd(SurdState{0, 1, 7}, 2), Error);
}

TEST_CASE("period_of_multiple") {
    CHECK(period_of_multiple(1, 2) == 1);
    CHECK(period_of_multiple(2, 3) == 2);
    CHECK(period_of_multiple(6, 3) == 8);
    CHECK_THROWS_AS(period_of_multiple(0, 3), Error);
    CHECK_THROWS_AS(period_of_multiple(2, 4), Error);
}

TEST_CASE("fast period length agrees with the state-set expansion") {
    for (unsigned long n = 2; n <= 3000; ++n) {
        if (!nonsquare(n)) continue;
        REQUIRE(sqrt_period_length(Nat(n)) == expand_sqrt(Nat(n)).period_length());
    }
    // across the 64-bit fast-path boundary, on radicands s^2 + j with j | 2s
    // so the periods stay short
    const Nat s = Nat(1) << 31;
    for (long j : {-2l, -1l, 1l, 2l, 4l, 8l, 1l << 20, 1l << 32}) {
        const Nat n = s * s + j;
        REQUIRE(sqrt_period_length(n) == expand_sqrt(n).period_length());
    }
    const Nat h("123456789012345678901234567");
    for (const Nat& n : {Nat(h * h + 1), Nat(h * h + 2), Nat(h * h + 2 * h), Nat(h * h - 2)}) {
        CHECK(sqrt_period_length(n) == expand_sqrt(n).period_length());
    }
}

TEST_CASE("sqrt_period_length honours max_length") {
    const auto reason_of = [](auto&& fn) -> std::string {
        try {
            fn();
        } catch (const Error& e) {
            return e.reason();
        }
        return "";
    };
    CHECK(sqrt_period_length(Nat(7), 4) == 4);
    CHECK(reason_of([] { sqrt_period_length(Nat(7), 3); }) == "step-limit");
    CHECK(reason_of([] { sqrt_period_length(std::uint64_t{7}, 3); }) == "step-limit");
    CHECK(reason_of([] { period_of_multiple(Nat(2), Nat(7), 1); }) == "step-limit");
}

TEST_CASE("convergents") {
    const auto c = convergents(expand_sqrt(2), 3);
    REQUIRE(c.size() == 3);
    CHECK((c[0].p == 1 && c[0].q == 1));
    CHECK((c[1].p == 3 && c[1].q == 2));
    CHECK((c[2].p == 7 && c[2].q == 5));

    const auto c3 = convergents(expand_sqrt(3), 2);
    CHECK(make_rational(c3[1].p, c3[1].q) == Rational(2));  // [1, 1]
    CHECK_THROWS_AS(convergents(expand_sqrt(3), 0), Error);
}

TEST_CASE("convergent identities: determinant and fold") {
    for (unsigned long n : {2ul, 3ul, 7ul, 13ul, 61ul, 94ul, 108ul, 991ul, 4999ul}) {
        const CFExpansion cf = expand_sqrt(n);
        const auto conv = convergents(cf, 51);
        for (std::size_t k = 1; k <= 50; ++k) {
            const Int det = conv[k].p * conv[k - 1].q - conv[k - 1].p * conv[k].q;
            REQUIRE(det == ((k % 2 == 1) ? 1 : -1));
            REQUIRE(gcd(conv[k].p, conv[k].q) == 1);
        }
        for (std::size_t k = 0; k <= 50; k += 7) {
            Rational fold(cf.term(k));
            for (std::size_t i = k; i-- > 0;) fold = Rational(cf.term(i)) + 1 / fold;
            REQUIRE(fold == make_rational(conv[k].p, conv[k].q));
        }
    }
}

TEST_CASE("Galois palindrome") {
    CHECK(is_galois_palindrome(expand_sqrt(108)));
    CHECK(is_galois_palindrome(expand_sqrt(2)));
    CFExpansion fake;
    fake.a0 = 1;
    fake.period = word({1, 3});
    CHECK_FALSE(is_galois_palindrome(fake));

    CHECK_THROWS_AS(is_galois_palindrome(expand_surd(normalize_surd(1, 3, 2))), Error);
}

TEST_CASE("every sqrt expansion up to 5000 is Galois-shaped with a minimal period") {
    for (unsigned long n = 2; n <= 5000; ++n) {
        if (!nonsquare(n)) continue;
        const CFExpansion cf = expand_sqrt(n);
        REQUIRE(cf.preperiod.empty());
        REQUIRE(is_galois_palindrome(cf));
        const std::size_t len = cf.period.size();
        for (std::size_t s = 1; s < len; ++s) {
            if (len % s) continue;
            bool same = true;
            for (std::size_t i = 0; i < len && same; ++i) same = cf.period[i] == cf.period[(i + s) % len];
            REQUIRE_FALSE(same);
        }
    }
}

TEST_CASE("PQa invariant holds on random canonical surds") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> pick_p(-200, 200), pick_q(-40, 40), pick_d(2, 2000);
    int done = 0;
    while (done < 500) {
        const long q = pick_q(rng), d = pick_d(rng);
        if (q == 0 || is_perfect_square(Nat(d))) continue;
        const SurdState s = normalize_surd(pick_p(rng), q, d);
        const CFExpansion cf = expand_surd(s);
        REQUIRE(replay_invariant(s, cf, 1 + cf.preperiod.size() + 2 * cf.period.size()));
        ++done;
    }
}

TEST_CASE("middle identities: hand-checked d = 7") {
    const IdentityReport r = verify_middle_identities(7);
    CHECK(r.k == 4);
    CHECK(r.l == 2);
    CHECK(r.all_hold());
    CHECK(r.properties[0].lhs == 3);
    CHECK(r.properties[0].rhs == 3);
    CHECK(r.expanded_form == 3);
    CHECK(r.properties[1].lhs == 8);
    CHECK(r.properties[1].rhs == 8);
    CHECK(r.properties[2].lhs == 1);
    CHECK(r.properties[2].rhs == 1);  // q_2 - 1
    CHECK(r.properties[3].lhs == 3);
    CHECK(r.properties[3].rhs == 3);  // q_2 + 1
}

TEST_CASE("middle identities: degenerate l = 1 and the odd-period error") {
    const IdentityReport r = verify_middle_identities(3);
    CHECK(r.k == 2);
    CHECK(r.l == 1);
    CHECK(r.all_hold());

    CHECK_THROWS_AS(verify_middle_identities(2), Error);
    try {
        verify_middle_identities(2);
    } catch (const Error& e) {
        CHECK(e.reason() == "lemma-precondition");
    }
}

TEST_CASE("middle identities hold for every even-period d up to 1000") {
    int checked = 0;
    for (unsigned long d = 2; d <= 1000; ++d) {
        if (!nonsquare(d) || sqrt_period_length(Nat(d)) % 2) continue;
        REQUIRE(verify_middle_identities(d).all_hold());
        ++checked;
    }
    CHECK(checked > 100);
}
