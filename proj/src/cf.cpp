#include "surdlab/cf.hpp"

#include <cassert>
#include <map>
#include <utility>

#include "surdlab/error.hpp"

namespace surdlab {

namespace {

void require_nonsquare_radicand(const Nat& n) {
    require(n >= 2 && !is_perfect_square(n), "rational-input",
            "radicand " + to_decimal(n) + " is a perfect square or < 2 (rational input)");
}

// floor((P + sqrt(D)) / Q) given root = floor(sqrt(D)), D non-square.
Int partial_quotient(const Int& P, const Int& Q, const Nat& root) {
    if (Q > 0) {
        return floor_div(P + root, Q);
    }
    return -floor_div(P + root, -Q) - 1;
}

}  // namespace

const Nat& CFExpansion::term(std::size_t i) const {
    if (i == 0) {
        return a0;
    }
    const std::size_t j = i - 1;
    if (j < preperiod.size()) {
        return preperiod[j];
    }
    return period[(j - preperiod.size()) % period.size()];
}

CFExpansion expand_surd(const SurdState& s, std::size_t max_steps) {
    require(s.Q != 0 && divides(s.Q, s.D - s.P * s.P), "non-canonical",
            "surd state is not in canonical PQa form");
    require_nonsquare_radicand(s.D);

    const Nat root = integer_sqrt(s.D).root;
    std::vector<Nat> terms;
    std::map<std::pair<Int, Int>, std::size_t> seen;

    Int P = s.P;
    Int Q = s.Q;
    for (std::size_t i = 0;; ++i) {
        if (i >= 1) {
            auto [it, fresh] = seen.try_emplace({P, Q}, i);
            if (!fresh) {
                const std::size_t start = it->second;
                CFExpansion cf;
                cf.a0 = terms[0];
                cf.preperiod.assign(terms.begin() + 1, terms.begin() + static_cast<std::ptrdiff_t>(start));
                cf.period.assign(terms.begin() + static_cast<std::ptrdiff_t>(start), terms.end());
                return cf;
            }
        }
        if (i > max_steps) {
            fail(ErrorKind::Limit, "step-limit", "expansion exceeded max_steps");
        }
        Int a = partial_quotient(P, Q, root);
        const Int next_p = a * Q - P;
        const Int num = s.D - next_p * next_p;
        assert(divides(Q, num));
        Q = num / Q;
        P = next_p;
        terms.push_back(std::move(a));
    }
}

CFExpansion expand_sqrt(const Nat& n) {
    require_nonsquare_radicand(n);
    CFExpansion cf = expand_surd(SurdState{0, 1, n});
    assert(cf.preperiod.empty());
    assert(cf.period.size() == sqrt_period_length(n));
    return cf;
}

[[noreturn]] static void period_limit_exceeded() {
    fail(ErrorKind::Limit, "step-limit", "period length exceeded max_length");
}

std::size_t sqrt_period_length(std::uint64_t n, std::size_t max_length) {
    if (n >= (std::uint64_t{1} << 62)) {
        return sqrt_period_length(from_u64(n), max_length);
    }
    std::uint64_t root = 0;
    {
        const Nat r = integer_sqrt(from_u64(n)).root;
        root = to_u64(r);
    }
    require(n >= 2 && root * root != n, "rational-input",
            "radicand " + std::to_string(n) + " is a perfect square or < 2 (rational input)");
    std::uint64_t P = root;
    std::uint64_t Q = n - root * root;
    std::size_t length = 1;
    while (Q != 1) {
        const std::uint64_t a = (P + root) / Q;
        P = a * Q - P;
        Q = (n - P * P) / Q;
        if (++length > max_length) period_limit_exceeded();
    }
    return length;
}

std::size_t sqrt_period_length(const Nat& n, std::size_t max_length) {
    if (fits_u64(n) && mpz_sizeinbase(n.get_mpz_t(), 2) < 62) {
        return sqrt_period_length(to_u64(n), max_length);
    }
    require_nonsquare_radicand(n);
    const Nat root = integer_sqrt(n).root;
    Int P = root;
    Int Q = n - root * root;
    Int a;
    std::size_t length = 1;
    while (Q != 1) {
        mpz_fdiv_q(a.get_mpz_t(), Int(P + root).get_mpz_t(), Q.get_mpz_t());
        P = a * Q - P;
        Q = (n - P * P) / Q;
        if (++length > max_length) period_limit_exceeded();
    }
    return length;
}

std::size_t period_of_multiple(const Nat& n, const Nat& d, std::size_t max_length) {
    require(n >= 1, "precondition", "multiplier n must be >= 1");
    require_nonsquare_radicand(d);
    return sqrt_period_length(n * n * d, max_length);
}

std::vector<ConvergentPair> convergents(const CFExpansion& cf, std::size_t count) {
    require(count >= 1, "precondition", "convergents needs count >= 1");
    std::vector<ConvergentPair> out;
    out.reserve(count);
    // seeds p_{-1} = 1, q_{-1} = 0, p_{-2} = 0, q_{-2} = 1
    Nat p_prev = 1, q_prev = 0;
    Nat p_prev2 = 0, q_prev2 = 1;
    for (std::size_t k = 0; k < count; ++k) {
        const Nat& a = cf.term(k);
        Nat p = a * p_prev + p_prev2;
        Nat q = a * q_prev + q_prev2;
        p_prev2 = std::move(p_prev);
        q_prev2 = std::move(q_prev);
        p_prev = p;
        q_prev = q;
        out.push_back({std::move(p), std::move(q), k});
    }
    return out;
}

bool is_galois_palindrome(const CFExpansion& cf) {
    require(cf.preperiod.empty(), "not-pure-sqrt", "expansion has a preperiod; not a pure square root");
    if (cf.period.empty() || cf.period.back() != 2 * cf.a0) {
        return false;
    }
    const std::size_t w = cf.period.size() - 1;
    for (std::size_t i = 0; i < w / 2; ++i) {
        if (cf.period[i] != cf.period[w - 1 - i]) {
            return false;
        }
    }
    return true;
}

IdentityReport verify_middle_identities(const Nat& d) {
    const CFExpansion cf = expand_sqrt(d);
    const std::size_t k = cf.period_length();
    require(k % 2 == 0, "lemma-precondition",
            "D(sqrt(" + to_decimal(d) + ")) = " + std::to_string(k) + " is odd");
    const std::size_t l = k / 2;
    const auto conv = convergents(cf, k);

    // p_{-1} = 1, q_{-1} = 0
    auto q = [&](std::ptrdiff_t i) -> Nat { return i < 0 ? Nat(0) : conv[static_cast<std::size_t>(i)].q; };
    auto p = [&](std::ptrdiff_t i) -> Nat { return i < 0 ? Nat(1) : conv[static_cast<std::size_t>(i)].p; };
    const auto K = static_cast<std::ptrdiff_t>(k);
    const auto Lm = static_cast<std::ptrdiff_t>(l);
    const Int sign_l = (l % 2 == 0) ? 1 : -1;  // (-1)^l
    const Nat& a_l = cf.term(l);

    IdentityReport r;
    r.d = d;
    r.k = k;
    r.l = l;

    const Int middle = a_l * q(Lm - 1) + 2 * q(Lm - 2);
    r.expanded_form = q(Lm - 1) * middle;
    r.properties[0].lhs = q(K - 1);
    r.properties[0].rhs = q(Lm - 1) * (q(Lm) + q(Lm - 2));
    r.properties[0].holds = r.properties[0].lhs == r.properties[0].rhs && r.properties[0].rhs == r.expanded_form;

    r.properties[1].lhs = p(K - 1);
    r.properties[1].rhs = cf.a0 * q(K - 1) + q(K - 2);
    r.properties[1].holds = r.properties[1].lhs == r.properties[1].rhs;

    r.properties[2].lhs = q(Lm - 1);
    r.properties[2].rhs = q(K - 2) - sign_l;
    r.properties[2].holds = divides(r.properties[2].lhs, r.properties[2].rhs);

    r.properties[3].lhs = middle;
    r.properties[3].rhs = q(K - 2) + sign_l;
    r.properties[3].holds = divides(r.properties[3].lhs, r.properties[3].rhs);
    return r;
}

}  // namespace surdlab
