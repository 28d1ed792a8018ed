#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <vector>

#include "surdlab/bigint.hpp"
#include "surdlab/surd.hpp"

namespace surdlab {

// [a0; preperiod, period, period, ...]. The period is aligned to start at
// index 1 or later, so D(alpha) is period.size().
struct CFExpansion {
    Nat a0;
    std::vector<Nat> preperiod;
    std::vector<Nat> period;

    std::size_t period_length() const { return period.size(); }

    // a_i for any i >= 0, repeating the period as needed.
    const Nat& term(std::size_t i) const;

    bool operator==(const CFExpansion&) const = default;
};

struct ConvergentPair {
    Nat p;
    Nat q;
    std::size_t index = 0;
};

inline constexpr std::size_t kUnboundedSteps = std::numeric_limits<std::size_t>::max();

// Expansion of sqrt(N). Throws "rational-input" for perfect squares and N < 2.
CFExpansion expand_sqrt(const Nat& n);

// General floor-and-invert expansion of a canonical surd, splitting at the
// first repeated (P, Q) state. Throws "step-limit" after max_steps.
CFExpansion expand_surd(const SurdState& s, std::size_t max_steps = kUnboundedSteps);

// D(sqrt(N)) without materializing the expansion; ends the period at the
// first Q_i = 1 with i >= 1. Uses 64-bit arithmetic when N < 2^62.
// Throws "step-limit" once the length would exceed max_length.
std::size_t sqrt_period_length(const Nat& n, std::size_t max_length = kUnboundedSteps);
std::size_t sqrt_period_length(std::uint64_t n, std::size_t max_length = kUnboundedSteps);

// D(n sqrt(d)) = D(sqrt(n^2 d)).
std::size_t period_of_multiple(const Nat& n, const Nat& d, std::size_t max_length = kUnboundedSteps);

// Convergents of indices 0 .. count-1.
std::vector<ConvergentPair> convergents(const CFExpansion& cf, std::size_t count);

// True iff period = (w, 2 a0) with w a palindrome. Throws "not-pure-sqrt"
// when the expansion has a preperiod.
bool is_galois_palindrome(const CFExpansion& cf);

struct IdentityCheck {
    bool holds = false;
    Int lhs;  // left side, or the divisor for divisibility properties
    Int rhs;  // right side, or the dividend
};

// Middle-of-palindrome identities for even k = D(sqrt(d)) = 2l:
//   [0] q_{k-1} = q_{l-1}(q_l + q_{l-2}) = q_{l-1}(a_l q_{l-1} + 2 q_{l-2})
//   [1] p_{k-1} = a0 q_{k-1} + q_{k-2}
//   [2] q_{l-1} | q_{k-2} + (-1)^{l-1}
//   [3] a_l q_{l-1} + 2 q_{l-2} | q_{k-2} + (-1)^l
// with p_{-1} = 1, q_{-1} = 0 when l = 1.
struct IdentityReport {
    Nat d;
    std::size_t k = 0;
    std::size_t l = 0;
    std::array<IdentityCheck, 4> properties;
    Int expanded_form;  // q_{l-1}(a_l q_{l-1} + 2 q_{l-2}) for property [0]

    bool all_hold() const {
        for (const auto& p : properties) {
            if (!p.holds) return false;
        }
        return true;
    }
};

// Throws "lemma-precondition" when D(sqrt(d)) is odd.
IdentityReport verify_middle_identities(const Nat& d);

}  // namespace surdlab
