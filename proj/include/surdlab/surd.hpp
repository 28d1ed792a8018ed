#pragma once

#include <compare>
#include <cstdint>

#include "surdlab/bigint.hpp"

namespace surdlab {

// The quadratic irrational (P + sqrt(D)) / Q, kept in the form where
// Q divides D - P^2 so that the PQa recurrence stays integral.
struct SurdState {
    Int P;
    Int Q;
    Nat D;

    bool operator==(const SurdState&) const = default;
};

// Rescales to the canonical PQa form and strips common content.
// Throws on Q == 0 ("zero-denominator") or a perfect-square D ("rational-input").
SurdState normalize_surd(const Int& P, const Int& Q, const Nat& D);

// phi^k = (lucas + fib * sqrt(5)) / 2.
struct PhiPower {
    std::uint64_t k = 0;
    Nat lucas;
    Nat fib;

    static PhiPower of(std::uint64_t k);

    // lucas^2 - 5 fib^2 == 4 (-1)^k
    bool identity_holds() const;
};

// Sign of z - phi, exact. Never zero.
int sign_minus_phi(const Rational& z);

// Three-way comparison of |x - phi| against |y - phi|.
std::strong_ordering compare_abs_phi(const Rational& x, const Rational& y);

// Three-way comparison of phi^k against an integer.
std::strong_ordering compare_phi_power(const PhiPower& power, const Int& x);
std::strong_ordering compare_phi_power(std::uint64_t k, const Int& x);

// The unique t >= 0 with phi^(2t) < p < phi^(2t+2). Requires p >= 2.
std::uint64_t phi_interval_exponent(const Nat& p);

}  // namespace surdlab
