#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "surdlab/bigint.hpp"

namespace surdlab {

// The index-th solution (x_index, y_index) of x^2 - d y^2 = 1.
struct PellSolution {
    std::uint64_t index = 0;
    Nat x;
    Nat y;
    Nat d;

    bool satisfies() const { return x * x - d * y * y == 1; }
};

PellSolution fundamental_solution(const Nat& d);

// Linear composition up to index 64, binary powering of x + y sqrt(d) above.
PellSolution nth_solution(const Nat& d, std::uint64_t n);
PellSolution nth_solution(const PellSolution& fundamental, std::uint64_t n);

// x^2 - d y^2 = -1 is solvable iff D(sqrt(d)) is odd.
bool negative_pell_solvable(const Nat& d);

struct PellPeriodReport {
    Nat d;
    std::uint64_t modulus = 0;
    std::uint64_t pair_period = 0;  // least s >= 1 with (x_s, y_s) = (1, 0) mod a
    std::uint64_t x_period = 0;     // m_d(a), period of x_n mod a alone
};

// Works on residues throughout. Requires 2 <= a < 2^32.
PellPeriodReport pell_period_mod(const Nat& d, std::uint64_t a);
PellPeriodReport pell_period_mod(const PellSolution& fundamental, std::uint64_t a);

struct PellLemmaRow {
    std::uint64_t prime = 0;
    std::uint64_t x_period = 0;
    std::uint64_t pair_period = 0;
    bool divides = false;  // m_d(p) | p^2 - 1
};

struct PellLemmaReport {
    Nat d;
    std::vector<PellLemmaRow> rows;
    bool all_pass() const;
};

// m_d(p) | p^2 - 1 for every odd prime p <= prime_bound.
PellLemmaReport verify_pell_period_lemma(const Nat& d, std::uint64_t prime_bound);

}  // namespace surdlab
