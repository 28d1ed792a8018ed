#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "surdlab/bigint.hpp"

namespace surdlab {

struct EuclidStep {
    Nat dividend;
    Nat divisor;
    Nat quotient;
    Nat remainder;
};

struct EuclidTrace {
    std::vector<EuclidStep> steps;
    std::size_t length() const { return steps.size(); }
};

// L(x, y): division steps until a zero remainder, larger argument first.
// L(n, 1) = 1. Throws on a zero argument.
std::size_t euclid_length(const Nat& x, const Nat& y);
std::size_t euclid_length(std::uint64_t x, std::uint64_t y);
EuclidTrace euclid_trace(const Nat& x, const Nat& y);

// F_0 = 0, F_1 = F_2 = 1.
Nat fibonacci(std::uint64_t k);

// |a/b - phi| < |F_{k+2}/F_{k+1} - phi|, decided exactly.
bool fib_hypothesis_holds(const Nat& a, const Nat& b, std::uint64_t k);

// The numerator b closest to p * phi; satisfies |b/p - phi| < 1/p.
Nat best_phi_numerator(const Nat& p);

}  // namespace surdlab
