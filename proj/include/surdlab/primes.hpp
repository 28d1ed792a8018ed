#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "surdlab/bigint.hpp"

namespace surdlab {

// Deterministic Miller-Rabin is proven for inputs below this bound.
inline constexpr std::uint64_t kPrimalityLimit = 341'550'071'728'321ULL;

// Throws a Limit error ("primality-limit") for n >= kPrimalityLimit.
bool is_prime(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

struct TrialFactorization {
    std::vector<std::uint64_t> primes;  // ascending, with multiplicity removed
    Nat cofactor;                       // what remains after dividing them out
    bool complete = false;              // cofactor is 1 or a proven prime
};

TrialFactorization trial_factor(const Nat& x, std::uint64_t limit);

}  // namespace surdlab
