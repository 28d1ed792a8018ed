#include "surdlab/primes.hpp"

#include "surdlab/error.hpp"

namespace surdlab {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n >= kPrimalityLimit) {
        fail(ErrorKind::Limit, "primality-limit",
             std::to_string(n) + " exceeds the deterministic primality bound");
    }
    if (n < 2) return false;
    constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17};
    for (std::uint64_t p : bases) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t odd = n - 1;
    int twos = 0;
    while ((odd & 1) == 0) {
        odd >>= 1;
        ++twos;
    }
    for (std::uint64_t a : bases) {
        std::uint64_t x = pow_mod(a, odd, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < twos; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

TrialFactorization trial_factor(const Nat& x, std::uint64_t limit) {
    require(x >= 1, "precondition", "trial_factor needs x >= 1");
    TrialFactorization out;
    out.cofactor = x;
    auto strip = [&](std::uint64_t f) {
        if (mpz_divisible_ui_p(out.cofactor.get_mpz_t(), f) == 0) return;
        out.primes.push_back(f);
        do {
            mpz_divexact_ui(out.cofactor.get_mpz_t(), out.cofactor.get_mpz_t(), f);
        } while (mpz_divisible_ui_p(out.cofactor.get_mpz_t(), f) != 0);
    };
    if (limit >= 2) strip(2);
    std::uint64_t f = 3;
    for (; f <= limit; f += 2) {
        if (Nat(f) * f > out.cofactor) break;
        strip(f);
    }
    out.complete = out.cofactor == 1 || Nat(f) * f > out.cofactor;
    return out;
}

}  // namespace surdlab
