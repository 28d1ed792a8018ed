#include "surdlab/euclid.hpp"

#include <compare>
#include <utility>

#include "surdlab/error.hpp"
#include "surdlab/surd.hpp"

namespace surdlab {

std::size_t euclid_length(std::uint64_t x, std::uint64_t y) {
    require(x >= 1 && y >= 1, "precondition", "euclid_length needs positive arguments");
    if (x < y) std::swap(x, y);
    std::size_t steps = 0;
    while (y != 0) {
        const std::uint64_t r = x % y;
        x = y;
        y = r;
        ++steps;
    }
    return steps;
}

std::size_t euclid_length(const Nat& x, const Nat& y) {
    if (fits_u64(x) && fits_u64(y)) {
        return euclid_length(to_u64(x), to_u64(y));
    }
    require(x >= 1 && y >= 1, "precondition", "euclid_length needs positive arguments");
    Nat a = x, b = y, r;
    if (a < b) swap(a, b);
    std::size_t steps = 0;
    while (b != 0) {
        mpz_tdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        a.swap(b);
        b.swap(r);
        ++steps;
    }
    return steps;
}

EuclidTrace euclid_trace(const Nat& x, const Nat& y) {
    require(x >= 1 && y >= 1, "precondition", "euclid_trace needs positive arguments");
    Nat a = x, b = y;
    if (a < b) swap(a, b);
    EuclidTrace trace;
    while (b != 0) {
        EuclidStep step{a, b, 0, 0};
        mpz_tdiv_qr(step.quotient.get_mpz_t(), step.remainder.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        a = b;
        b = step.remainder;
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

Nat fibonacci(std::uint64_t k) {
    Nat f;
    mpz_fib_ui(f.get_mpz_t(), k);
    return f;
}

bool fib_hypothesis_holds(const Nat& a, const Nat& b, std::uint64_t k) {
    require(b >= 1 && a > b, "precondition", "fib hypothesis needs a > b >= 1");
    require(k >= 1, "precondition", "fib hypothesis needs k >= 1");
    const Rational ratio = make_rational(a, b);
    const Rational threshold = make_rational(fibonacci(k + 2), fibonacci(k + 1));
    return compare_abs_phi(ratio, threshold) == std::strong_ordering::less;
}

Nat best_phi_numerator(const Nat& p) {
    require(p >= 2, "precondition", "best_phi_numerator needs p >= 2");
    // floor(p phi) = floor((p + sqrt(5 p^2)) / 2)
    const Nat below = (p + integer_sqrt(5 * p * p).root) / 2;
    const Nat above = below + 1;
    const auto order = compare_abs_phi(make_rational(below, p), make_rational(above, p));
    return order == std::strong_ordering::less ? below : above;
}

}  // namespace surdlab
