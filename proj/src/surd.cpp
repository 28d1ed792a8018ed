#include "surdlab/surd.hpp"

#include "surdlab/error.hpp"

namespace surdlab {

SurdState normalize_surd(const Int& P, const Int& Q, const Nat& D) {
    require(Q != 0, "zero-denominator", "surd denominator Q must be nonzero");
    require(sgn(D) > 0 && !is_perfect_square(D), "rational-input",
            "radicand " + to_decimal(D) + " must be a positive non-square");

    SurdState s{P, Q, D};
    if (!divides(s.Q, s.D - s.P * s.P)) {
        const Int absq = abs(s.Q);
        s.P *= absq;
        s.D *= absq * absq;
        s.Q *= absq;
    }

    Int content = gcd(gcd(s.P, s.Q), (s.D - s.P * s.P) / s.Q);
    if (content > 1) {
        s.P /= content;
        s.Q /= content;
        s.D /= content * content;
    }
    return s;
}

PhiPower PhiPower::of(std::uint64_t k) {
    PhiPower out;
    out.k = k;
    mpz_lucnum_ui(out.lucas.get_mpz_t(), k);
    mpz_fib_ui(out.fib.get_mpz_t(), k);
    return out;
}

bool PhiPower::identity_holds() const {
    const Int lhs = lucas * lucas - 5 * fib * fib;
    return lhs == ((k % 2 == 0) ? 4 : -4);
}

int sign_minus_phi(const Rational& z) {
    // z - phi = (2 num - den - den sqrt(5)) / (2 den), den > 0
    const Int u = 2 * z.get_num() - z.get_den();
    if (u <= 0) {
        return -1;
    }
    const Int& den = z.get_den();
    return (u * u > 5 * den * den) ? 1 : -1;
}

std::strong_ordering compare_abs_phi(const Rational& x, const Rational& y) {
    // |x-phi|^2 - |y-phi|^2 = (x - y)(x + y - 2 phi)
    const int diff = sgn(x - y);
    if (diff == 0) {
        return std::strong_ordering::equal;
    }
    const Rational mid = (x + y) / 2;
    const int product = diff * sign_minus_phi(mid);
    return product < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering compare_phi_power(const PhiPower& power, const Int& x) {
    // sign(phi^k - x) = sign(fib sqrt(5) - (2x - lucas))
    const Int u = 2 * x - power.lucas;
    if (power.fib == 0) {
        const int s = -sgn(u);
        return s < 0 ? std::strong_ordering::less
             : s > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }
    if (u <= 0) {
        return std::strong_ordering::greater;
    }
    return (5 * power.fib * power.fib > u * u) ? std::strong_ordering::greater
                                               : std::strong_ordering::less;
}

std::strong_ordering compare_phi_power(std::uint64_t k, const Int& x) {
    return compare_phi_power(PhiPower::of(k), x);
}

std::uint64_t phi_interval_exponent(const Nat& p) {
    require(p >= 2, "precondition", "phi_interval_exponent needs p >= 2");
    std::uint64_t t = 0;
    while (compare_phi_power(2 * (t + 1), p) == std::strong_ordering::less) {
        ++t;
    }
    return t;
}

}  // namespace surdlab
