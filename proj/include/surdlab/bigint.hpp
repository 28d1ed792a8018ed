#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace surdlab {

// Arbitrary-precision integers. Nat values are non-negative by contract;
// both are GMP integers so that mixed arithmetic needs no conversions.
using Int = mpz_class;
using Nat = mpz_class;

// Always canonical: gcd(|num|, den) = 1 and den > 0.
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_decimal(const Int& x) { return x.get_str(10); }

inline Int from_u64(std::uint64_t v) {
    Int r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

inline bool fits_u64(const Int& x) {
    return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Int& x) {
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, 1, sizeof(v), 0, 0, x.get_mpz_t());
    return v;
}

struct SqrtResult {
    Nat root;
    bool is_square;
};

// floor(sqrt(N)) and whether N is a perfect square.
inline SqrtResult integer_sqrt(const Nat& n) {
    SqrtResult out;
    Nat rem;
    mpz_sqrtrem(out.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    out.is_square = (rem == 0);
    return out;
}

inline bool is_perfect_square(const Nat& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool divides(const Int& d, const Int& x) {
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace surdlab
