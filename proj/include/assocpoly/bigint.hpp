#ifndef ASSOCPOLY_BIGINT_HPP
#define ASSOCPOLY_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace assocpoly {

// Exact arbitrary-precision integers and rationals. GMP supplies the
// arithmetic; everything in this header is the surface the rest of the
// toolkit depends on.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline bool is_odd(const BigInt& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }
inline bool is_even(const BigInt& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

/// Nonnegative residue of v mod m (m > 0), independent of the sign of v.
unsigned long mod_ui(const BigInt& v, unsigned long m);

/// Nonnegative gcd; gcd(0,0) == 0.
BigInt gcd(const BigInt& a, const BigInt& b);

/// n!/(k!(n-k)!) exactly. Throws std::invalid_argument unless 0 <= k <= n.
BigInt binomial(long n, long k);

/// base^exp for exp >= 0.
BigInt pow(const BigInt& base, unsigned long exp);

/// Rational in lowest terms with positive denominator.
BigRat make_rat(const BigInt& num, const BigInt& den);

/// Deterministic Miller-Rabin below 3.3e24 (fixed witness set); a high
/// round-count probabilistic test beyond that range.
bool is_prime(const BigInt& n);

struct Factorization {
    std::vector<BigInt> primes;  // with multiplicity, ascending
    BigInt cofactor = 1;         // > 1 when the budget ran out before finishing

    bool complete() const { return cofactor == 1; }
    BigInt product() const;
};

/// Prime factorization of n >= 1: trial division to 10^6, then Pollard rho
/// (Brent cycle detection) under an iteration budget. On exhaustion the
/// unfactored part is returned as `cofactor` instead of blocking.
/// Throws std::invalid_argument for n <= 0.
Factorization factor(const BigInt& n, std::uint64_t rho_budget = 50'000'000);

/// All positive divisors of a completely factored value, ascending.
/// Throws std::invalid_argument if the factorization is incomplete.
std::vector<BigInt> divisors(const Factorization& f);

}  // namespace assocpoly

#endif
