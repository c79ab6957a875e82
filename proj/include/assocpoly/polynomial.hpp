#ifndef ASSOCPOLY_POLYNOMIAL_HPP
#define ASSOCPOLY_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "assocpoly/bigint.hpp"
#include "assocpoly/offsets.hpp"

namespace assocpoly {

/// Dense integer polynomial, coefficients leading-first. Normalized so the
/// leading coefficient is nonzero (the zero polynomial is {0}).
struct IntPoly {
    std::vector<BigInt> c;

    IntPoly() : c{BigInt(0)} {}
    explicit IntPoly(std::vector<BigInt> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.size() == 1 && c[0] == 0; }
    bool is_monic() const { return c[0] == 1; }
    const BigInt& leading() const { return c.front(); }
    const BigInt& constant() const { return c.back(); }

    std::string to_string() const;
};

/// Horner evaluation, exact.
BigInt evaluate(const IntPoly& p, const BigInt& x);

IntPoly derivative(const IntPoly& p);

/// Sign of p(num/den) for den > 0, via the homogenized integer form.
int sign_at(const IntPoly& p, const BigRat& x);

/// Content (gcd of coefficients, positive) of a nonzero polynomial.
BigInt content(const IntPoly& p);

/// p divided by its content; leading sign is preserved.
IntPoly primitive_part(const IntPoly& p);

/// Quotient and exact-division flag for p / (x - root). `exact` is true iff
/// the remainder is zero.
struct LinearDivision {
    IntPoly quotient;
    BigInt remainder;
    bool exact = false;
};
LinearDivision divide_linear(const IntPoly& p, const BigInt& root);

/// Integer B with every (real or complex) root strictly inside |z| < B.
BigInt cauchy_root_bound(const IntPoly& p);

/// The monic degree-n polynomial attached to an offset pair.
///
/// Alternating: coefficient of x^{n-k} is (-1)^k binom(n,k)(d^k + e^k), so
/// the value at x equals (x-d)^n + (x-e)^n - x^n.
/// Positive: coefficient of x^{n-k} is binom(n,k)(d^k + e^k), value
/// (x+d)^n + (x+e)^n - x^n.
/// Either way an integer root maps back to a Fermat triple via
/// offsets_to_triple, and the root is a zero iff the triple solves its
/// equation exactly.
struct AssociatedPolynomial {
    int n = 3;                   // odd prime >= 3
    std::vector<BigInt> coeffs;  // leading-first, coeffs[0] == 1
    OffsetPair source;

    IntPoly poly() const { return IntPoly(coeffs); }
};

/// Throws std::invalid_argument unless n is an odd prime >= 3 and the pair
/// satisfies its variant invariants.
AssociatedPolynomial construct(const OffsetPair& pair, int n);

BigInt evaluate(const AssociatedPolynomial& p, const BigInt& x);

bool is_odd_prime(long n);

// JSON schema: {"n": int, "variant": "alternating"|"positive",
//               "d": string, "e": string, "coefficients": [string]}
// with big integers as decimal strings; round-trips bit-exactly.
nlohmann::json to_json(const AssociatedPolynomial& p);
AssociatedPolynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace assocpoly

#endif
