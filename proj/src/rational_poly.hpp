#ifndef ASSOCPOLY_RATIONAL_POLY_HPP
#define ASSOCPOLY_RATIONAL_POLY_HPP

// Rational-coefficient polynomial machinery behind the exact root path:
// Euclidean division, gcd, Yun square-free decomposition and Sturm chains.
// Internal to the library.

#include <utility>
#include <vector>

#include "assocpoly/bigint.hpp"
#include "assocpoly/polynomial.hpp"

namespace assocpoly::detail {

/// Coefficients leading-first, normalized (no leading zeros; zero poly = {0}).
struct PolyQ {
    std::vector<BigRat> c;

    PolyQ() : c{BigRat(0)} {}
    explicit PolyQ(std::vector<BigRat> coeffs);
    explicit PolyQ(const IntPoly& p);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.size() == 1 && c[0] == 0; }
};

PolyQ derivative(const PolyQ& p);
PolyQ to_monic(const PolyQ& p);

/// Remainder of a mod b (b nonzero).
PolyQ rem(const PolyQ& a, const PolyQ& b);

/// Exact quotient a / b; throws std::logic_error on nonzero remainder.
PolyQ divexact(const PolyQ& a, const PolyQ& b);

/// Monic gcd (1 for coprime inputs).
PolyQ gcd(PolyQ a, PolyQ b);

/// Integer multiple of p scaled by a positive rational so coefficients are
/// coprime integers. Preserves sign.
IntPoly primitive_int(const PolyQ& p);

/// Yun decomposition: pairwise-coprime square-free primitive factors with
/// their multiplicities, p = lc * prod q_i^{m_i}. Constant input yields {}.
std::vector<std::pair<IntPoly, int>> square_free_decomposition(const IntPoly& p);

/// Product of the distinct square-free factors.
IntPoly square_free_part(const IntPoly& p);

/// Sturm chain of a square-free polynomial: signed remainder sequence,
/// each element reduced to its primitive integer form (positive scaling).
std::vector<IntPoly> sturm_chain(const IntPoly& square_free);

/// Sign variations of the chain at x.
int sign_variations(const std::vector<IntPoly>& chain, const BigRat& x);

/// Number of distinct real roots in (lo, hi].
int count_roots(const std::vector<IntPoly>& chain, const BigRat& lo, const BigRat& hi);

}  // namespace assocpoly::detail

#endif
