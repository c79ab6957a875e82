#ifndef ASSOCPOLY_ROOTS_HPP
#define ASSOCPOLY_ROOTS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "assocpoly/bigint.hpp"
#include "assocpoly/numeric.hpp"
#include "assocpoly/polynomial.hpp"

namespace assocpoly {

/// Half-open interval (lo, hi] with rational endpoints containing exactly
/// one real root. Degenerate (lo == hi) when the root is exactly rational.
struct IsolatingInterval {
    BigRat lo;
    BigRat hi;

    BigRat width() const { return BigRat(hi - lo); }
};

struct RealRootApprox {
    IsolatingInterval interval;  // width < 2^-40
    Real approx;                 // refined to the working precision
};

/// One member of a conjugate pair, im > 0; the mate is re - im*i.
struct ComplexPairApprox {
    Real re;
    Real im;
    Real residual;  // |P(re + im*i)| at the working precision
};

/// Complete root census of an integer polynomial: exact integer roots and
/// isolating intervals from the Sturm path, complex pairs from the
/// simultaneous iteration. Entries are repeated per multiplicity, so
/// #integer + #real_irrational + 2*#complex_pairs == degree.
struct RootSet {
    int degree = 0;
    int precision_bits = 128;
    std::vector<BigInt> integer_roots;             // ascending
    std::vector<RealRootApprox> real_irrational;   // ascending by interval
    std::vector<ComplexPairApprox> complex_pairs;  // ascending by (re, im)
    Real sym_rel_error;  // worst relative error reconstructing coefficients

    int real_count() const {
        return static_cast<int>(integer_roots.size() + real_irrational.size());
    }
};

/// Thrown when the iterative stage fails to converge; carries partial state.
class NumericFailure : public std::runtime_error {
  public:
    NumericFailure(const std::string& what, std::vector<Cplx> partial)
        : std::runtime_error(what), partial_roots(std::move(partial)) {}
    std::vector<Cplx> partial_roots;
};

/// Exact, complete list of integer roots with multiplicity, ascending.
/// Square-free decomposition first, then Sturm isolation over a Cauchy
/// bound, bisection to width < 1/2 and exact evaluation at the at-most-one
/// integer candidate per interval.
std::vector<BigInt> integer_roots_sturm(const IntPoly& p);
std::vector<BigInt> integer_roots_sturm(const AssociatedPolynomial& p);

/// Cross-check decider: enumerate divisors of the constant term (both
/// signs) and test exactly. Distinct roots, ascending, no multiplicity.
/// `complete` is false when the constant term resisted factorization within
/// budget; the roots found so far are still exact roots.
struct DivisorRootResult {
    std::vector<BigInt> roots;
    bool complete = true;
    Factorization constant_factorization;
};
DivisorRootResult integer_roots_divisor(const IntPoly& p,
                                        std::uint64_t rho_budget = 50'000'000);
DivisorRootResult integer_roots_divisor(const AssociatedPolynomial& p,
                                        std::uint64_t rho_budget = 50'000'000);

/// Full numeric census at the requested precision (>= 64 bits). Integer and
/// real-root data come from the exact path; complex pairs from Aberth
/// simultaneous iteration with residual verification. Throws NumericFailure
/// on non-convergence, std::invalid_argument for precision < 64.
RootSet all_roots_numeric(const IntPoly& p, int precision_bits = 128);
RootSet all_roots_numeric(const AssociatedPolynomial& p, int precision_bits = 128);

/// All roots as complex numbers in canonical order: integer roots, then
/// real irrational, then each complex pair as (re+im*i, re-im*i).
std::vector<Cplx> numeric_roots(const RootSet& r);

/// Index into numeric_roots() for the root playing the designated role:
/// the first integer root when one exists, otherwise the real root of
/// largest magnitude. Throws std::invalid_argument if there is no real root.
std::size_t default_excluded_root(const RootSet& r);

enum class PairModel { QuadraticConjugate, ComplexConjugate, Unpaired };

struct PairEntry {
    std::vector<std::size_t> indices;  // 2 for a pair, 1 for an unpaired root
    Real sum_re, sum_im;
    Real product_re, product_im;
    bool sum_is_integer = false;
    bool product_is_integer = false;
    PairModel model = PairModel::Unpaired;
    BigInt sum_int;      // nearest integers, meaningful when the flags hold
    BigInt product_int;
};

enum class PairVerdict { ConsistentWithConjugateModel, Violation };

/// Conjugate-pair structure check: after excluding the designated trivial
/// root (when given), search pairings of the remaining roots maximizing the
/// pairs whose sum and product are within `tolerance` of integers.
/// Exhaustive over perfect matchings up to 12 roots, greedy beyond.
struct PairClassification {
    std::vector<PairEntry> pairing;
    PairVerdict verdict = PairVerdict::Violation;
    double tolerance = 1e-6;
    nlohmann::json witness;  // unpairable roots and nearest-integer residuals
};
PairClassification classify_pairs(const RootSet& r,
                                  std::optional<BigInt> trivial_root,
                                  double tolerance = 1e-6);

// JSON: integer roots as decimal strings, intervals as rational-string
// pairs, approximations as decimal strings with a "residual" field.
nlohmann::json to_json(const RootSet& r);
nlohmann::json to_json(const PairClassification& c);

std::string to_string(PairModel m);
std::string to_string(PairVerdict v);

}  // namespace assocpoly

#endif
