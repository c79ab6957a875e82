#ifndef ASSOCPOLY_VIETE_HPP
#define ASSOCPOLY_VIETE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "assocpoly/bigint.hpp"
#include "assocpoly/offsets.hpp"
#include "assocpoly/roots.hpp"

namespace assocpoly {

// The coefficient system: for an Alternating pair the k-th symmetric
// function of the roots equals binom(n,k)(d^k + e^k) for k = 1..n. Writing
// G1 for the designated root and t_k for the k-th symmetric function of the
// others, equation k reads lhs_k = G1*t_{k-1} + t_k (t_0 = 1), and the last
// one degenerates to lhs_n = G1*t_{n-1}.

/// Exact left sides binom(n,k)(d^k + e^k), k = 1..n. Alternating pairs only.
std::vector<BigInt> viete_lhs(const OffsetPair& pair, int n);

/// t_k for k = 1..m where m = #roots - 1: elementary symmetric functions of
/// all roots except the one at `excluded_index` (index into numeric_roots),
/// computed by coefficient-wise expansion of prod (x + root). Imaginary
/// parts cancel for conjugate-closed inputs; the largest one seen is
/// reported alongside.
struct TailSums {
    std::vector<Real> t;
    Real max_imag;
};
TailSums tail_sums(const RootSet& r, std::size_t excluded_index);

enum class Parity { Even, Odd };
enum class Integrality { Integer, NonInteger };

struct VieteReport {
    int n = 0;
    BigInt d, e;
    std::vector<BigInt> lhs;          // k = 1..n
    std::vector<Parity> lhs_parity;
    std::vector<int> lhs_mod4;
    std::size_t excluded_index = 0;   // the designated G1
    bool gamma1_is_integer = false;   // false: the trivial-root premise is
                                      // unsatisfied for this instance
    Real gamma1;                      // numeric value of the designated root
    std::vector<Real> t;              // t_1..t_{n-1}
    std::vector<Integrality> t_integrality;
    std::vector<Real> equation_residuals;  // k = 1..n
    double tolerance = 1e-6;
};

/// Builds the full report for one instance: exact left sides with parity
/// and mod-4 residues, tail sums from the root census, and the residual of
/// every equation in the system.
VieteReport audit_equations(const OffsetPair& pair, int n, const RootSet& r,
                            double tolerance = 1e-6);

enum class Claim {
    CoefficientEvenness,   // every lhs_k is even when d, e are both odd
    PenultimateMod4,       // lhs_{n-1} = n(d^{n-1}+e^{n-1}) is 2 mod 4
    OddPowerSumMod4,       // x^n + y^n == 2 (mod 4) for odd x,y and even n
    EvenRootNecessity,     // integer roots must be even (constant term even)
    TailParityPropagation, // integer tail sums share one parity, G1 even
};

/// Wire identifiers used in reports and by the CLI:
/// lemma2, mod4, appendix-b, even-root, ti-parity.
std::string claim_key(Claim c);

struct ParityVerdict {
    Claim claim = Claim::CoefficientEvenness;
    std::uint64_t instances_checked = 0;
    std::uint64_t not_applicable = 0;      // tail-parity only
    std::uint64_t integer_roots_found = 0; // even-root only
    std::vector<nlohmann::json> violations;

    bool clean() const { return violations.empty(); }
};

/// Inclusive rectangle of offsets, filtered to odd coprime variant-valid
/// pairs, crossed with a set of odd-prime exponents.
struct OffsetGrid {
    long lo = 1;
    long hi = 51;
    std::vector<int> n_set = {3, 5, 7};
    Variant variant = Variant::Alternating;
};

/// Enumerates the valid (d, e) cells of a grid in row-major order.
std::vector<std::pair<long, long>> grid_pairs(const OffsetGrid& g);

/// Evenness of every left side over the grid; violations witnessed.
ParityVerdict audit_lemma2(const OffsetGrid& grid);

/// (d^{n-1} + e^{n-1}) mod 4 == 2 over the grid, with lhs_{n-1} mod 4
/// recorded in each witness on failure.
ParityVerdict audit_mod4(const OffsetGrid& grid);

/// Exhaustive check that x^n + y^n == 2 (mod 4) for odd x, y <= x_max and
/// even n <= n_max.
ParityVerdict audit_appendix_b(long x_max, long n_max);

/// Decides integer roots for every grid cell (exact Sturm path) and flags
/// any odd integer root; also counts the roots found in total.
ParityVerdict audit_even_root_necessity(const OffsetGrid& grid);

/// Flags odd integer roots of one polynomial under the evenness rule.
ParityVerdict check_even_root_rule(const IntPoly& p);

/// Parity-propagation check on one report: applicable only when the
/// designated root is an integer and every tail sum is integral within
/// tolerance; then all tail sums must share one parity and G1 must be even.
ParityVerdict audit_tail_parity(const VieteReport& report);

nlohmann::json to_json(const VieteReport& r);
nlohmann::json to_json(const ParityVerdict& v);
std::string to_markdown(const ParityVerdict& v);

}  // namespace assocpoly

#endif
