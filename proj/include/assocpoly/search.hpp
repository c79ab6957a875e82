#ifndef ASSOCPOLY_SEARCH_HPP
#define ASSOCPOLY_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "assocpoly/bigint.hpp"
#include "assocpoly/offsets.hpp"
#include "assocpoly/viete.hpp"

namespace assocpoly {

enum class Mode { TripleSearch, OffsetGrid };

std::string to_string(Mode m);

struct CampaignConfig {
    Mode mode = Mode::TripleSearch;
    long lo = 1;
    long hi = 200;
    std::vector<int> n_set = {3, 5, 7};
    Variant variant = Variant::Alternating;  // OffsetGrid only
    int jobs = 1;
    std::uint64_t seed = 0;  // recorded for any sampled sub-checks
    long near_miss_threshold = 10;
};

/// Throws std::invalid_argument on an unusable config (empty grid, bad
/// exponents for the mode).
void validate(const CampaignConfig& cfg);

struct NearMiss {
    FermatTriple t;
    BigInt residual;  // |a^n + b^n - c^n|, nonzero
};

struct IntegerRootInstance {
    OffsetPair pair;
    int n = 3;
    BigInt root;
    FermatTriple triple;   // recovered via offsets_to_triple
    BigInt residual;       // exact a^n + b^n - c^n; 0 confirms the linkage
};

struct GcdWitness {
    FermatTriple t;
    std::string kind;    // "coprimality-precondition" or "identity-violation"
    std::string detail;
};

/// Deterministic content for a given config: identical for any worker
/// count. `elapsed_seconds` is the only non-canonical field.
struct CampaignResult {
    CampaignConfig config;
    std::uint64_t cells_processed = 0;
    std::vector<FermatTriple> solutions;  // exact A^n+B^n=C^n hits; any with
                                          // n >= 3 would be a counterexample
    std::vector<NearMiss> near_misses;
    std::vector<IntegerRootInstance> integer_root_instances;
    std::vector<GcdWitness> gcd_corollary_violations;
    ParityVerdict lemma2;  // OffsetGrid hook
    ParityVerdict mod4;    // OffsetGrid hook
    double elapsed_seconds = 0;

    bool has_counterexample() const;
};

/// Exact test of A^n + B^n == C^n on every (A,B,C,n) cell in the cube.
/// Exact solutions are recorded (and their gcd corollaries checked); cells
/// within the near-miss threshold are reported for diagnostics.
CampaignResult search_triples(const CampaignConfig& cfg);

/// Constructs the associated polynomial for every valid (d,e,n) cell, runs
/// the exact integer-root decider, and the coefficient parity hooks. Any
/// integer root is mapped back to a triple and re-verified exactly.
CampaignResult sweep_offsets(const CampaignConfig& cfg);

/// For triples that satisfy their equation exactly: the pairwise
/// coprimality precondition and the three gcd identities
/// gcd(A+B, C-A) = gcd(A+B, C-B) = gcd(C-A, C-B) = 1.
/// Throws std::invalid_argument if a triple does not solve its equation.
std::vector<GcdWitness> check_gcd_corollaries(const std::vector<FermatTriple>& triples);

/// Primitive Pythagorean triples (m^2-k^2, 2mk, m^2+k^2) for
/// m > k >= 1, gcd(m,k) = 1, m-k odd, m <= m_max.
std::vector<FermatTriple> primitive_pythagorean(long m_max);

/// Canonical machine report: everything except elapsed time, with sorted
/// keys; byte-identical across worker counts.
nlohmann::json to_json(const CampaignResult& r);

/// One row per notable cell (solution, near miss, integer root, witness).
std::string to_csv(const CampaignResult& r);

std::string to_markdown(const CampaignResult& r);

}  // namespace assocpoly

#endif
