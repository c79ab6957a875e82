#ifndef ASSOCPOLY_OFFSETS_HPP
#define ASSOCPOLY_OFFSETS_HPP

#include <string>

#include "assocpoly/bigint.hpp"

namespace assocpoly {

// Offset pairs parameterize the associated-polynomial families.
//
// Alternating: (d,e) = (C-A, C-B), used when C is the even member of the
// triple; the polynomial coefficients alternate in sign.
// Positive: (d,e) = (-B-A, -B+C), used when A or B is even; all signed
// coefficient factors are +1.
enum class Variant { Alternating, Positive };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

struct OffsetPair {
    BigInt d;
    BigInt e;
    Variant variant = Variant::Alternating;
};

/// Validated constructor. Both offsets must be odd and coprime (this forces
/// them nonzero). Throws std::invalid_argument naming the failed invariant.
OffsetPair make_offset_pair(BigInt d, BigInt e, Variant variant);

/// A candidate Fermat triple A^n + B^n = C^n. Construction does not force
/// coprimality or an exact equation: near misses are legitimate inputs.
struct FermatTriple {
    BigInt a;
    BigInt b;
    BigInt c;
    int n = 3;
};

/// a^n + b^n - c^n, exact.
BigInt triple_residual(const FermatTriple& t);

bool pairwise_coprime(const FermatTriple& t);

// Case1: C even; Case2: B even; Case3: A even.
enum class ParityCase { Case1, Case2, Case3 };

/// Classifies by which single member is even. Throws std::invalid_argument
/// when zero or more than one member is even.
ParityCase classify_parity_case(const FermatTriple& t);

/// Maps a triple to its offset pair: Case1 -> Alternating (C-A, C-B);
/// Case2 -> Positive (-B-A, -B+C); Case3 reduces to Case2 by exchanging
/// A and B first. Throws if the pair violates its variant invariants.
OffsetPair triple_to_offsets(const FermatTriple& t);

/// Inverse of triple_to_offsets given the candidate root (C for the
/// Alternating variant, B for the Positive one). Case3 inputs come back in
/// their Case2 form, i.e. with A and B exchanged.
FermatTriple offsets_to_triple(const OffsetPair& pair, const BigInt& c_or_b, int n);

}  // namespace assocpoly

#endif
