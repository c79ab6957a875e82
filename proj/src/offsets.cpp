#include "assocpoly/offsets.hpp"

#include <stdexcept>

namespace assocpoly {

std::string to_string(Variant v) {
    return v == Variant::Alternating ? "alternating" : "positive";
}

Variant variant_from_string(const std::string& s) {
    if (s == "alternating") return Variant::Alternating;
    if (s == "positive") return Variant::Positive;
    throw std::invalid_argument("unknown variant: " + s);
}

OffsetPair make_offset_pair(BigInt d, BigInt e, Variant variant) {
    if (!is_odd(d)) throw std::invalid_argument("D must be odd");
    if (!is_odd(e)) throw std::invalid_argument("E must be odd");
    if (gcd(d, e) != 1) throw std::invalid_argument("D and E must be coprime");
    return OffsetPair{std::move(d), std::move(e), variant};
}

BigInt triple_residual(const FermatTriple& t) {
    const auto n = static_cast<unsigned long>(t.n);
    return pow(t.a, n) + pow(t.b, n) - pow(t.c, n);
}

bool pairwise_coprime(const FermatTriple& t) {
    return gcd(t.a, t.b) == 1 && gcd(t.a, t.c) == 1 && gcd(t.b, t.c) == 1;
}

ParityCase classify_parity_case(const FermatTriple& t) {
    const int evens = (is_even(t.a) ? 1 : 0) + (is_even(t.b) ? 1 : 0) +
                      (is_even(t.c) ? 1 : 0);
    if (evens != 1)
        throw std::invalid_argument("exactly one of A, B, C must be even");
    if (is_even(t.c)) return ParityCase::Case1;
    if (is_even(t.b)) return ParityCase::Case2;
    return ParityCase::Case3;
}

OffsetPair triple_to_offsets(const FermatTriple& t) {
    switch (classify_parity_case(t)) {
        case ParityCase::Case1:
            return make_offset_pair(t.c - t.a, t.c - t.b, Variant::Alternating);
        case ParityCase::Case2:
            return make_offset_pair(-t.b - t.a, -t.b + t.c, Variant::Positive);
        case ParityCase::Case3:
            // exchange A and B, then treat as Case2
            return make_offset_pair(-t.a - t.b, -t.a + t.c, Variant::Positive);
    }
    throw std::logic_error("unreachable");
}

FermatTriple offsets_to_triple(const OffsetPair& pair, const BigInt& c_or_b, int n) {
    if (pair.variant == Variant::Alternating) {
        // root is C: A = C - D, B = C - E
        return FermatTriple{c_or_b - pair.d, c_or_b - pair.e, c_or_b, n};
    }
    // root is B: A = -B - F, C = B + G
    return FermatTriple{-c_or_b - pair.d, c_or_b, c_or_b + pair.e, n};
}

}  // namespace assocpoly
