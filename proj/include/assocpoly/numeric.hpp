#ifndef ASSOCPOLY_NUMERIC_HPP
#define ASSOCPOLY_NUMERIC_HPP

#include <boost/multiprecision/mpfr.hpp>

#include "assocpoly/bigint.hpp"

namespace assocpoly {

// Variable-precision real type for the numeric (non-exact) pipeline. The
// exact deciders never touch it; it backs root approximation, tail sums and
// tolerance checks only.
using Real = boost::multiprecision::mpfr_float;

/// Sets the thread's working precision in bits; restores on destruction.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(int bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_digits10_;
};

int default_precision_bits();  // 128 unless overridden by the caller

Real to_real(const BigInt& v);
Real to_real(const BigRat& v);

/// Minimal complex value over Real; only what the root finder needs.
struct Cplx {
    Real re;
    Real im;

    Cplx() : re(0), im(0) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Cplx(const Real& r) : re(r), im(0) {}
};

Cplx operator+(const Cplx& a, const Cplx& b);
Cplx operator-(const Cplx& a, const Cplx& b);
Cplx operator*(const Cplx& a, const Cplx& b);
Cplx operator/(const Cplx& a, const Cplx& b);
Real abs(const Cplx& z);

/// Round-half-away nearest integer of a Real.
BigInt nearest_int(const Real& x);

/// |x - nearest integer|.
Real int_distance(const Real& x);

/// Decimal string with enough digits for the current working precision.
std::string to_decimal_string(const Real& x);

}  // namespace assocpoly

#endif
