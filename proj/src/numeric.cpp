#include "assocpoly/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace assocpoly {

namespace {
unsigned bits_to_digits10(int bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2;
}
}  // namespace

PrecisionGuard::PrecisionGuard(int bits) {
    if (bits < 2) throw std::invalid_argument("precision must be at least 2 bits");
    saved_digits10_ = Real::default_precision();
    Real::default_precision(bits_to_digits10(bits));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_digits10_); }

int default_precision_bits() { return 128; }

Real to_real(const BigInt& v) {
    Real r;
    mpfr_set_z(r.backend().data(), v.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real to_real(const BigRat& v) {
    Real r;
    mpfr_set_q(r.backend().data(), v.get_mpq_t(), MPFR_RNDN);
    return r;
}

Cplx operator+(const Cplx& a, const Cplx& b) { return {Real(a.re + b.re), Real(a.im + b.im)}; }
Cplx operator-(const Cplx& a, const Cplx& b) { return {Real(a.re - b.re), Real(a.im - b.im)}; }

Cplx operator*(const Cplx& a, const Cplx& b) {
    return {Real(a.re * b.re - a.im * b.im), Real(a.re * b.im + a.im * b.re)};
}

Cplx operator/(const Cplx& a, const Cplx& b) {
    Real den = b.re * b.re + b.im * b.im;
    return {Real((a.re * b.re + a.im * b.im) / den),
            Real((a.im * b.re - a.re * b.im) / den)};
}

Real abs(const Cplx& z) { return sqrt(Real(z.re * z.re + z.im * z.im)); }

BigInt nearest_int(const Real& x) {
    Real rounded;
    mpfr_round(rounded.backend().data(), x.backend().data());
    BigInt out;
    mpfr_get_z(out.get_mpz_t(), rounded.backend().data(), MPFR_RNDN);
    return out;
}

Real int_distance(const Real& x) {
    return abs(Real(x - to_real(nearest_int(x))));
}

std::string to_decimal_string(const Real& x) {
    return x.str(40, std::ios_base::scientific);
}

}  // namespace assocpoly
