#include "assocpoly/bigint.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace assocpoly {

unsigned long mod_ui(const BigInt& v, unsigned long m) {
    return mpz_fdiv_ui(v.get_mpz_t(), m);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("binomial requires 0 <= k <= n");
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

BigInt pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

namespace {

constexpr unsigned long kSmallPrimes[] = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
    67, 71, 73, 79, 83, 89, 97};

// Composite iff some base in this set witnesses it, for n < 3.317e24.
constexpr unsigned long kMrWitnesses[] = {2,  3,  5,  7,  11, 13, 17,
                                          19, 23, 29, 31, 37, 41};

const BigInt& mr_deterministic_bound() {
    static const BigInt bound("3317044064679887385961981");
    return bound;
}

bool mr_composite_witness(const BigInt& n, unsigned long a, const BigInt& d,
                          unsigned long r) {
    BigInt x, base(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    for (unsigned long p : kSmallPrimes) {
        if (n == p) return true;
        if (mod_ui(n, p) == 0) return false;
    }
    if (n < 10201) return true;  // no factor below 101

    if (n >= mr_deterministic_bound())
        return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;

    BigInt d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    for (unsigned long a : kMrWitnesses)
        if (mr_composite_witness(n, a, d, r)) return false;
    return true;
}

BigInt Factorization::product() const {
    BigInt p = cofactor;
    for (const auto& q : primes) p *= q;
    return p;
}

namespace {

// Brent-cycle Pollard rho. Deterministic (fixed polynomial offsets), so
// factorizations are reproducible. Returns 0 when the budget runs out.
BigInt pollard_brent(const BigInt& n, std::uint64_t& budget) {
    if (is_even(n)) return 2;
    for (unsigned long c = 1; c < 64; ++c) {
        BigInt y(2), g(1), q(1), x, ys;
        const unsigned long m = 128;
        unsigned long r = 1;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += m) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                if (budget < lim) return 0;
                budget -= lim;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
                if (budget == 0) return 0;
                --budget;
            } while (g == 1);
        }
        if (g != n) return g;
        // cycle collapsed; retry with the next offset
    }
    return 0;
}

}  // namespace

Factorization factor(const BigInt& n, std::uint64_t rho_budget) {
    if (n <= 0) throw std::invalid_argument("factor requires n >= 1");
    Factorization out;
    if (n == 1) return out;

    BigInt rest = n;
    while (is_even(rest)) {
        out.primes.emplace_back(2);
        rest /= 2;
    }
    unsigned long d = 3;
    while (rest > 1 && !rest.fits_ulong_p() && d <= 1'000'000) {
        while (mod_ui(rest, d) == 0) {
            out.primes.emplace_back(d);
            rest /= d;
        }
        d += 2;
    }
    if (rest > 1 && rest.fits_ulong_p()) {
        unsigned long r = rest.get_ui();
        for (; d <= 1'000'000 && static_cast<unsigned long long>(d) * d <= r; d += 2)
            while (r % d == 0) {
                out.primes.emplace_back(d);
                r /= d;
            }
        rest = r;
        if (rest > 1 && static_cast<unsigned long long>(d) * d > rest.get_ui()) {
            out.primes.push_back(rest);  // no factor below its square root
            rest = 1;
        }
    }

    std::vector<BigInt> pending;
    if (rest > 1) pending.push_back(rest);
    while (!pending.empty()) {
        BigInt m = pending.back();
        pending.pop_back();
        if (is_prime(m)) {
            out.primes.push_back(m);
            continue;
        }
        BigInt d = pollard_brent(m, rho_budget);
        if (d == 0 || d == m) {
            out.cofactor *= m;
            continue;
        }
        pending.push_back(d);
        pending.push_back(m / d);
    }
    std::sort(out.primes.begin(), out.primes.end());
    return out;
}

std::vector<BigInt> divisors(const Factorization& f) {
    if (!f.complete())
        throw std::invalid_argument("divisor enumeration needs a complete factorization");
    std::map<BigInt, unsigned> exponents;
    for (const auto& p : f.primes) ++exponents[p];

    std::vector<BigInt> out{BigInt(1)};
    for (const auto& [p, e] : exponents) {
        const std::size_t base = out.size();
        BigInt pk(1);
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace assocpoly
