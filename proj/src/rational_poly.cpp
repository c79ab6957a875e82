#include "rational_poly.hpp"

#include <stdexcept>

namespace assocpoly::detail {

PolyQ::PolyQ(std::vector<BigRat> coeffs) : c(std::move(coeffs)) {
    std::size_t lead = 0;
    while (lead + 1 < c.size() && c[lead] == 0) ++lead;
    if (lead > 0) c.erase(c.begin(), c.begin() + static_cast<long>(lead));
    if (c.empty()) c.assign(1, BigRat(0));
}

PolyQ::PolyQ(const IntPoly& p) {
    c.reserve(p.c.size());
    for (const auto& a : p.c) c.emplace_back(a);
}

PolyQ derivative(const PolyQ& p) {
    const int d = p.degree();
    if (d == 0) return PolyQ{};
    std::vector<BigRat> out(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        out[static_cast<std::size_t>(i)] = p.c[static_cast<std::size_t>(i)] * (d - i);
    return PolyQ(std::move(out));
}

PolyQ to_monic(const PolyQ& p) {
    if (p.is_zero() || p.c[0] == 1) return p;
    std::vector<BigRat> out;
    out.reserve(p.c.size());
    for (const auto& a : p.c) out.push_back(BigRat(a / p.c[0]));
    return PolyQ(std::move(out));
}

PolyQ rem(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<BigRat> r = a.c;
    const int db = b.degree();
    while (static_cast<int>(r.size()) - 1 >= db && !(r.size() == 1 && r[0] == 0)) {
        BigRat q(r[0] / b.c[0]);
        for (int i = 0; i <= db; ++i)
            r[static_cast<std::size_t>(i)] -= q * b.c[static_cast<std::size_t>(i)];
        // r[0] is now exactly zero
        r.erase(r.begin());
        if (r.empty()) r.assign(1, BigRat(0));
        while (r.size() > 1 && r[0] == 0) r.erase(r.begin());
    }
    return PolyQ(std::move(r));
}

PolyQ divexact(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    const int da = a.degree(), db = b.degree();
    if (a.is_zero()) return PolyQ{};
    if (da < db) throw std::logic_error("inexact polynomial division");
    std::vector<BigRat> r = a.c;
    std::vector<BigRat> q(static_cast<std::size_t>(da - db) + 1);
    for (int k = 0; k <= da - db; ++k) {
        BigRat qk(r[static_cast<std::size_t>(k)] / b.c[0]);
        q[static_cast<std::size_t>(k)] = qk;
        for (int i = 0; i <= db; ++i)
            r[static_cast<std::size_t>(k + i)] -= qk * b.c[static_cast<std::size_t>(i)];
    }
    for (const auto& v : r)
        if (v != 0) throw std::logic_error("inexact polynomial division");
    return PolyQ(std::move(q));
}

PolyQ gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return to_monic(a);
}

IntPoly primitive_int(const PolyQ& p) {
    BigInt den_lcm = 1;
    for (const auto& a : p.c)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den().get_mpz_t());
    std::vector<BigInt> ints;
    ints.reserve(p.c.size());
    for (const auto& a : p.c) {
        BigInt v = a.get_num() * (den_lcm / a.get_den());
        ints.push_back(std::move(v));
    }
    return primitive_part(IntPoly(std::move(ints)));
}

namespace {

PolyQ sub(const PolyQ& a, const PolyQ& b) {
    const std::size_t m = std::max(a.c.size(), b.c.size());
    std::vector<BigRat> s(m, BigRat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) s[m - a.c.size() + i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) s[m - b.c.size() + i] -= b.c[i];
    return PolyQ(std::move(s));
}

}  // namespace

std::vector<std::pair<IntPoly, int>> square_free_decomposition(const IntPoly& p) {
    std::vector<std::pair<IntPoly, int>> out;
    if (p.degree() == 0) return out;

    // Yun's algorithm over the monic form
    PolyQ f = to_monic(PolyQ(p));
    PolyQ fp = derivative(f);
    PolyQ g = gcd(f, fp);
    if (g.degree() == 0) {
        out.emplace_back(primitive_int(f), 1);
        return out;
    }
    PolyQ w = divexact(f, g);
    PolyQ z = sub(divexact(fp, g), derivative(w));
    int mult = 1;
    while (w.degree() > 0) {
        PolyQ a = gcd(w, z);
        if (a.degree() > 0) out.emplace_back(primitive_int(a), mult);
        w = divexact(w, a);
        z = sub(divexact(z, a), derivative(w));
        ++mult;
    }
    return out;
}

IntPoly square_free_part(const IntPoly& p) {
    auto factors = square_free_decomposition(p);
    PolyQ acc(std::vector<BigRat>{BigRat(1)});
    for (const auto& [q, m] : factors) {
        PolyQ f(q);
        std::vector<BigRat> prod(acc.c.size() + f.c.size() - 1, BigRat(0));
        for (std::size_t i = 0; i < acc.c.size(); ++i)
            for (std::size_t j = 0; j < f.c.size(); ++j)
                prod[i + j] += acc.c[i] * f.c[j];
        acc = PolyQ(std::move(prod));
    }
    return primitive_int(acc);
}

std::vector<IntPoly> sturm_chain(const IntPoly& square_free) {
    std::vector<IntPoly> chain;
    chain.push_back(primitive_part(square_free));
    if (square_free.degree() == 0) return chain;
    chain.push_back(primitive_part(derivative(square_free)));
    while (chain.back().degree() > 0) {
        PolyQ r = rem(PolyQ(chain[chain.size() - 2]), PolyQ(chain.back()));
        if (r.is_zero()) break;  // only for non-square-free input
        std::vector<BigRat> neg;
        neg.reserve(r.c.size());
        for (const auto& a : r.c) neg.push_back(BigRat(-a));
        chain.push_back(primitive_int(PolyQ(std::move(neg))));
    }
    return chain;
}

int sign_variations(const std::vector<IntPoly>& chain, const BigRat& x) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : chain) {
        const int s = sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int count_roots(const std::vector<IntPoly>& chain, const BigRat& lo, const BigRat& hi) {
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

}  // namespace assocpoly::detail
