#include "assocpoly/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace assocpoly {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) {
    std::size_t lead = 0;
    while (lead + 1 < c.size() && c[lead] == 0) ++lead;
    if (lead > 0) c.erase(c.begin(), c.begin() + static_cast<long>(lead));
    if (c.empty()) c.assign(1, BigInt(0));
}

std::string IntPoly::to_string() const {
    std::ostringstream os;
    const int d = degree();
    bool first = true;
    for (int i = 0; i <= d; ++i) {
        const BigInt& a = c[static_cast<std::size_t>(i)];
        if (a == 0 && d > 0) continue;
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        first = false;
        BigInt mag = abs(a);
        const int e = d - i;
        if (mag != 1 || e == 0) os << mag.get_str();
        if (e > 0) os << "x";
        if (e > 1) os << "^" << e;
    }
    if (first) os << "0";
    return os.str();
}

BigInt evaluate(const IntPoly& p, const BigInt& x) {
    BigInt acc = 0;
    for (const auto& a : p.c) acc = acc * x + a;
    return acc;
}

IntPoly derivative(const IntPoly& p) {
    const int d = p.degree();
    if (d == 0) return IntPoly{};
    std::vector<BigInt> out(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        out[static_cast<std::size_t>(i)] = p.c[static_cast<std::size_t>(i)] * (d - i);
    return IntPoly(std::move(out));
}

int sign_at(const IntPoly& p, const BigRat& x) {
    // q^deg * p(num/den), evaluated in integers; den > 0 keeps the sign
    const BigInt& num = x.get_num();
    const BigInt& den = x.get_den();
    BigInt acc = 0;
    BigInt dpow = 1;
    for (const auto& a : p.c) {
        acc = acc * num + a * dpow;
        dpow *= den;
    }
    return sgn(acc);
}

BigInt content(const IntPoly& p) {
    BigInt g = 0;
    for (const auto& a : p.c) g = gcd(g, a);
    return g == 0 ? BigInt(1) : g;
}

IntPoly primitive_part(const IntPoly& p) {
    const BigInt g = content(p);
    if (g == 1) return p;
    std::vector<BigInt> out;
    out.reserve(p.c.size());
    for (const auto& a : p.c) out.push_back(a / g);
    return IntPoly(std::move(out));
}

LinearDivision divide_linear(const IntPoly& p, const BigInt& root) {
    LinearDivision res;
    std::vector<BigInt> q;
    q.reserve(p.c.size());
    BigInt acc = 0;
    for (std::size_t i = 0; i + 1 < p.c.size(); ++i) {
        acc = acc * root + p.c[i];
        q.push_back(acc);
    }
    res.remainder = acc * root + p.c.back();
    res.exact = res.remainder == 0;
    res.quotient = q.empty() ? IntPoly{} : IntPoly(std::move(q));
    return res;
}

BigInt cauchy_root_bound(const IntPoly& p) {
    BigInt lead = abs(p.leading());
    BigInt maxabs = 0;
    for (std::size_t i = 1; i < p.c.size(); ++i) {
        BigInt a = abs(p.c[i]);
        if (a > maxabs) maxabs = a;
    }
    // strictly larger than 1 + max|c_i|/|c_0|
    return 2 + maxabs / lead;
}

bool is_odd_prime(long n) {
    if (n < 3 || n % 2 == 0) return false;
    return is_prime(BigInt(n));
}

AssociatedPolynomial construct(const OffsetPair& pair, int n) {
    if (!is_odd_prime(n)) throw std::invalid_argument("n must be an odd prime");
    // revalidate: callers may have built the pair by hand
    make_offset_pair(pair.d, pair.e, pair.variant);

    const bool alternating = pair.variant == Variant::Alternating;
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
    coeffs[0] = 1;
    BigInt dk = 1, ek = 1;
    for (int k = 1; k <= n; ++k) {
        dk *= pair.d;
        ek *= pair.e;
        BigInt term = binomial(n, k) * (dk + ek);
        if (alternating && (k % 2 == 1)) term = -term;
        coeffs[static_cast<std::size_t>(k)] = term;
    }
    return AssociatedPolynomial{n, std::move(coeffs), pair};
}

BigInt evaluate(const AssociatedPolynomial& p, const BigInt& x) {
    return evaluate(p.poly(), x);
}

nlohmann::json to_json(const AssociatedPolynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& a : p.coeffs) coeffs.push_back(a.get_str());
    return nlohmann::json{{"n", p.n},
                          {"variant", to_string(p.source.variant)},
                          {"d", p.source.d.get_str()},
                          {"e", p.source.e.get_str()},
                          {"coefficients", coeffs}};
}

AssociatedPolynomial polynomial_from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    const Variant variant = variant_from_string(j.at("variant").get<std::string>());
    const BigInt d(j.at("d").get<std::string>());
    const BigInt e(j.at("e").get<std::string>());
    AssociatedPolynomial p = construct(make_offset_pair(d, e, variant), n);

    const auto& coeffs = j.at("coefficients");
    if (coeffs.size() != p.coeffs.size())
        throw std::invalid_argument("coefficient list does not match degree");
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        if (BigInt(coeffs[i].get<std::string>()) != p.coeffs[i])
            throw std::invalid_argument("coefficients do not match (d, e, n)");
    return p;
}

}  // namespace assocpoly
