#include "assocpoly/roots.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "rational_poly.hpp"

namespace assocpoly {

namespace {

using detail::sturm_chain;

BigInt floor_rat(const BigRat& q) {
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

bool is_integer(const BigRat& q) { return q.get_den() == 1; }

// Real-root isolation state for one square-free polynomial.
struct Isolation {
    std::vector<BigInt> integer_roots;          // distinct
    std::vector<BigRat> rational_roots;         // non-integer exact hits
    std::vector<IsolatingInterval> irrational;  // exactly one root each
};

IntPoly deflate_rational(const IntPoly& p, const BigRat& root) {
    // exact division by (x - root) over the rationals
    detail::PolyQ linear(std::vector<BigRat>{BigRat(1), BigRat(-root)});
    return detail::primitive_int(detail::divexact(detail::PolyQ(p), linear));
}

Isolation isolate_real_roots(const IntPoly& sf) {
    Isolation iso;
    if (sf.degree() == 0) return iso;

    const auto chain = sturm_chain(sf);
    const BigInt bound = cauchy_root_bound(sf);
    const BigRat half = BigRat(1, 2);

    struct Interval {
        BigRat lo, hi;
        int count;
    };
    std::vector<Interval> work;
    {
        BigRat lo(-bound), hi(bound);
        int total = detail::count_roots(chain, lo, hi);
        if (total > 0) work.push_back({std::move(lo), std::move(hi), total});
    }

    while (!work.empty()) {
        Interval iv = std::move(work.back());
        work.pop_back();
        if (iv.count == 1 && iv.hi - iv.lo < half) {
            // at most one integer candidate t with lo < t <= hi
            BigInt t = floor_rat(iv.hi);
            if (BigRat(t) > iv.lo && evaluate(sf, t) == 0) {
                iso.integer_roots.push_back(std::move(t));
            } else {
                iso.irrational.push_back({std::move(iv.lo), std::move(iv.hi)});
            }
            continue;
        }
        BigRat mid((iv.lo + iv.hi) / 2);
        if (sign_at(sf, mid) == 0) {
            // exact rational hit: record, deflate, redo the rest cleanly
            Isolation rest = isolate_real_roots(deflate_rational(sf, mid));
            if (is_integer(mid))
                rest.integer_roots.push_back(BigInt(mid.get_num()));
            else
                rest.rational_roots.push_back(mid);
            return rest;
        }
        int left = detail::count_roots(chain, iv.lo, mid);
        int right = iv.count - left;
        if (left > 0) work.push_back({iv.lo, mid, left});
        if (right > 0) work.push_back({mid, iv.hi, right});
    }
    std::sort(iso.integer_roots.begin(), iso.integer_roots.end());
    std::sort(iso.rational_roots.begin(), iso.rational_roots.end());
    std::sort(iso.irrational.begin(), iso.irrational.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) {
                  return a.lo < b.lo;
              });
    return iso;
}

// Shrinks an isolating interval by sign bisection until hi - lo < width.
// Endpoint signs are nonzero and opposite by construction; an exact hit at
// a midpoint collapses the interval.
IsolatingInterval refine_interval(const IntPoly& sf, IsolatingInterval iv,
                                  const BigRat& width) {
    int lo_sign = sign_at(sf, iv.lo);
    while (iv.hi - iv.lo >= width) {
        BigRat mid((iv.lo + iv.hi) / 2);
        int s = sign_at(sf, mid);
        if (s == 0) {
            iv.lo = mid;
            iv.hi = mid;
            break;
        }
        if (s == lo_sign)
            iv.lo = std::move(mid);
        else
            iv.hi = std::move(mid);
    }
    return iv;
}

void require_nonzero(const IntPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("the zero polynomial has every root");
}

}  // namespace

std::vector<BigInt> integer_roots_sturm(const IntPoly& p) {
    require_nonzero(p);
    std::vector<BigInt> roots;
    for (const auto& [q, mult] : detail::square_free_decomposition(p)) {
        Isolation iso = isolate_real_roots(q);
        for (const auto& r : iso.integer_roots)
            for (int i = 0; i < mult; ++i) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<BigInt> integer_roots_sturm(const AssociatedPolynomial& p) {
    return integer_roots_sturm(p.poly());
}

DivisorRootResult integer_roots_divisor(const IntPoly& p, std::uint64_t rho_budget) {
    require_nonzero(p);
    DivisorRootResult out;
    IntPoly work = p;
    if (work.degree() == 0) return out;

    if (work.constant() == 0) {
        out.roots.emplace_back(0);
        while (work.degree() > 0 && work.constant() == 0)
            work = divide_linear(work, BigInt(0)).quotient;
    }
    if (work.degree() == 0) {
        out.constant_factorization = factor(abs(work.constant()));
        return out;
    }

    out.constant_factorization = factor(abs(work.constant()), rho_budget);
    out.complete = out.constant_factorization.complete();

    // Divisors of the factored part only; any hit is a genuine root either
    // way, completeness is what the flag reports.
    Factorization known = out.constant_factorization;
    known.cofactor = 1;
    for (const auto& d : divisors(known)) {
        if (evaluate(work, d) == 0) out.roots.push_back(d);
        BigInt neg = -d;
        if (evaluate(work, neg) == 0) out.roots.push_back(std::move(neg));
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
    return out;
}

DivisorRootResult integer_roots_divisor(const AssociatedPolynomial& p,
                                        std::uint64_t rho_budget) {
    return integer_roots_divisor(p.poly(), rho_budget);
}

namespace {

Cplx eval_cplx(const std::vector<Real>& coeffs, const Cplx& z) {
    Cplx acc;
    for (const auto& a : coeffs) acc = acc * z + Cplx(a);
    return acc;
}

// Aberth-Ehrlich simultaneous iteration on a square-free polynomial.
// Starting points sit on a perturbed circle of the Cauchy bound radius.
std::vector<Cplx> aberth_all_roots(const IntPoly& q, int precision_bits) {
    const int m = q.degree();
    std::vector<Real> coeffs;
    coeffs.reserve(q.c.size());
    for (const auto& a : q.c) coeffs.push_back(to_real(a));
    std::vector<Real> dcoeffs;
    for (int i = 0; i < m; ++i) dcoeffs.push_back(Real(coeffs[i] * (m - i)));

    const Real radius = to_real(cauchy_root_bound(q)) * Real("0.7");
    Real pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    std::vector<Cplx> z(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        Real angle = pi * Real(2 * i) / m + Real("0.41");
        Real r = radius * (Real(1) + Real(i) / Real(97 * m));
        z[static_cast<std::size_t>(i)] = {Real(r * cos(angle)), Real(r * sin(angle))};
    }

    Real eps = ldexp(Real(1), -(precision_bits + 16));
    const int max_iter = 2000;
    for (int iter = 0; iter < max_iter; ++iter) {
        Real worst(0);
        for (std::size_t i = 0; i < z.size(); ++i) {
            Cplx pv = eval_cplx(coeffs, z[i]);
            if (abs(pv) == 0) continue;
            Cplx dv = eval_cplx(dcoeffs, z[i]);
            Cplx newton = pv / dv;
            Cplx sum;
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j == i) continue;
                Cplx diff = z[i] - z[j];
                if (abs(diff) == 0) {
                    diff.re = eps;  // collision: nudge apart
                    diff.im = eps;
                }
                sum = sum + Cplx(Real(1)) / diff;
            }
            Cplx denom = Cplx(Real(1)) - newton * sum;
            Cplx step = newton / denom;
            z[i] = z[i] - step;
            Real rel = abs(step) / (Real(1) + abs(z[i]));
            if (rel > worst) worst = rel;
        }
        if (worst < eps) return z;
    }
    throw NumericFailure("root iteration did not converge", z);
}

struct ComplexSelection {
    std::vector<ComplexPairApprox> pairs;
};

// Picks the 2k entries of largest |im| as the complex roots (k known
// exactly from the Sturm count), demands clear separation from the rest,
// matches conjugates and symmetrizes them.
ComplexSelection select_complex_pairs(const std::vector<Cplx>& roots, int k,
                                      const IntPoly& input, int precision_bits) {
    ComplexSelection sel;
    if (k == 0) return sel;
    std::vector<std::size_t> order(roots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return abs(roots[a].im) > abs(roots[b].im);
    });
    const std::size_t take = static_cast<std::size_t>(2 * k);
    if (take < roots.size()) {
        Real smallest_taken = abs(roots[order[take - 1]].im);
        Real largest_left = abs(roots[order[take]].im);
        if (smallest_taken < largest_left * 4)
            throw NumericFailure("cannot separate real and complex roots", roots);
    }

    std::vector<Cplx> pos, neg;
    for (std::size_t i = 0; i < take; ++i) {
        const Cplx& r = roots[order[i]];
        (r.im > 0 ? pos : neg).push_back(r);
    }
    if (pos.size() != neg.size())
        throw NumericFailure("complex roots do not split into conjugates", roots);
    auto by_re = [](const Cplx& a, const Cplx& b) {
        return a.re < b.re || (a.re == b.re && abs(a.im) < abs(b.im));
    };
    std::sort(pos.begin(), pos.end(), by_re);
    std::sort(neg.begin(), neg.end(), by_re);

    std::vector<Real> in_coeffs;
    for (const auto& a : input.c) in_coeffs.push_back(to_real(a));
    for (std::size_t i = 0; i < pos.size(); ++i) {
        ComplexPairApprox p;
        p.re = (pos[i].re + neg[i].re) / 2;
        p.im = (pos[i].im - neg[i].im) / 2;
        p.residual = abs(eval_cplx(in_coeffs, Cplx(p.re, p.im)));
        Real mismatch = abs(Cplx(Real(pos[i].re - neg[i].re),
                                 Real(pos[i].im + neg[i].im)));
        if (mismatch > ldexp(Real(1), -(precision_bits / 2)) * (Real(1) + abs(pos[i])))
            throw NumericFailure("conjugate mismatch", roots);
        sel.pairs.push_back(std::move(p));
    }
    return sel;
}

}  // namespace

RootSet all_roots_numeric(const IntPoly& p, int precision_bits) {
    if (precision_bits < 64)
        throw std::invalid_argument("precision must be at least 64 bits");
    require_nonzero(p);
    PrecisionGuard guard(precision_bits + 32);

    RootSet rs;
    rs.degree = p.degree();
    rs.precision_bits = precision_bits;
    rs.sym_rel_error = Real(0);

    const BigRat iso_width(BigInt(1), BigInt(1) << 40);
    const BigRat value_width(BigInt(1), BigInt(1) << (precision_bits + 8));

    for (const auto& [q, mult] : detail::square_free_decomposition(p)) {
        Isolation iso = isolate_real_roots(q);
        for (const auto& r : iso.integer_roots)
            for (int i = 0; i < mult; ++i) rs.integer_roots.push_back(r);
        for (const auto& r : iso.rational_roots) {
            RealRootApprox a{{r, r}, to_real(r)};
            for (int i = 0; i < mult; ++i) rs.real_irrational.push_back(a);
        }
        for (const auto& iv : iso.irrational) {
            IsolatingInterval spec_iv = refine_interval(q, iv, iso_width);
            IsolatingInterval tight = refine_interval(q, spec_iv, value_width);
            Real approx = to_real(BigRat((tight.lo + tight.hi) / 2));
            RealRootApprox a{std::move(spec_iv), std::move(approx)};
            for (int i = 0; i < mult; ++i) rs.real_irrational.push_back(a);
        }
        const int reals = static_cast<int>(iso.integer_roots.size() +
                                           iso.rational_roots.size() +
                                           iso.irrational.size());
        const int pair_count = (q.degree() - reals) / 2;
        if (pair_count > 0) {
            auto roots = aberth_all_roots(q, precision_bits);
            auto sel = select_complex_pairs(roots, pair_count, p, precision_bits);
            for (auto& pair : sel.pairs)
                for (int i = 0; i < mult; ++i) rs.complex_pairs.push_back(pair);
        }
    }

    std::sort(rs.integer_roots.begin(), rs.integer_roots.end());
    std::sort(rs.real_irrational.begin(), rs.real_irrational.end(),
              [](const RealRootApprox& a, const RealRootApprox& b) {
                  return a.interval.lo < b.interval.lo;
              });
    std::sort(rs.complex_pairs.begin(), rs.complex_pairs.end(),
              [](const ComplexPairApprox& a, const ComplexPairApprox& b) {
                  return a.re < b.re || (a.re == b.re && a.im < b.im);
              });

    // cross-check: elementary symmetric functions must reproduce the
    // coefficients of the (normalized) input
    const auto all = numeric_roots(rs);
    std::vector<Cplx> esym(all.size() + 1);
    esym[0] = Cplx(Real(1));
    std::size_t used = 0;
    for (const auto& root : all) {
        ++used;
        for (std::size_t k = used; k >= 1; --k)
            esym[k] = esym[k] + root * esym[k - 1];
    }
    const Real lead = to_real(p.leading());
    const Real tol = ldexp(Real(1), -(precision_bits / 2));
    Real worst(0);
    for (std::size_t k = 1; k < esym.size(); ++k) {
        Real target_re = to_real(p.c[k]) / lead;
        if (k % 2 == 1) target_re = -target_re;
        Real err = abs(Cplx(Real(esym[k].re - target_re), esym[k].im));
        Real scale = abs(target_re);
        if (scale < 1) scale = 1;
        Real rel = err / scale;
        if (rel > worst) worst = rel;
    }
    rs.sym_rel_error = worst;
    if (worst > tol)
        throw NumericFailure("symmetric-function reconstruction outside tolerance", all);
    return rs;
}

RootSet all_roots_numeric(const AssociatedPolynomial& p, int precision_bits) {
    return all_roots_numeric(p.poly(), precision_bits);
}

std::vector<Cplx> numeric_roots(const RootSet& r) {
    std::vector<Cplx> out;
    out.reserve(static_cast<std::size_t>(r.degree));
    for (const auto& v : r.integer_roots) out.emplace_back(to_real(v));
    for (const auto& v : r.real_irrational) out.emplace_back(v.approx);
    for (const auto& v : r.complex_pairs) {
        out.push_back({v.re, v.im});
        out.push_back({v.re, Real(-v.im)});
    }
    return out;
}

std::size_t default_excluded_root(const RootSet& r) {
    if (!r.integer_roots.empty()) return 0;
    if (r.real_irrational.empty())
        throw std::invalid_argument("no real root available for exclusion");
    std::size_t best = 0;
    Real best_mag(-1);
    for (std::size_t i = 0; i < r.real_irrational.size(); ++i) {
        Real mag = abs(Real(r.real_irrational[i].approx));
        if (mag > best_mag) {
            best_mag = mag;
            best = i;
        }
    }
    return r.integer_roots.size() + best;
}

namespace {

struct PairMetrics {
    Cplx sum, product;
    Real sum_dist, product_dist;  // distance to nearest real integer
    bool good = false;
};

PairMetrics pair_metrics(const Cplx& a, const Cplx& b, double tolerance) {
    PairMetrics m;
    m.sum = a + b;
    m.product = a * b;
    Real tol(tolerance);
    m.sum_dist = int_distance(m.sum.re) + abs(m.sum.im);
    m.product_dist = int_distance(m.product.re) + abs(m.product.im);
    m.good = int_distance(m.sum.re) < tol && abs(m.sum.im) < tol &&
             int_distance(m.product.re) < tol && abs(m.product.im) < tol;
    return m;
}

// Enumerates perfect matchings of `remaining` (even size), calling visit
// with pairs as (i, j) index lists. Deterministic order.
void enumerate_matchings(std::vector<std::size_t>& remaining,
                         std::vector<std::pair<std::size_t, std::size_t>>& current,
                         const std::function<void(const std::vector<std::pair<std::size_t, std::size_t>>&)>& visit) {
    if (remaining.empty()) {
        visit(current);
        return;
    }
    std::size_t first = remaining.front();
    for (std::size_t j = 1; j < remaining.size(); ++j) {
        std::size_t partner = remaining[j];
        std::vector<std::size_t> rest;
        rest.reserve(remaining.size() - 2);
        for (std::size_t k = 1; k < remaining.size(); ++k)
            if (k != j) rest.push_back(remaining[k]);
        current.emplace_back(first, partner);
        enumerate_matchings(rest, current, visit);
        current.pop_back();
    }
}

}  // namespace

PairClassification classify_pairs(const RootSet& r,
                                  std::optional<BigInt> trivial_root,
                                  double tolerance) {
    PairClassification out;
    out.tolerance = tolerance;

    const auto all = numeric_roots(r);
    enum Kind { kInteger, kReal, kComplex };
    std::vector<Kind> kind;
    for (std::size_t i = 0; i < r.integer_roots.size(); ++i) kind.push_back(kInteger);
    for (std::size_t i = 0; i < r.real_irrational.size(); ++i) kind.push_back(kReal);
    for (std::size_t i = 0; i < 2 * r.complex_pairs.size(); ++i) kind.push_back(kComplex);

    std::vector<std::size_t> active;
    bool excluded = false;
    bool exclusion_missing = false;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (!excluded && trivial_root && kind[i] == kInteger &&
            r.integer_roots[i] == *trivial_root) {
            excluded = true;
            continue;
        }
        active.push_back(i);
    }
    if (trivial_root && !excluded) exclusion_missing = true;

    const std::size_t m = active.size();
    if (m == 0) {
        out.verdict = PairVerdict::ConsistentWithConjugateModel;
        return out;
    }

    // pair metrics for every unordered pair of active roots
    std::vector<std::vector<PairMetrics>> metrics(m, std::vector<PairMetrics>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            metrics[i][j] = pair_metrics(all[active[i]], all[active[j]], tolerance);

    std::vector<std::pair<std::size_t, std::size_t>> best_pairs;
    std::vector<std::size_t> best_leftover;
    long best_good = -1;

    auto consider = [&](const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                        const std::vector<std::size_t>& leftover) {
        long good = 0;
        for (const auto& [i, j] : pairs)
            if (metrics[i][j].good) ++good;
        if (good > best_good) {
            best_good = good;
            best_pairs = pairs;
            best_leftover = leftover;
        }
    };

    constexpr std::size_t kExhaustiveLimit = 13;
    std::vector<std::size_t> local(m);
    for (std::size_t i = 0; i < m; ++i) local[i] = i;

    if (m <= kExhaustiveLimit) {
        std::vector<std::pair<std::size_t, std::size_t>> current;
        if (m % 2 == 0) {
            enumerate_matchings(local, current,
                                [&](const auto& p) { consider(p, {}); });
        } else {
            for (std::size_t skip = 0; skip < m; ++skip) {
                std::vector<std::size_t> rest;
                for (std::size_t i = 0; i < m; ++i)
                    if (i != skip) rest.push_back(i);
                enumerate_matchings(rest, current, [&](const auto& p) {
                    consider(p, {skip});
                });
            }
        }
    } else {
        // greedy: best-scoring disjoint pairs first
        struct Cand {
            Real score;
            std::size_t i, j;
        };
        std::vector<Cand> cands;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                cands.push_back({Real(metrics[i][j].sum_dist + metrics[i][j].product_dist), i, j});
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.score != b.score) return a.score < b.score;
            return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        });
        std::vector<bool> used(m, false);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (const auto& c : cands) {
            if (used[c.i] || used[c.j]) continue;
            used[c.i] = used[c.j] = true;
            pairs.emplace_back(c.i, c.j);
        }
        std::vector<std::size_t> leftover;
        for (std::size_t i = 0; i < m; ++i)
            if (!used[i]) leftover.push_back(i);
        consider(pairs, leftover);
    }

    bool all_good = best_leftover.empty();
    nlohmann::json bad = nlohmann::json::array();
    for (const auto& [i, j] : best_pairs) {
        const PairMetrics& pm = metrics[i][j];
        PairEntry entry;
        entry.indices = {active[i], active[j]};
        entry.sum_re = pm.sum.re;
        entry.sum_im = pm.sum.im;
        entry.product_re = pm.product.re;
        entry.product_im = pm.product.im;
        entry.sum_is_integer = int_distance(pm.sum.re) < Real(tolerance) &&
                               abs(pm.sum.im) < Real(tolerance);
        entry.product_is_integer = int_distance(pm.product.re) < Real(tolerance) &&
                                   abs(pm.product.im) < Real(tolerance);
        entry.sum_int = nearest_int(pm.sum.re);
        entry.product_int = nearest_int(pm.product.re);
        if (pm.good) {
            const bool complex_pair =
                kind[active[i]] == kComplex && kind[active[j]] == kComplex;
            entry.model = complex_pair ? PairModel::ComplexConjugate
                                       : PairModel::QuadraticConjugate;
        } else {
            entry.model = PairModel::Unpaired;
            all_good = false;
            bad.push_back({{"indices", {active[i], active[j]}},
                           {"sum", to_decimal_string(pm.sum.re)},
                           {"sum_imag", to_decimal_string(pm.sum.im)},
                           {"sum_int_distance", to_decimal_string(pm.sum_dist)},
                           {"product", to_decimal_string(pm.product.re)},
                           {"product_imag", to_decimal_string(pm.product.im)},
                           {"product_int_distance", to_decimal_string(pm.product_dist)}});
        }
        out.pairing.push_back(std::move(entry));
    }
    nlohmann::json unpaired = nlohmann::json::array();
    for (std::size_t i : best_leftover) {
        PairEntry entry;
        entry.indices = {active[i]};
        entry.model = PairModel::Unpaired;
        entry.sum_re = all[active[i]].re;
        entry.sum_im = all[active[i]].im;
        entry.product_re = Real(0);
        entry.product_im = Real(0);
        entry.sum_int = nearest_int(all[active[i]].re);
        entry.product_int = 0;
        unpaired.push_back({{"index", active[i]},
                            {"value_re", to_decimal_string(all[active[i]].re)},
                            {"value_im", to_decimal_string(all[active[i]].im)}});
        out.pairing.push_back(std::move(entry));
    }

    out.verdict = all_good ? PairVerdict::ConsistentWithConjugateModel
                           : PairVerdict::Violation;
    if (out.verdict == PairVerdict::Violation || exclusion_missing) {
        out.witness = {{"claim", "pairs"},
                       {"tolerance", tolerance},
                       {"good_pairs", best_good < 0 ? 0 : best_good},
                       {"pair_count", best_pairs.size()},
                       {"bad_pairs", bad},
                       {"unpaired", unpaired}};
        if (exclusion_missing) out.witness["trivial_root_not_found"] = true;
    }
    return out;
}

nlohmann::json to_json(const RootSet& r) {
    nlohmann::json ints = nlohmann::json::array();
    for (const auto& v : r.integer_roots) ints.push_back(v.get_str());
    nlohmann::json reals = nlohmann::json::array();
    for (const auto& v : r.real_irrational)
        reals.push_back({{"interval", {v.interval.lo.get_str(), v.interval.hi.get_str()}},
                         {"approx", to_decimal_string(v.approx)}});
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& v : r.complex_pairs)
        pairs.push_back({{"re", to_decimal_string(v.re)},
                         {"im", to_decimal_string(v.im)},
                         {"residual", to_decimal_string(v.residual)}});
    return {{"degree", r.degree},
            {"precision_bits", r.precision_bits},
            {"integer_roots", ints},
            {"real_irrational", reals},
            {"complex_pairs", pairs},
            {"sym_rel_error", to_decimal_string(r.sym_rel_error)}};
}

std::string to_string(PairModel m) {
    switch (m) {
        case PairModel::QuadraticConjugate: return "quadratic-conjugate";
        case PairModel::ComplexConjugate: return "complex-conjugate";
        case PairModel::Unpaired: return "unpaired";
    }
    return "unpaired";
}

std::string to_string(PairVerdict v) {
    return v == PairVerdict::ConsistentWithConjugateModel
               ? "consistent-with-conjugate-model"
               : "violation";
}

nlohmann::json to_json(const PairClassification& c) {
    nlohmann::json pairing = nlohmann::json::array();
    for (const auto& e : c.pairing) {
        nlohmann::json entry = {{"indices", e.indices},
                                {"model", to_string(e.model)},
                                {"sum_re", to_decimal_string(e.sum_re)},
                                {"sum_im", to_decimal_string(e.sum_im)},
                                {"product_re", to_decimal_string(e.product_re)},
                                {"product_im", to_decimal_string(e.product_im)},
                                {"sum_is_integer", e.sum_is_integer},
                                {"product_is_integer", e.product_is_integer},
                                {"sum_int", e.sum_int.get_str()},
                                {"product_int", e.product_int.get_str()}};
        pairing.push_back(std::move(entry));
    }
    nlohmann::json out = {{"verdict", to_string(c.verdict)},
                          {"tolerance", c.tolerance},
                          {"pairing", pairing}};
    if (!c.witness.is_null()) out["witness"] = c.witness;
    return out;
}

}  // namespace assocpoly
