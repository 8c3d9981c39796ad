#include "qsv/identities.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace qsv {

VerifyReport compare_series(const std::string& id, const Series& lhs, const Series& rhs,
                            int order, std::string note) {
    VerifyReport r;
    r.id = id;
    r.order = order;
    r.note = std::move(note);
    if (lhs.order() < order || rhs.order() < order)
        throw BadParameter("compare_series: sides not built to the requested order");
    r.pass = true;
    for (int d = 0; d <= order; ++d) {
        if (lhs.coeff(d) != rhs.coeff(d)) {
            r.pass = false;
            r.first_mismatch = FirstMismatch{d, lhs.coeff(d), rhs.coeff(d)};
            break;
        }
    }
    if (r.pass) {
        r.coefficients.reserve(static_cast<size_t>(order) + 1);
        for (int d = 0; d <= order; ++d) r.coefficients.push_back(lhs.coeff(d));
    }
    return r;
}

namespace {

/// 1/(q;q)_n at the given order.
Series inv_poch_qq(long n, int order) {
    return invert(pochhammer(qpow(1), n, order));
}

} // namespace

Series rr_sum_side(int a, int order) {
    if (a != 0 && a != 1) throw BadParameter("rr_sum_side needs a in {0,1}");
    Series acc = Series::zero(order);
    for (long n = 0; n * (n + a) <= order; ++n) {
        long e = n * (n + a);
        Series term = inv_poch_qq(n, order - static_cast<int>(e));
        acc = add(acc, term.shifted(static_cast<int>(e)));
    }
    return acc;
}

Series rr_product_side(int a, int order) {
    ProductSpec s;
    s.factor(1, 4 - a, 5, -1).factor(1, 1 + a, 5, -1);
    return s.expand(order);
}

Series rr_alternating_side(int a, int order, std::optional<long> drop_m) {
    Series num = Series::zero(order);
    for (long m = -(order + 2); m <= order + 2; ++m) {
        if (drop_m && *drop_m == m) continue;
        long e1 = m * (10 * m + 1 + 2 * a);
        long e2 = (5 * m + 2 - a) * (2 * m + 1);
        if (e1 >= 0 && e1 <= order) num.set_coeff(static_cast<int>(e1), num.coeff(static_cast<int>(e1)) + 1);
        if (e2 >= 0 && e2 <= order) num.set_coeff(static_cast<int>(e2), num.coeff(static_cast<int>(e2)) - 1);
    }
    return mul(num, invert(pochhammer_infinite(qpow(1), order)));
}

namespace {

/// Sum of q^{e(n)} / prod_of_pochhammers for the regime identities.
struct RegimeSumSpec {
    long n_start = 0;
    // exponent e(n) = (c2 n^2 + c1 n)/den
    long c2 = 0, c1 = 0, den = 1;
    // (q;q)_{k1*n+k0} factor
    long k1 = 0, k0 = 0;
    // optional (q;q^2)_{j1*n+j0} factor
    bool has_odd = false;
    long j1 = 0, j0 = 0;
};

Series regime_sum(const RegimeSumSpec& s, int order) {
    Series acc = Series::zero(order);
    for (long n = s.n_start;; ++n) {
        long e = (s.c2 * n * n + s.c1 * n) / s.den;
        if (e > order) break;
        int rest = order - static_cast<int>(e);
        Series den = pochhammer(qpow(1), s.k1 * n + s.k0, rest);
        if (s.has_odd)
            den = mul(den, pochhammer(qpow(1), s.j1 * n + s.j0, rest, 2));
        acc = add(acc, invert(den).shifted(static_cast<int>(e)));
    }
    return acc;
}

Series inv_q_inf(int order) { return invert(pochhammer_infinite(qpow(1), order)); }

} // namespace

Series regime_sum_side(const std::string& id, int order) {
    // exponents: RI-1 n^2; RI-2 n(n+1); RIII-1 n(3n-1)/2; RIII-2 3n(n+1)/2;
    // RIV-1/RIV-2 n(n+1); RIV-3/RIV-4 n^2.
    if (id == "RI-1") return regime_sum(RegimeSumSpec{0, 1, 0, 1, 1, 0}, order);
    if (id == "RI-2") return regime_sum(RegimeSumSpec{0, 1, 1, 1, 1, 0}, order);
    if (id == "RIII-1") return regime_sum(RegimeSumSpec{0, 3, -1, 2, 1, 0, true, 1, 0}, order);
    if (id == "RIII-2") return regime_sum(RegimeSumSpec{0, 3, 3, 2, 1, 0, true, 1, 1}, order);
    if (id == "RIV-1") return regime_sum(RegimeSumSpec{0, 1, 1, 1, 2, 1}, order);
    if (id == "RIV-2") return regime_sum(RegimeSumSpec{0, 1, 1, 1, 2, 0}, order);
    if (id == "RIV-3") return regime_sum(RegimeSumSpec{0, 1, 0, 1, 2, 0}, order);
    if (id == "RIV-4") return regime_sum(RegimeSumSpec{1, 1, 0, 1, 2, -1}, order);
    throw UnknownIdentity(id);
}

Series regime_product_side(const std::string& id, int order) {
    auto Pi = [&](std::vector<int> exps, int base) {
        std::vector<Monomial> args;
        for (int e : exps) args.emplace_back(1, e);
        return product_Pi(args, base, order);
    };
    if (id == "RI-1") return invert(Pi({1, 4}, 5));
    if (id == "RI-2") return invert(Pi({2, 3}, 5));
    if (id == "RIII-1") return mul(Pi({4, 6, 10}, 10), inv_q_inf(order));
    if (id == "RIII-2") return mul(Pi({2, 8, 10}, 10), inv_q_inf(order));
    if (id == "RIV-1") return mul(mul(Pi({3, 7, 10}, 10), Pi({4, 16}, 20)), inv_q_inf(order));
    if (id == "RIV-2") return mul(mul(Pi({1, 9, 10}, 10), Pi({8, 12}, 20)), inv_q_inf(order));
    if (id == "RIV-3")
        return invert(mul(Pi({4, 16}, 20), pochhammer_infinite(qpow(1), order, 2)));
    if (id == "RIV-4")
        return invert(mul(Pi({8, 12}, 20), pochhammer_infinite(qpow(1), order, 2))).shifted(1).truncated(order);
    throw UnknownIdentity(id);
}

VerifyReport regime_identity(const std::string& id, int order) {
    return compare_series(id, regime_sum_side(id, order), regime_product_side(id, order), order);
}

RegimeII regimeII_from_string(const std::string& name) {
    if (name == "F1(0)") return RegimeII::F1_0;
    if (name == "F1(1)") return RegimeII::F1_1;
    if (name == "F2(0)") return RegimeII::F2_0;
    if (name == "F2(1)") return RegimeII::F2_1;
    if (name == "F3(0)") return RegimeII::F3_0;
    if (name == "F3(1)") return RegimeII::F3_1;
    throw UnknownIdentity(name);
}

Series regimeII_sum(RegimeII which, int order) {
    // Double sums sum_n sum_r q^{e(n)-r} / ((q^2;q^2)_r (q)_{3n-2r+delta}),
    // with e(n) quadratic and the r-range enforced by 3n-2r+delta >= 0.
    long n_start = 0;
    long c2 = 0, c1 = 0, c0 = 0, den = 2;  // e(n) = (c2 n^2 + c1 n)/den + c0
    long delta = 0;
    switch (which) {
        case RegimeII::F1_0: c2 = 3; c1 = 3; delta = 1; break;
        case RegimeII::F1_1: c2 = 3; c1 = 3; delta = 0; break;
        case RegimeII::F2_0: n_start = 1; c2 = 3; c1 = -1; delta = -1; break;
        case RegimeII::F2_1: c2 = 3; c1 = 5; c0 = 1; delta = 1; break;
        case RegimeII::F3_0: c2 = 3; c1 = 1; delta = 0; break;
        case RegimeII::F3_1: n_start = 1; c2 = 3; c1 = 1; delta = -1; break;
    }
    // The minimal exponent over r grows quadratically in n; stop once past it.
    long n_limit = std::max<long>(n_start, 2);
    while ((c2 * n_limit * n_limit + c1 * n_limit) / den + c0 - (3 * n_limit + delta) / 2 <= order)
        ++n_limit;
    Series acc = Series::zero(order);
    for (long n = n_start; n <= n_limit; ++n) {
        long e_n = (c2 * n * n + c1 * n) / den + c0;
        long r_max = (3 * n + delta) / 2;  // keeps the final pochhammer index >= 0
        for (long r = 0; r <= r_max; ++r) {
            long e = e_n - r;
            if (e < 0 || e > order) continue;
            int rest = order - static_cast<int>(e);
            Series den2 = mul(pochhammer(qpow(2), r, rest, 2),
                              pochhammer(qpow(1), 3 * n - 2 * r + delta, rest));
            acc = add(acc, invert(den2).shifted(static_cast<int>(e)));
        }
    }
    return acc;
}

Series regimeII_product(RegimeII which, int order) {
    auto Pi15 = [&](int a, int b, int c) {
        return product_Pi({Monomial(1, a), Monomial(1, b), Monomial(1, c)}, 15, order);
    };
    Series base;
    switch (which) {
        case RegimeII::F1_0:
            base = add(Pi15(4, 11, 15), Pi15(1, 14, 15).shifted(1).truncated(order));
            break;
        case RegimeII::F1_1:
            // the second product enters with a minus sign (the plus variant
            // already fails at degree one against the double sum)
            base = sub(Pi15(7, 8, 15), Pi15(2, 13, 15).shifted(1).truncated(order));
            break;
        case RegimeII::F2_0:
        case RegimeII::F3_0:
            base = Pi15(6, 9, 15);
            break;
        case RegimeII::F2_1:
        case RegimeII::F3_1:
            base = Pi15(3, 12, 15).shifted(1).truncated(order);
            break;
    }
    return mul(base, inv_q_inf(order));
}

const Series& gauss_binom_poly(int n, int m) {
    // Exact polynomials via the q-Pascal recurrence, cached for the
    // polynomial-family sweeps.
    static std::map<std::pair<int, int>, Series> cache;
    static std::mutex mu;
    static const Series zero = Series::zero(0);
    static const Series one = Series::one(0);
    if (m < 0 || n < 0 || m > n) return zero;
    if (m == 0 || m == n) return one;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    // [n m] = [n-1 m] + q^{n-m} [n-1 m-1], degree m(n-m).
    std::function<const Series&(int, int)> get = [&](int nn, int mm) -> const Series& {
        if (mm < 0 || nn < 0 || mm > nn) return zero;
        if (mm == 0 || mm == nn) return one;
        auto k2 = std::make_pair(nn, mm);
        auto found = cache.find(k2);
        if (found != cache.end()) return found->second;
        const Series& a = get(nn - 1, mm);
        const Series& b = get(nn - 1, mm - 1);
        int deg = mm * (nn - mm);
        Series r = a.padded(deg);
        Series shifted_b = b.padded(deg - (nn - mm)).shifted(nn - mm);
        r = add(r.padded(deg), shifted_b.padded(deg));
        auto [pos, ok] = cache.emplace(k2, std::move(r));
        return pos->second;
    };
    return get(n, m);
}

Series finite_poly_F(int L, int a) {
    if (L < 0 || (a != 0 && a != 1)) throw BadParameter("finite_poly_F needs L >= 0, a in {0,1}");
    int order = 0;
    for (int n = 0; 2 * n <= L - a; ++n)
        order = std::max(order, n * (n + a) + n * (L - n - a - n));
    Series acc = Series::zero(order);
    for (int n = 0; 2 * n <= L - a; ++n) {
        const Series& b = gauss_binom_poly(L - n - a, n);
        acc = add(acc, b.padded(order - n * (n + a)).shifted(n * (n + a)));
    }
    return acc;
}

Series finite_poly_B(int L, int a) {
    if (L < 0 || (a != 0 && a != 1)) throw BadParameter("finite_poly_B needs L >= 0, a in {0,1}");
    // Match F's order so the comparison window is the full polynomial.
    Series f_shape = finite_poly_F(L, a);
    int order = f_shape.order();
    long max_e = 0;
    for (long n = -(L / 5 + 2); n <= L / 5 + 2; ++n) {
        long mlow = (L - 5 * n - a) >= 0 ? (L - 5 * n - a) / 2 : -1;
        if (mlow < 0 || mlow > L) continue;
        max_e = std::max(max_e, n * (5 * n + 1 + 2 * a) / 2 + mlow * (L - mlow));
    }
    int work = static_cast<int>(std::max<long>(order, max_e));
    Series acc = Series::zero(work);
    for (long n = -(L / 5 + 2); n <= L / 5 + 2; ++n) {
        long num = L - 5 * n - a;
        long mlow = num >= 0 ? num / 2 : (num - 1) / 2;  // floor for negatives
        if (mlow < 0 || mlow > L) continue;
        long e = n * (5 * n + 1 + 2 * a) / 2;
        if (e < 0 || e > work) continue;
        const Series& b = gauss_binom_poly(L, static_cast<int>(mlow));
        Series term = b.padded(work - static_cast<int>(e)).shifted(static_cast<int>(e));
        acc = (n % 2 == 0) ? add(acc, term) : sub(acc, term);
    }
    return acc.truncated(order);
}

PolyVariant poly_variant_from_string(const std::string& id) {
    if (id == "POLY-720") return PolyVariant::P720;
    if (id == "POLY-721") return PolyVariant::P721;
    if (id == "POLY-723") return PolyVariant::P723;
    if (id == "POLY-724") return PolyVariant::P724;
    throw UnknownIdentity(id);
}

namespace {

int poly_order_bound(int N) { return N * N + 6 * N + 16; }

/// [top bottom] in base q^2 as an exact polynomial.
Series binom_q2_exact(int top, int bottom) {
    const Series& b = gauss_binom_poly(top, bottom);
    return substitute_power(b.padded(2 * b.order()), 2);
}

} // namespace

Series poly_lhs(PolyVariant v, int N) {
    int order = poly_order_bound(N);
    Series acc = Series::zero(order);
    switch (v) {
        case PolyVariant::P720:
        case PolyVariant::P721: {
            // Double sums q^{e(n)+r} [N-2n-2r(-1), n]_q [r+n, r]_{q^2};
            // e(n) = n(3n+1)/2 for the first family, 3n(n+1)/2 for the second
            // (the second exponent is the reading under which the family is an
            // identity for every N; see the companion infinite-series forms).
            int shift = v == PolyVariant::P721 ? 1 : 0;
            for (int n = 0; 3 * n + shift <= N; ++n) {
                long e = v == PolyVariant::P720 ? static_cast<long>(n) * (3 * n + 1) / 2
                                                : 3L * n * (n + 1) / 2;
                if (e > order) break;
                for (int r = 0; N - 2 * n - 2 * r - shift >= n; ++r) {
                    long ee = e + r;
                    if (ee > order) break;
                    const Series& b1 = gauss_binom_poly(N - 2 * n - 2 * r - shift, n);
                    Series term = poly_mul(b1, binom_q2_exact(r + n, r));
                    acc = add(acc, term.padded(order - static_cast<int>(ee))
                                       .shifted(static_cast<int>(ee)));
                }
            }
            return acc;
        }
        case PolyVariant::P723:
        case PolyVariant::P724: {
            int a = v == PolyVariant::P724 ? 1 : 0;
            for (int j = 0; 2 * j <= N; ++j) {
                long e = static_cast<long>(j) * (j + a);
                if (e > order) break;
                const Series& b = gauss_binom_poly(N - j, j);
                acc = add(acc, b.padded(order - static_cast<int>(e)).shifted(static_cast<int>(e)));
            }
            return acc;
        }
    }
    throw UnknownIdentity("poly variant");
}

Series poly_rhs(PolyVariant v, int N) {
    int order = poly_order_bound(N);
    Series acc = Series::zero(order);
    auto floor_div2 = [](long x) { return x >= 0 ? x / 2 : (x - 1) / 2; };
    for (long lam = -(N / 5 + 3); lam <= N / 5 + 3; ++lam) {
        long e = 0;
        long m = 0;
        int top = N;
        switch (v) {
            case PolyVariant::P720:
                e = lam * (5 * lam + 1);
                m = floor_div2(N - 5 * lam);
                break;
            case PolyVariant::P721:
                e = lam * (5 * lam - 3);
                m = floor_div2(N - 5 * lam) + 1;
                break;
            case PolyVariant::P723:
                e = lam * (5 * lam + 1) / 2;
                m = floor_div2(N - 5 * lam);
                break;
            case PolyVariant::P724:
                // The bilateral side lives one step up: top entry N+1.
                e = lam * (5 * lam - 3) / 2;
                m = floor_div2(N + 1 - 5 * lam) + 1;
                top = N + 1;
                break;
        }
        if (m < 0 || m > top) continue;
        if (e < 0 || e > order) continue;
        const Series& b = gauss_binom_poly(top, static_cast<int>(m));
        Series term = b.padded(order - static_cast<int>(e)).shifted(static_cast<int>(e));
        acc = (lam % 2 == 0) ? add(acc, term) : sub(acc, term);
    }
    return acc;
}

VerifyReport poly_identity(PolyVariant v, int N) {
    std::string id;
    switch (v) {
        case PolyVariant::P720: id = "POLY-720"; break;
        case PolyVariant::P721: id = "POLY-721"; break;
        case PolyVariant::P723: id = "POLY-723"; break;
        case PolyVariant::P724: id = "POLY-724"; break;
    }
    Series lhs = poly_lhs(v, N);
    Series rhs = poly_rhs(v, N);
    VerifyReport r = compare_series(id, lhs, rhs, lhs.order(), "N=" + std::to_string(N));
    r.coefficients.clear();  // full expansions are large; keep the report small
    return r;
}

Series reverse_polynomial(const Series& poly) {
    int deg = 0;
    for (int d = poly.order(); d >= 0; --d)
        if (poly.coeff(d) != 0) { deg = d; break; }
    Series r(deg);
    for (int d = 0; d <= deg; ++d) r.set_coeff(d, poly.coeff(deg - d));
    return r;
}

} // namespace qsv
