#include "qsv/qfunctions.hpp"

#include <algorithm>

namespace qsv {

Series pochhammer(const Monomial& a, long n, int order, int base) {
    if (n < 0) throw BadParameter("pochhammer needs n >= 0");
    if (base < 1) throw BadParameter("pochhammer needs base >= 1");
    Series r = Series::one(order);
    for (long j = 0; j < n; ++j) {
        long deg = a.exponent + base * j;
        if (deg > order) break;  // every further factor is 1 to this order
        if (deg == 0) {
            r = r.scaled(1 - a.c);
        } else {
            r = mul(r, binomial_power(a.c, static_cast<int>(deg), 1, order));
        }
    }
    return r;
}

Series pochhammer_infinite(const Monomial& a, int order, int base) {
    if (a.exponent == 0)
        throw DivergentProduct("(a; q)_inf needs an argument of positive degree");
    long n = order / base + 2;  // past this the factors are 1 to `order`
    return pochhammer(a, n, order, base);
}

Series gauss_binom(long n, long m, int order, int base) {
    if (m < 0 || n < 0 || m > n) return Series::zero(order);
    Monomial qb(1, base);
    Series num = pochhammer(qb, n, order, base);
    Series den = mul(pochhammer(qb, m, order, base), pochhammer(qb, n - m, order, base));
    return mul(num, invert(den));
}

Series gauss_binom_extended(long top, long m, int order) {
    if (m < 0) return Series::zero(order);
    if (m == 0) return Series::one(order);  // empty product, any integer top
    long n = top - m;
    if (n < 0) return Series::zero(order);  // a (1 - q^0) factor, or beyond it
    if (n + 1 > order) {
        // (q^{n+1}; q)_m is 1 to this order; only 1/(q)_m remains.
        return invert(pochhammer(qpow(1), m, order));
    }
    Series num = pochhammer(Monomial(1, static_cast<int>(n) + 1), m, order);
    return mul(num, invert(pochhammer(qpow(1), m, order)));
}

Series product_Pi(const std::vector<Monomial>& args, int base, int order) {
    Series r = Series::one(order);
    for (const auto& a : args) r = mul(r, pochhammer_infinite(a, order, base));
    return r;
}

ProductSpec named_product(NamedProductId id) {
    ProductSpec s;
    switch (id) {
        case NamedProductId::G: s.factor(1, 1, 5, -1).factor(1, 4, 5, -1); break;
        case NamedProductId::H: s.factor(1, 2, 5, -1).factor(1, 3, 5, -1); break;
        case NamedProductId::P: s.factor(1, 1, 2, 1); break;
        case NamedProductId::Q: s.factor(1, 1, 1, 1); break;
    }
    return s;
}

Series expand_named(NamedProductId id, int order) { return named_product(id).expand(order); }

namespace {

struct PqFactor {
    Rat c;
    int p_exp;
    int q_exp;
    long degree() const { return static_cast<long>(p_exp) + q_exp; }
};

} // namespace

MultiSeries theta_pq(const PqMonomial& z, ThetaBase base, long cap) {
    if (z.c == 0) throw BadParameter("theta argument must be a nonzero monomial");
    int bp = base == ThetaBase::p ? 1 : 0;
    int bq = base == ThetaBase::p ? 0 : 1;
    Rat zc_inv = 1 / z.c;

    auto first_family = [&](int n) { return PqFactor{z.c, z.p_exp + n * bp, z.q_exp + n * bq}; };
    auto second_family = [&](int n) {
        return PqFactor{zc_inv, (n + 1) * bp - z.p_exp, (n + 1) * bq - z.q_exp};
    };

    // Factor degrees are increasing in n, so the nonpositive-degree prefix of
    // each family is finite; its degree sum fixes the needed internal cap.
    long anomaly = 0;
    for (int n = 0; first_family(n).degree() <= 0; ++n) anomaly += first_family(n).degree();
    for (int n = 0; second_family(n).degree() <= 0; ++n) anomaly += second_family(n).degree();
    long bound = cap - anomaly;

    std::vector<PqFactor> factors;
    for (int n = 0; first_family(n).degree() <= bound; ++n) factors.push_back(first_family(n));
    for (int n = 0; second_family(n).degree() <= bound; ++n) factors.push_back(second_family(n));

    // A vanishing factor makes theta exactly zero.
    for (const auto& f : factors)
        if (f.p_exp == 0 && f.q_exp == 0 && f.c == 1)
            return MultiSeries(2, cap);

    MultiSeries acc = MultiSeries::constant(2, 1, cap - anomaly);
    for (const auto& f : factors) {
        MultiSeries bin(2, MultiSeries::exact_cap);
        bin.add_term({0, 0}, 1);
        bin.add_term({f.p_exp, f.q_exp}, -f.c);
        acc = multi_mul(acc, bin);
    }
    return acc.truncated(cap);
}

} // namespace qsv
