#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "qsv/qfunctions.hpp"

using namespace qsv;

namespace {

/// Brute-force count of partitions of n into parts satisfying `ok`.
long partitions(int n, const std::function<bool(int)>& ok) {
    std::function<long(int, int)> rec = [&](int rest, int max_part) -> long {
        if (rest == 0) return 1;
        long total = 0;
        for (int p = std::min(rest, max_part); p >= 1; --p)
            if (ok(p)) total += rec(rest - p, p);
        return total;
    };
    return rec(n, n);
}

/// Signed count of partitions of n into distinct parts, weight (-1)^{#parts}.
long signed_distinct(int n) {
    std::function<long(int, int)> rec = [&](int rest, int max_part) -> long {
        if (rest == 0) return 1;
        long total = 0;
        for (int p = std::min(rest, max_part); p >= 1; --p)
            total -= rec(rest - p, p - 1);
        return total;
    };
    return rec(n, n);
}

} // namespace

TEST_CASE("finite pochhammer expansions") {
    CHECK(pochhammer(qpow(1), 2, 4) == Series(std::vector<Rat>{1, -1, -1, 1, 0}));
    CHECK(pochhammer(qpow(3), 0, 6) == Series::one(6));
    CHECK(pochhammer(Monomial(-1, 1), 1, 3) == Series(std::vector<Rat>{1, 1, 0, 0}));
}

TEST_CASE("infinite pochhammer carries the signed distinct-partition counts") {
    Series s = pochhammer_infinite(qpow(1), 12);
    for (int n = 0; n <= 12; ++n) CHECK(s.coeff(n) == signed_distinct(n));
    Series prefix(std::vector<Rat>{1, -1, -1, 0, 0, 1, 0, 1});
    CHECK(s.truncated(7) == prefix);
    CHECK_THROWS_AS(pochhammer_infinite(Monomial(Rat(1, 2), 0), 5), DivergentProduct);
}

TEST_CASE("gaussian binomials: small values and out-of-range zeros") {
    CHECK(gauss_binom(4, 2, 4) == Series(std::vector<Rat>{1, 1, 2, 1, 1}));
    for (int n = 0; n <= 6; ++n) CHECK(gauss_binom(n, 0, 4) == Series::one(4));
    CHECK(gauss_binom(3, -1, 4).is_zero());
    CHECK(gauss_binom(3, 4, 4).is_zero());
    CHECK(gauss_binom(-2, 1, 4).is_zero());
}

TEST_CASE("q-Pascal recurrences and symmetry") {
    for (int n = 1; n <= 12; ++n) {
        for (int m = 0; m <= n; ++m) {
            int order = n * n;
            Series lhs = gauss_binom(n, m, order);
            Series r1 = add(gauss_binom(n - 1, m, order),
                            gauss_binom(n - 1, m - 1, order)
                                .shifted(n - m).truncated(order));
            CHECK(lhs == r1);
            Series r2 = add(gauss_binom(n - 1, m, order).shifted(m).truncated(order),
                            gauss_binom(n - 1, m - 1, order));
            CHECK(lhs == r2);
            CHECK(lhs == gauss_binom(n, n - m, order));
        }
    }
}

TEST_CASE("binomials stabilize onto inverse pochhammers") {
    for (int m = 0; m <= 5; ++m) {
        Series target = invert(pochhammer(qpow(1), m, 20));
        for (int n = m; n <= 20; ++n) {
            int window = n - m;
            CHECK(gauss_binom(n, m, window) == target.truncated(window));
        }
    }
}

TEST_CASE("extended binomial agrees with the standard one and vanishes below") {
    for (int top = 0; top <= 8; ++top)
        for (int bottom = 0; bottom <= top; ++bottom)
            CHECK(gauss_binom_extended(top, bottom, 20) == gauss_binom(top, bottom, 20));
    CHECK(gauss_binom_extended(2, 5, 10).is_zero());
    CHECK(gauss_binom_extended(-3, 2, 10).is_zero());
    CHECK(gauss_binom_extended(-1, 0, 10) == Series::one(10));
}

TEST_CASE("Slater products count congruence-restricted partitions") {
    Series first = invert(product_Pi({qpow(1), qpow(4)}, 5, 12));
    Series second = invert(product_Pi({qpow(2), qpow(3)}, 5, 12));
    for (int n = 0; n <= 12; ++n) {
        CHECK(first.coeff(n) == partitions(n, [](int p) { return p % 5 == 1 || p % 5 == 4; }));
        CHECK(second.coeff(n) == partitions(n, [](int p) { return p % 5 == 2 || p % 5 == 3; }));
    }
    CHECK(product_Pi({qpow(1)}, 1, 10) == pochhammer_infinite(qpow(1), 10));
}

TEST_CASE("Pi is the product of its factors") {
    Series joint = product_Pi({qpow(2), qpow(5), qpow(7)}, 7, 14);
    Series split = mul(mul(pochhammer_infinite(qpow(2), 14, 7),
                           pochhammer_infinite(qpow(5), 14, 7)),
                       pochhammer_infinite(qpow(7), 14, 7));
    CHECK(joint == split);
}

TEST_CASE("named products count their partitions") {
    Series g = expand_named(NamedProductId::G, 12);
    Series h = expand_named(NamedProductId::H, 12);
    for (int n = 0; n <= 12; ++n) {
        CHECK(g.coeff(n) == partitions(n, [](int p) { return p % 5 == 1 || p % 5 == 4; }));
        CHECK(h.coeff(n) == partitions(n, [](int p) { return p % 5 == 2 || p % 5 == 3; }));
    }
}

TEST_CASE("odd-part factor times the even stretch gives the full product") {
    int k = 20;
    Series even_part = named_product(NamedProductId::Q).stretched(2).expand(k);
    CHECK(mul(expand_named(NamedProductId::P, k), even_part) ==
          expand_named(NamedProductId::Q, k));
}

TEST_CASE("G H Q collapses to the fifth-power stretch") {
    int k = 30;
    Series lhs = mul(mul(expand_named(NamedProductId::G, k), expand_named(NamedProductId::H, k)),
                     expand_named(NamedProductId::Q, k));
    CHECK(lhs == named_product(NamedProductId::Q).stretched(5).expand(k));
}

TEST_CASE("theta vanishes at integer powers of its base") {
    CHECK(theta_pq(PqMonomial{1, 0, 1}, ThetaBase::q, 8).is_zero());
    CHECK(theta_pq(PqMonomial{1, 0, 2}, ThetaBase::q, 8).is_zero());
}

TEST_CASE("theta at a power of the other variable opens at 1") {
    MultiSeries t = theta_pq(PqMonomial{1, 0, 2}, ThetaBase::p, 8);
    CHECK(t.coeff({0, 0}) == 1);
    // carries honest negative exponents from the reciprocal factors
    CHECK(t.coeff({1, -2}) == -1);
}

TEST_CASE("theta bookkeeping against a direct factor oracle") {
    // z = p with base q: multiply the defining factors one at a time in a
    // plain exact map, independent of the production cap logic
    long cap = 8;
    MultiSeries got = theta_pq(PqMonomial{1, 1, 0}, ThetaBase::q, cap);
    std::map<std::pair<int, int>, Rat> acc{{{0, 0}, Rat(1)}};
    auto mul_binomial = [&](int pe, int qe) {
        std::map<std::pair<int, int>, Rat> next = acc;
        for (const auto& [k, c] : acc) {
            auto key = std::make_pair(k.first + pe, k.second + qe);
            next[key] -= c;
            if (next[key] == 0) next.erase(key);
        }
        acc = std::move(next);
    };
    for (int n = 0; n <= 2 * static_cast<int>(cap) + 2; ++n) mul_binomial(1, n);
    for (int n = 0; n <= 2 * static_cast<int>(cap) + 2; ++n) mul_binomial(-1, n + 1);
    for (const auto& [k, c] : acc) {
        if (k.first + k.second > cap || k.first < -static_cast<int>(cap)) continue;
        CHECK(got.coeff({k.first, k.second}) == c);
    }
    for (const auto& [k, c] : got.terms()) {
        auto it = acc.find({k[0], k[1]});
        CHECK(it != acc.end());
        if (it != acc.end()) CHECK(it->second == c);
    }
}
