#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "qsv/series.hpp"

using namespace qsv;

namespace {

Series from_ints(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return Series(std::move(v));
}

std::mt19937 rng(20260809);

Rat random_rat() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

Series random_series(int order) {
    Series s(order);
    for (int d = 0; d <= order; ++d) s.set_coeff(d, random_rat());
    return s;
}

/// Brute-force count of partitions of n with parts allowed by `ok`.
long count_partitions(int n, const std::function<bool(int)>& ok) {
    std::function<long(int, int)> rec = [&](int rest, int max_part) -> long {
        if (rest == 0) return 1;
        long total = 0;
        for (int p = std::min(rest, max_part); p >= 1; --p)
            if (ok(p)) total += rec(rest - p, p);
        return total;
    };
    return rec(n, n);
}

} // namespace

TEST_CASE("add and sub follow the coefficientwise rules") {
    Series a = from_ints({1, 1});
    Series b = from_ints({1, -1});
    CHECK(add(a, b) == from_ints({2, 0}));
    CHECK(add(a, Series::zero(1)) == a);
    Series geom = Series::one(5);
    Series s(5);
    for (int d = 0; d <= 5; ++d) s.set_coeff(d, 1);
    CHECK(add(s, s.scaled(-1)).is_zero());
    CHECK(add(a, b).order() == 1);
}

TEST_CASE("mul truncates to the smaller order") {
    Series a = from_ints({1, -1});                 // 1 - q
    Series b = from_ints({1, 1, 1, 1});            // order 3
    Series p = mul(a, b);
    CHECK(p.order() == 1);
    // telescoping to order 3 when both sides carry it
    CHECK(mul(a.padded(3), b) == Series::one(3));
    CHECK(mul(from_ints({1, 1}), from_ints({1, 1})) == from_ints({1, 2}));
    CHECK(poly_mul(from_ints({1, 1}), from_ints({1, 1})) == from_ints({1, 2, 1}));
}

TEST_CASE("invert: geometric series, identity, and partition numbers") {
    Series geom = invert(from_ints({1, -1}).padded(6));
    for (int d = 0; d <= 6; ++d) CHECK(geom.coeff(d) == 1);
    CHECK(invert(Series::one(4)) == Series::one(4));
    CHECK_THROWS_AS(invert(Series::zero(3)), ZeroConstantTerm);

    // 1/Q counts all partitions: 1,1,2,3,5,7,11
    ProductSpec q_spec;
    q_spec.factor(1, 1, 1, 1);
    Series inv_q = invert(q_spec.expand(6));
    for (int n = 0; n <= 6; ++n)
        CHECK(inv_q.coeff(n) == count_partitions(n, [](int) { return true; }));
}

TEST_CASE("substitute_power relabels degrees") {
    Series a = random_series(9);
    CHECK(substitute_power(a, 1) == a);
    CHECK(substitute_power(from_ints({1, -1}).padded(3), 3) == from_ints({1, 0, 0, -1}));
    Series upto4(4);
    for (int d = 0; d <= 4; ++d) upto4.set_coeff(d, 1);
    CHECK(substitute_power(upto4, 2) == from_ints({1, 0, 1, 0, 1}));
}

TEST_CASE("substitute_power composes multiplicatively") {
    for (int trial = 0; trial < 10; ++trial) {
        Series a = random_series(12);
        CHECK(substitute_power(substitute_power(a, 2), 3) ==
              substitute_power(a, 6));
    }
}

TEST_CASE("compose: identity, shift, and Fibonacci") {
    Series a = random_series(8);
    CHECK(compose(a, Series::identity(8)) == a);
    CHECK(compose(from_ints({1, 1}).padded(4), Series::monomial(1, 2, 4)) ==
          from_ints({1, 0, 1, 0, 0}));
    CHECK_THROWS_AS(compose(a, Series::one(8)), NonzeroInnerConstant);

    // 1/(1-x) at x + x^2 gives the Fibonacci numbers
    Series inner = from_ints({0, 1, 1}).padded(8);
    Series fib = compose(invert(from_ints({1, -1}).padded(8)), inner);
    long f0 = 1, f1 = 1;
    CHECK(fib.coeff(0) == 1);
    CHECK(fib.coeff(1) == 1);
    for (int d = 2; d <= 8; ++d) {
        long f2 = f0 + f1;
        f0 = f1;
        f1 = f2;
        CHECK(fib.coeff(d) == f2);
    }
}

TEST_CASE("reversion: fixed points and the signed Catalan pattern") {
    CHECK(reversion(Series::monomial(-1, 1, 6)) == Series::monomial(-1, 1, 6));
    Series f = from_ints({0, 1, 1}).padded(5);
    CHECK(reversion(f) == from_ints({0, 1, -1, 2, -5, 14}));
    CHECK_THROWS_AS(reversion(from_ints({1, 1})), BadLowestTerm);
    CHECK_THROWS_AS(reversion(from_ints({0, 0, 1})), BadLowestTerm);
}

TEST_CASE("reversion round-trips against compose on random admissible input") {
    for (int trial = 0; trial < 20; ++trial) {
        Series f(10);
        f.set_coeff(1, (trial % 2) ? Rat(1) : Rat(-1));
        for (int d = 2; d <= 10; ++d) f.set_coeff(d, random_rat());
        Series g = reversion(f);
        CHECK(compose(f, g) == Series::identity(10));
        CHECK(compose(g, f) == Series::identity(10));
    }
}

TEST_CASE("ring laws hold exactly on random series") {
    for (int trial = 0; trial < 25; ++trial) {
        Series a = random_series(12), b = random_series(12), c = random_series(12);
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    }
}

TEST_CASE("invert round-trips on random unit series") {
    for (int trial = 0; trial < 50; ++trial) {
        Series a = random_series(10);
        a.set_coeff(0, (trial % 3 == 0) ? Rat(1) : Rat(2, 3));
        CHECK(mul(a, invert(a)) == Series::one(10));
    }
}

TEST_CASE("product exponent extraction") {
    ProductSpec one_minus_x_5;
    one_minus_x_5.factor(1, 1, 40, 5);  // (1-x)^5 and nothing else below order 30
    std::vector<long> cs = extract_product_exponents(one_minus_x_5.expand(10));
    CHECK(cs[0] == 5);
    for (size_t i = 1; i < cs.size(); ++i) CHECK(cs[i] == 0);

    CHECK(extract_product_exponents(Series::one(8)) == std::vector<long>(8, 0));

    Series bad = Series::one(3);
    bad.set_coeff(1, Rat(1, 2));
    CHECK_THROWS_AS(extract_product_exponents(bad), NonIntegerExponent);
}

TEST_CASE("extraction is a left inverse of product expansion") {
    std::uniform_int_distribution<long> e(-4, 4);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<long> cs(10);
        for (auto& c : cs) c = e(rng);
        ProductSpec spec;
        for (int n = 0; n < 10; ++n)
            if (cs[static_cast<size_t>(n)] != 0)
                spec.factor(1, n + 1, 1000, cs[static_cast<size_t>(n)]);
        CHECK(extract_product_exponents(spec.expand(10)) == cs);
    }
}

TEST_CASE("exp and log invert each other") {
    for (int trial = 0; trial < 10; ++trial) {
        Series a = random_series(9);
        a.set_coeff(0, 0);
        CHECK(log_series(exp_series(a)) == a);
    }
    Series u = random_series(9);
    u.set_coeff(0, 1);
    CHECK(exp_series(log_series(u)) == u);
}

TEST_CASE("derivative and integral are mutually inverse on zero-constant series") {
    Series a = random_series(9);
    a.set_coeff(0, 0);
    CHECK(a.derivative().integral() == a);
}
