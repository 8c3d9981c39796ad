#pragma once

#include <vector>

#include "qsv/multiseries.hpp"
#include "qsv/series.hpp"

namespace qsv {

/// Monomial argument c*q^e of a Pochhammer symbol.
struct Monomial {
    Rat c;
    int exponent = 0;

    Monomial(Rat coeff, int e) : c(std::move(coeff)), exponent(e) {
        if (e < 0) throw BadParameter("monomial exponent must be >= 0");
    }
};

inline Monomial qpow(int e) { return Monomial(1, e); }

/// (a; q^base)_n = prod_{j=0}^{n-1} (1 - c q^{e+base*j}), truncated.
Series pochhammer(const Monomial& a, long n, int order, int base = 1);

/// (a; q^base)_inf; requires a of positive degree.
Series pochhammer_infinite(const Monomial& a, int order, int base = 1);

/// Gaussian binomial [n m] in base q^base; zero unless 0 <= m <= n.
Series gauss_binom(long n, long m, int order, int base = 1);

/// Extended binomial for top = m+n with n possibly negative:
/// (q^{n+1}; q)_m / (q; q)_m for m >= 0, and 0 outside that range.  The
/// factor (1 - q^0) makes it vanish exactly for -m <= n < 0; deeper negative
/// tops also give 0, the reading that keeps polynomial sums consistent with
/// the standard definition.
Series gauss_binom_extended(long top, long m, int order);

/// Pi(a_1, ..., a_r; q^base) = prod_i (a_i; q^base)_inf.
Series product_Pi(const std::vector<Monomial>& args, int base, int order);

enum class NamedProductId { G, H, P, Q };

/// The four named products: G = 1/prod (1-x^{5n-4})(1-x^{5n-1}),
/// H = 1/prod (1-x^{5n-3})(1-x^{5n-2}), P = prod (1-x^{2n-1}),
/// Q = prod (1-x^n).
ProductSpec named_product(NamedProductId id);
Series expand_named(NamedProductId id, int order);

/// Monomial in the two-base ring: c * p^a * q^b.
struct PqMonomial {
    Rat c;
    int p_exp = 0;
    int q_exp = 0;
};

enum class ThetaBase { p, q };

/// q-theta over (p, q): theta(z; s) = prod_{n>=0} (1 - s^n z)(1 - s^{n+1}/z)
/// with s the chosen base variable and z a monomial.  The finitely many
/// factors of nonpositive degree are multiplied in exactly (they can carry
/// negative exponents); a vanishing factor makes the result exactly zero.
MultiSeries theta_pq(const PqMonomial& z, ThetaBase base, long cap);

} // namespace qsv
