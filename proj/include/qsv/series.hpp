#pragma once

#include <string>
#include <vector>

#include "qsv/errors.hpp"
#include "qsv/rational.hpp"

namespace qsv {

/// Truncated formal power series with exact rational coefficients.
///
/// A Series stores the coefficients of degrees 0..order(); terms of higher
/// degree are *unknown*, not zero.  Every operation returns the minimum
/// order it can vouch for, and equality compares only the common prefix.
class Series {
public:
    Series() : coeffs_(1) {}
    explicit Series(int order) : coeffs_(static_cast<size_t>(order) + 1) {}
    explicit Series(std::vector<Rat> coeffs);

    static Series constant(const Rat& c, int order);
    static Series one(int order) { return constant(1, order); }
    static Series zero(int order) { return Series(order); }
    static Series identity(int order);  // the series x
    static Series monomial(const Rat& c, int degree, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& coeff(int degree) const;
    void set_coeff(int degree, const Rat& value);
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// Lowest degree with a nonzero coefficient; order()+1 if none known.
    int min_degree() const;

    Series truncated(int new_order) const;
    /// Zero-pad up to new_order.  Only valid when the caller knows the value
    /// is an exact polynomial (no unknown tail).
    Series padded(int new_order) const;
    /// Multiply by x^d (d >= 0).  Known terms shift, so order grows by d.
    Series shifted(int d) const;
    Series derivative() const;
    /// Antiderivative with zero constant term; order grows by 1.
    Series integral() const;
    Series scaled(const Rat& c) const;
    Series operator-() const;

    std::string str(const std::string& var = "q") const;

private:
    std::vector<Rat> coeffs_;  // coeffs_[d] is the coefficient of x^d
};

bool operator==(const Series& a, const Series& b);
inline bool operator!=(const Series& a, const Series& b) { return !(a == b); }

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);

/// Full product of two exact polynomials: result order is the sum of the
/// operand orders (no truncation).  Only valid when both carry no unknown
/// tail.
Series poly_mul(const Series& a, const Series& b);

/// Multiplicative inverse; requires a nonzero constant term.
Series invert(const Series& a);

/// x -> x^k.  The result keeps the input's order.
Series substitute_power(const Series& a, int k);

/// outer(inner); inner must have zero constant term.
Series compose(const Series& outer, const Series& inner);

/// Compositional inverse of f = f1*x + f2*x^2 + ... with f1 invertible,
/// by fixed-point iteration (one order gained per pass).
Series reversion(const Series& f);

/// (1 - c*x^d)^e truncated at `order`; e may be negative.
Series binomial_power(const Rat& c, int d, long e, int order);

/// Integer exponent power with truncation; negative exponents invert.
Series pow(const Series& a, long e);

/// exp(a) for a with zero constant term.
Series exp_series(const Series& a);
/// log(a) for a with constant term 1.
Series log_series(const Series& a);

/// The unique integers c_1..c_K with f = prod_{n=1..K} (1 - x^n)^{c_n}
/// up to order K, by iterative peeling.  f must have constant term 1;
/// a non-integral peeled exponent raises NonIntegerExponent.
std::vector<long> extract_product_exponents(const Series& f);

/// One symbolic factor family prod_{n>=0} (1 - c*x^(a+m*n))^e.
struct ProductFactor {
    Rat c;
    int offset = 1;
    int modulus = 1;
    long exponent = 1;
};

/// Symbolic infinite product, expandable exactly to any finite order.
class ProductSpec {
public:
    ProductSpec() = default;

    /// Append prod_{n>=0} (1 - c*x^(offset+modulus*n))^exponent.
    ProductSpec& factor(Rat c, int offset, int modulus, long exponent);
    ProductSpec& times(const ProductSpec& other);
    /// Same factors with every exponent multiplied by e.
    ProductSpec powered(long e) const;
    /// Same factors with x -> x^k (offsets and moduli scale by k).
    ProductSpec stretched(int k) const;

    const std::vector<ProductFactor>& factors() const { return factors_; }
    Series expand(int order) const;

private:
    std::vector<ProductFactor> factors_;
};

} // namespace qsv
