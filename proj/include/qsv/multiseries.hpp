#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsv/errors.hpp"
#include "qsv/rational.hpp"

namespace qsv {

/// Truncated multivariate series: a canonical map from exponent vectors to
/// exact rational coefficients under a degree cap.
///
/// The contract is "every true term of degree <= cap() is stored exactly";
/// nothing is claimed past the cap.  Degree is the weighted sum of exponents
/// (all weights 1 unless constructed otherwise — nonunit weights and negative
/// exponents exist for the two-base gamma work, where plain total degree is
/// not a usable grading).  Operations propagate the soundest cap they can
/// vouch for: multiplying by a value with negative minimum degree lowers it.
class MultiSeries {
public:
    using Key = std::vector<int>;

    MultiSeries(int arity, long cap);
    MultiSeries(int arity, long cap, std::vector<int> weights);

    static constexpr long exact_cap = 1L << 28;  // cap used for exact values

    static MultiSeries constant(int arity, const Rat& c, long cap);
    static MultiSeries variable(int arity, int index, long cap);
    /// All exponents must be >= 0.
    static MultiSeries monomial(int arity, const Rat& c, Key exps, long cap);
    /// Exponents of any sign.
    static MultiSeries laurent_monomial(int arity, const Rat& c, Key exps, long cap,
                                        std::vector<int> weights = {});

    int arity() const { return arity_; }
    long cap() const { return cap_; }
    const std::vector<int>& weights() const { return weights_; }
    const std::map<Key, Rat>& terms() const { return terms_; }

    long degree_of(const Key& k) const;
    /// Lower bound on the true minimum degree (cap+1 when no term is stored).
    long min_degree() const;
    bool is_zero() const { return terms_.empty(); }
    bool has_negative_exponents() const;
    size_t term_count() const { return terms_.size(); }

    Rat coeff(const Key& k) const;
    /// Accumulate c into the coefficient at k, keeping canonical form.
    void add_term(const Key& k, const Rat& c);

    MultiSeries truncated(long new_cap) const;
    MultiSeries scaled(const Rat& c) const;
    MultiSeries operator-() const { return scaled(-1); }

    std::string str(const std::vector<std::string>& names) const;

private:
    int arity_;
    long cap_;
    std::vector<int> weights_;
    std::map<Key, Rat> terms_;

    friend MultiSeries multi_add(const MultiSeries&, const MultiSeries&);
    friend MultiSeries multi_sub(const MultiSeries&, const MultiSeries&);
    friend MultiSeries multi_mul(const MultiSeries&, const MultiSeries&);
};

MultiSeries multi_add(const MultiSeries& a, const MultiSeries& b);
MultiSeries multi_sub(const MultiSeries& a, const MultiSeries& b);
MultiSeries multi_mul(const MultiSeries& a, const MultiSeries& b);
MultiSeries multi_pow(const MultiSeries& a, long e);

/// Inverse; needs min degree >= 0 and the degree-0 part equal to a nonzero
/// constant.
MultiSeries multi_invert(const MultiSeries& a);

/// Replace variable i by assignments[i].  Every assignment needs minimum
/// degree >= 1 (a zero series qualifies) so truncation stays sound, and the
/// substituted exponents must be nonnegative.
MultiSeries multi_substitute(const MultiSeries& a, const std::vector<MultiSeries>& assignments);

/// Equality on the common reliable window: all terms of degree <= min cap.
bool multi_equal(const MultiSeries& a, const MultiSeries& b);

/// Substitution of zero for one variable (drops every term using it).
MultiSeries set_variable_zero(const MultiSeries& a, int index);

/// Remove a variable slot that no stored term uses.
MultiSeries drop_variable(const MultiSeries& a, int index);

/// Coefficient of variable^k as a series in the remaining variables.
MultiSeries slice_variable(const MultiSeries& a, int index, int k);

} // namespace qsv
