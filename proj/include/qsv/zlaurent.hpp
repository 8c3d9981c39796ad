#pragma once

#include <map>

#include "qsv/multiseries.hpp"

namespace qsv {

/// Laurent polynomial in a distinguished variable z whose coefficients are
/// truncated series in (p, q).
///
/// Each stored slice carries its own reliability cap; an absent slice means
/// "zero through default_cap()".  Multiplication propagates, per output
/// slice, the weakest cap any contributing pair can vouch for, so degree
/// truncation stays sound even when slices mix different caps.  z-exponents
/// are range-checked against a hard sanity bound (z truncation has no
/// unknown-tail reading, so running past the bound is an error, not a
/// truncation).
class ZLaurent {
public:
    struct Slice {
        MultiSeries value{2, 0};
        long cap = 0;
    };

    ZLaurent(long default_cap, int z_sanity);

    static ZLaurent one(long cap, int z_sanity);
    /// c * p^a q^b z^k as an exact value.
    static ZLaurent monomial(const Rat& c, int p_exp, int q_exp, int k, int z_sanity);

    long default_cap() const { return default_cap_; }
    int z_sanity() const { return z_sanity_; }
    const std::map<int, Slice>& slices() const { return slices_; }

    /// Reliable cap of slice k (default for absent slices).
    long cap_at(int k) const;
    /// The (p,q)-series at z^k, zero if absent.
    MultiSeries value_at(int k) const;
    /// Lower bound for the minimum (p,q)-degree of slice k.
    long mindeg_at(int k) const;

    void set_slice(int k, MultiSeries value, long cap);

    int lowest_exponent() const;
    int highest_exponent() const;

private:
    long default_cap_;
    int z_sanity_;
    std::map<int, Slice> slices_;

    void check_range(int k) const;
};

ZLaurent zl_mul(const ZLaurent& a, const ZLaurent& b);

/// z -> p^dp q^dq z; negative slices must be divisible by the shift monomial.
ZLaurent zl_subst_scale_z(const ZLaurent& a, int dp, int dq);

/// z -> pq / z.
ZLaurent zl_subst_pq_over_z(const ZLaurent& a);

/// p -> 0 (keeps only p-free parts of every slice).
ZLaurent zl_set_p_zero(const ZLaurent& a);

struct ZMismatch {
    int z_exp = 0;
    MultiSeries::Key key{};
    Rat lhs;
    Rat rhs;
    bool found = false;
};

/// Compare all slices within |k| <= z_window through (p,q)-degree `degree`;
/// raises CapExceeded when either side cannot vouch for that window.
ZMismatch zl_compare(const ZLaurent& a, const ZLaurent& b, int z_window, long degree);

} // namespace qsv
