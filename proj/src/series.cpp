#include "qsv/series.hpp"

#include <algorithm>
#include <sstream>

namespace qsv {

Series::Series(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.resize(1);
}

Series Series::constant(const Rat& c, int order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
}

Series Series::identity(int order) { return monomial(1, 1, order); }

Series Series::monomial(const Rat& c, int degree, int order) {
    Series s(order);
    if (degree <= order) s.coeffs_[degree] = c;
    return s;
}

const Rat& Series::coeff(int degree) const {
    static const Rat zero(0);
    if (degree < 0) return zero;
    if (degree > order()) throw BadParameter("coefficient beyond truncation order requested");
    return coeffs_[degree];
}

void Series::set_coeff(int degree, const Rat& value) {
    if (degree < 0 || degree > order()) throw BadParameter("coefficient degree out of range");
    coeffs_[degree] = value;
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

int Series::min_degree() const {
    for (int d = 0; d <= order(); ++d)
        if (coeffs_[d] != 0) return d;
    return order() + 1;
}

Series Series::truncated(int new_order) const {
    if (new_order >= order()) return *this;
    if (new_order < 0) new_order = 0;
    Series s(new_order);
    std::copy(coeffs_.begin(), coeffs_.begin() + new_order + 1, s.coeffs_.begin());
    return s;
}

Series Series::padded(int new_order) const {
    if (new_order <= order()) return truncated(new_order);
    Series s = *this;
    s.coeffs_.resize(static_cast<size_t>(new_order) + 1);
    return s;
}

Series Series::shifted(int d) const {
    if (d < 0) throw BadParameter("shift by negative degree");
    Series s(order() + d);
    for (int i = 0; i <= order(); ++i) s.coeffs_[i + d] = coeffs_[i];
    return s;
}

Series Series::derivative() const {
    Series s(std::max(0, order() - 1));
    for (int d = 1; d <= order(); ++d) s.coeffs_[d - 1] = coeffs_[d] * d;
    return s;
}

Series Series::integral() const {
    Series s(order() + 1);
    for (int d = 0; d <= order(); ++d) s.coeffs_[d + 1] = coeffs_[d] / (d + 1);
    return s;
}

Series Series::scaled(const Rat& c) const {
    Series s = *this;
    for (auto& v : s.coeffs_) v *= c;
    return s;
}

Series Series::operator-() const { return scaled(-1); }

std::string Series::str(const std::string& var) const {
    std::ostringstream out;
    bool first = true;
    for (int d = 0; d <= order(); ++d) {
        if (coeffs_[d] == 0) continue;
        Rat c = coeffs_[d];
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (d == 0 || c != 1) out << to_string(c);
        if (d > 0) {
            if (c != 1) out << "*";
            out << var;
            if (d > 1) out << "^" << d;
        }
    }
    if (first) out << "0";
    out << " + O(" << var << "^" << order() + 1 << ")";
    return out.str();
}

bool operator==(const Series& a, const Series& b) {
    int k = std::min(a.order(), b.order());
    for (int d = 0; d <= k; ++d)
        if (a.coeff(d) != b.coeff(d)) return false;
    return true;
}

Series add(const Series& a, const Series& b) {
    int k = std::min(a.order(), b.order());
    Series s(k);
    for (int d = 0; d <= k; ++d) s.set_coeff(d, a.coeff(d) + b.coeff(d));
    return s;
}

Series sub(const Series& a, const Series& b) {
    int k = std::min(a.order(), b.order());
    Series s(k);
    for (int d = 0; d <= k; ++d) s.set_coeff(d, a.coeff(d) - b.coeff(d));
    return s;
}

Series mul(const Series& a, const Series& b) {
    int k = std::min(a.order(), b.order());
    Series s(k);
    Rat acc;
    for (int i = 0; i <= k; ++i) {
        const Rat& ai = a.coeff(i);
        if (ai == 0) continue;
        for (int j = 0; i + j <= k; ++j) {
            const Rat& bj = b.coeff(j);
            if (bj == 0) continue;
            acc = ai * bj;
            s.set_coeff(i + j, s.coeff(i + j) + acc);
        }
    }
    return s;
}

Series poly_mul(const Series& a, const Series& b) {
    Series s(a.order() + b.order());
    Rat acc;
    for (int i = 0; i <= a.order(); ++i) {
        const Rat& ai = a.coeff(i);
        if (ai == 0) continue;
        for (int j = 0; j <= b.order(); ++j) {
            const Rat& bj = b.coeff(j);
            if (bj == 0) continue;
            acc = ai * bj;
            s.set_coeff(i + j, s.coeff(i + j) + acc);
        }
    }
    return s;
}

Series invert(const Series& a) {
    if (a.coeff(0) == 0) throw ZeroConstantTerm();
    int k = a.order();
    Series b(k);
    Rat inv0 = 1 / a.coeff(0);
    b.set_coeff(0, inv0);
    for (int n = 1; n <= k; ++n) {
        Rat acc = 0;
        for (int j = 1; j <= n; ++j) {
            if (a.coeff(j) == 0) continue;
            acc += a.coeff(j) * b.coeff(n - j);
        }
        b.set_coeff(n, -inv0 * acc);
    }
    return b;
}

Series substitute_power(const Series& a, int k) {
    if (k < 1) throw BadParameter("substitute_power needs k >= 1");
    Series s(a.order());
    for (int d = 0; d * k <= a.order(); ++d) s.set_coeff(d * k, a.coeff(d));
    return s;
}

Series compose(const Series& outer, const Series& inner) {
    if (inner.coeff(0) != 0) throw NonzeroInnerConstant();
    int k = std::min(outer.order(), inner.order());
    Series in = inner.truncated(k);
    Series r = Series::zero(k);
    // Horner: terms of the outer series beyond degree k cannot reach degree <= k.
    for (int d = std::min(outer.order(), k); d >= 0; --d) {
        r = mul(r, in);
        r.set_coeff(0, r.coeff(0) + outer.coeff(d));
    }
    return r;
}

Series reversion(const Series& f) {
    if (f.order() < 1 || f.coeff(0) != 0 || f.coeff(1) == 0) throw BadLowestTerm();
    int k = f.order();
    Rat inv1 = 1 / f.coeff(1);
    Series tail = f;  // f minus its linear term
    tail.set_coeff(1, 0);
    Series g = Series::monomial(inv1, 1, k);
    for (int pass = 1; pass < k; ++pass) {
        Series t = sub(Series::identity(k), compose(tail, g));
        g = t.scaled(inv1);
    }
    return g;
}

Series binomial_power(const Rat& c, int d, long e, int order) {
    if (d < 1) throw BadParameter("binomial_power needs degree >= 1");
    Series r = Series::one(order);
    if (e == 0 || d > order) return r;
    bool negative = e < 0;
    unsigned long n = negative ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    // (1 - c x^d)^n by repeated in-place multiplication.
    for (unsigned long i = 0; i < n; ++i) {
        for (int j = order; j >= d; --j)
            r.set_coeff(j, r.coeff(j) - c * r.coeff(j - d));
    }
    return negative ? invert(r) : r;
}

Series pow(const Series& a, long e) {
    if (e == 0) return Series::one(a.order());
    if (e < 0) return invert(pow(a, -e));
    Series base = a;
    Series r = Series::one(a.order());
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1UL) r = mul(r, base);
        n >>= 1UL;
        if (n > 0) base = mul(base, base);
    }
    return r;
}

Series exp_series(const Series& a) {
    if (a.coeff(0) != 0) throw BadParameter("exp_series needs zero constant term");
    int k = a.order();
    Series e(k);
    e.set_coeff(0, 1);
    // e' = a' e, solved degree by degree.
    for (int n = 1; n <= k; ++n) {
        Rat acc = 0;
        for (int j = 1; j <= n; ++j) acc += j * a.coeff(j) * e.coeff(n - j);
        e.set_coeff(n, acc / n);
    }
    return e;
}

Series log_series(const Series& a) {
    if (a.coeff(0) != 1) throw BadParameter("log_series needs constant term 1");
    int k = a.order();
    Series l(k);
    // a = exp(l) gives n*a_n = sum_{j=1..n} j*l_j*a_{n-j}; solve for l_n.
    for (int n = 1; n <= k; ++n) {
        Rat acc = n * a.coeff(n);
        for (int j = 1; j < n; ++j) acc -= j * l.coeff(j) * a.coeff(n - j);
        l.set_coeff(n, acc / n);
    }
    return l;
}

std::vector<long> extract_product_exponents(const Series& f) {
    if (f.coeff(0) != 1) throw BadParameter("extract_product_exponents needs constant term 1");
    int k = f.order();
    Series residual = f;
    std::vector<long> cs;
    cs.reserve(static_cast<size_t>(k));
    for (int n = 1; n <= k; ++n) {
        Rat cn = -residual.coeff(n);
        if (!is_integer(cn) || !cn.get_num().fits_slong_p())
            throw NonIntegerExponent("non-integer exponent at degree " + std::to_string(n) +
                                     ": " + to_string(cn));
        long e = cn.get_num().get_si();
        cs.push_back(e);
        if (e != 0) residual = mul(residual, binomial_power(1, n, -e, k));
    }
    return cs;
}

ProductSpec& ProductSpec::factor(Rat c, int offset, int modulus, long exponent) {
    if (modulus < 1) throw BadParameter("product factor needs modulus >= 1");
    if (exponent != 0 && offset < 1)
        throw BadParameter("product factor needs offset >= 1 so the expansion terminates");
    factors_.push_back(ProductFactor{std::move(c), offset, modulus, exponent});
    return *this;
}

ProductSpec& ProductSpec::times(const ProductSpec& other) {
    factors_.insert(factors_.end(), other.factors_.begin(), other.factors_.end());
    return *this;
}

ProductSpec ProductSpec::powered(long e) const {
    ProductSpec p = *this;
    for (auto& f : p.factors_) f.exponent *= e;
    return p;
}

ProductSpec ProductSpec::stretched(int k) const {
    if (k < 1) throw BadParameter("stretch needs k >= 1");
    ProductSpec p = *this;
    for (auto& f : p.factors_) {
        f.offset *= k;
        f.modulus *= k;
    }
    return p;
}

Series ProductSpec::expand(int order) const {
    Series r = Series::one(order);
    for (const auto& f : factors_) {
        if (f.exponent == 0) continue;
        // Expand the factor family at |e|, then invert once for e < 0,
        // so negative exponents reuse invert's tested path.
        long e = f.exponent < 0 ? -f.exponent : f.exponent;
        Series fam = Series::one(order);
        for (int n = 0; f.offset + static_cast<long>(f.modulus) * n <= order; ++n) {
            int deg = f.offset + f.modulus * n;
            fam = mul(fam, binomial_power(f.c, deg, e, order));
        }
        if (f.exponent < 0) fam = invert(fam);
        r = mul(r, fam);
    }
    return r;
}

} // namespace qsv
