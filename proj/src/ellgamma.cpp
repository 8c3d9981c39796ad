#include "qsv/ellgamma.hpp"

#include <algorithm>

namespace qsv {

namespace {

ZLaurent zl_truncate(const ZLaurent& a, long cap) {
    ZLaurent r(std::min(a.default_cap(), cap), a.z_sanity());
    for (const auto& [k, s] : a.slices())
        r.set_slice(k, s.value.truncated(cap), std::min(s.cap, cap));
    return r;
}

/// (1 - c p^a q^b z^k) as an exact two-slice value.
ZLaurent zl_binomial(const Rat& c, int p_exp, int q_exp, int k, int z_sanity) {
    ZLaurent r = ZLaurent::one(MultiSeries::exact_cap, z_sanity);
    r.set_slice(k, MultiSeries::laurent_monomial(2, -c, {p_exp, q_exp}, MultiSeries::exact_cap),
                MultiSeries::exact_cap);
    return r;
}

} // namespace

ZLaurent elliptic_gamma_core(long pq_cap, int z_sanity) {
    ZLaurent acc = ZLaurent::one(pq_cap, z_sanity);
    // 1/(1 - p^m q^n z) for (m,n) != (0,0): geometric series in z.
    for (int m = 0; m <= pq_cap; ++m) {
        for (int n = (m == 0 ? 1 : 0); m + n <= pq_cap; ++n) {
            ZLaurent geo(pq_cap, z_sanity);
            for (int t = 0; static_cast<long>(t) * (m + n) <= pq_cap; ++t)
                geo.set_slice(t,
                              MultiSeries::monomial(2, 1, {m * t, n * t}, MultiSeries::exact_cap),
                              MultiSeries::exact_cap);
            acc = zl_mul(acc, geo);
        }
    }
    // (1 - p^{m+1} q^{n+1} / z)
    for (int m = 0; m + 2 <= pq_cap; ++m)
        for (int n = 0; m + n + 2 <= pq_cap; ++n)
            acc = zl_mul(acc, zl_binomial(1, m + 1, n + 1, -1, z_sanity));
    return zl_truncate(acc, pq_cap);
}

ZLaurent theta_zlaurent(ThetaBase base, long pq_cap, int z_sanity, bool skip_first) {
    int bp = base == ThetaBase::p ? 1 : 0;
    int bq = 1 - bp;
    ZLaurent acc = ZLaurent::one(pq_cap, z_sanity);
    for (int n = skip_first ? 1 : 0; static_cast<long>(n) * (bp + bq) <= pq_cap; ++n)
        acc = zl_mul(acc, zl_binomial(1, n * bp, n * bq, 1, z_sanity));
    for (int n = 0; static_cast<long>(n + 1) * (bp + bq) <= pq_cap; ++n)
        acc = zl_mul(acc, zl_binomial(1, (n + 1) * bp, (n + 1) * bq, -1, z_sanity));
    return zl_truncate(acc, pq_cap);
}

namespace {

VerifyReport report_from_zl(const std::string& id, const ZLaurent& lhs, const ZLaurent& rhs,
                            int zcap, long degree, std::string note) {
    VerifyReport r;
    r.id = id;
    r.order = degree;
    r.note = std::move(note);
    ZMismatch m = zl_compare(lhs, rhs, zcap, degree);
    r.pass = !m.found;
    if (m.found) {
        long d = 0;
        for (size_t i = 0; i < m.key.size(); ++i) d += m.key[i];
        r.first_mismatch = FirstMismatch{d, m.lhs, m.rhs};
        r.note += (r.note.empty() ? "" : "; ") + std::string("mismatch at z^") +
                  std::to_string(m.z_exp) + " p^" + std::to_string(m.key[0]) + " q^" +
                  std::to_string(m.key[1]);
    }
    return r;
}

} // namespace

VerifyReport gamma_reflection_check(int zcap, long degree) {
    int sanity = static_cast<int>(4 * degree + 8);
    // the z -> pq/z image loses two degrees per slice; pad the working cap
    long work = degree + 2 * zcap + 2;
    ZLaurent core = elliptic_gamma_core(work, sanity);
    ZLaurent mirrored = zl_subst_pq_over_z(core);
    ZLaurent lhs = zl_mul(core, mirrored);
    // (1 - z)(1 - pq/z) = 1 + pq - z - pq/z
    ZLaurent rhs = zl_mul(zl_binomial(1, 0, 0, 1, sanity), zl_binomial(1, 1, 1, -1, sanity));
    return report_from_zl("EG-REFLECT", lhs, rhs, zcap, degree,
                          "Gamma(z)Gamma(pq/z)=1 cross-multiplied by the pole factors");
}

VerifyReport gamma_shift_check(ThetaBase shift_base, int zcap, long degree) {
    int sanity = static_cast<int>(4 * degree + 8);
    long work = degree + zcap + 2;
    ZLaurent core = elliptic_gamma_core(work, sanity);
    bool p_shift = shift_base == ThetaBase::q;  // Gamma(pz) pairs with theta(z;q)
    ZLaurent shifted = p_shift ? zl_subst_scale_z(core, 1, 0) : zl_subst_scale_z(core, 0, 1);
    ZLaurent theta = theta_zlaurent(shift_base, work, sanity);
    // core(sz) (1 - z) = theta(z; base) core(z) (1 - sz)
    ZLaurent lhs = zl_mul(shifted, zl_binomial(1, 0, 0, 1, sanity));
    ZLaurent rhs = zl_mul(zl_mul(theta, core),
                          p_shift ? zl_binomial(1, 1, 0, 1, sanity)
                                  : zl_binomial(1, 0, 1, 1, sanity));
    return report_from_zl(p_shift ? "EG-SHIFT-P" : "EG-SHIFT-Q", lhs, rhs, zcap, degree,
                          "shift equation cross-multiplied by the pole factors");
}

VerifyReport gamma_p_zero_check(int zcap, long degree) {
    int sanity = static_cast<int>(4 * degree + 8);
    ZLaurent core = zl_set_p_zero(elliptic_gamma_core(degree, sanity));
    ZLaurent tail = ZLaurent::one(MultiSeries::exact_cap, sanity);
    for (int n = 1; n <= degree; ++n) tail = zl_mul(tail, zl_binomial(1, 0, n, 1, sanity));
    tail = zl_truncate(tail, degree);
    ZLaurent lhs = zl_mul(core, tail);
    return report_from_zl("EG-P0", lhs, ZLaurent::one(degree, sanity), zcap, degree,
                          "p = 0 degeneration against the infinite pochhammer");
}

namespace {

/// Binomial factor (1 - p^a q^b) in the weighted (p, q) ring.
struct WFactor {
    int p_exp;
    int q_exp;
};

MultiSeries multiply_factors(const std::vector<WFactor>& fs, int wp, long wcap) {
    std::vector<int> weights{wp, 1};
    MultiSeries acc(2, wcap, weights);
    acc.add_term({0, 0}, 1);
    for (const auto& f : fs) {
        if (static_cast<long>(wp) * f.p_exp + f.q_exp < 1)
            throw BadParameter("weighted factor without positive degree");
        MultiSeries bin(2, MultiSeries::exact_cap, weights);
        bin.add_term({0, 0}, 1);
        bin.add_term({f.p_exp, f.q_exp}, -1);
        acc = multi_mul(acc, bin).truncated(wcap);
    }
    return acc;
}

/// Numerator family of C(w; base): (1 - p^{m+1} q^{off + s*nu}).
void append_num(std::vector<WFactor>& fs, int s, int off, int wp, long wcap) {
    for (int m = 0;; ++m) {
        long base_w = static_cast<long>(wp) * (m + 1) + off;
        if (base_w > wcap) break;
        for (int nu = 0; base_w + static_cast<long>(s) * nu <= wcap; ++nu)
            fs.push_back(WFactor{m + 1, off + s * nu});
    }
}

/// Denominator family of C(w; base): (1 - p^m q^{off + s*nu}), off >= 1.
void append_den(std::vector<WFactor>& fs, int s, int off, int wp, long wcap) {
    if (off < 1) throw BadParameter("denominator family needs positive offset");
    for (int m = 0;; ++m) {
        long base_w = static_cast<long>(wp) * m + off;
        if (base_w > wcap) break;
        for (int nu = 0; base_w + static_cast<long>(s) * nu <= wcap; ++nu)
            fs.push_back(WFactor{m, off + s * nu});
    }
}

/// (q^s; q^s)_inf.
void append_qq_inf(std::vector<WFactor>& fs, int s, long wcap) {
    for (int nu = 1; static_cast<long>(s) * nu <= wcap; ++nu) fs.push_back(WFactor{0, s * nu});
}

/// theta(q^s; p) = prod (1 - p^m q^s)(1 - p^{m+1} q^{-s}).
void append_theta(std::vector<WFactor>& fs, int s, int wp, long wcap) {
    for (int m = 0; static_cast<long>(wp) * m + s <= wcap; ++m) fs.push_back(WFactor{m, s});
    for (int m = 0; static_cast<long>(wp) * (m + 1) - s <= wcap; ++m)
        fs.push_back(WFactor{m + 1, -s});
}

VerifyReport compare_weighted(const std::string& id, const MultiSeries& lhs,
                              const MultiSeries& rhs, long degree, std::string note) {
    VerifyReport r;
    r.id = id;
    r.order = degree;
    r.note = std::move(note);
    r.pass = true;
    auto scan = [&](const MultiSeries& x, const MultiSeries& y) {
        for (const auto& [k, c] : x.terms()) {
            if (y.coeff(k) != c) {
                long d = k[0] + k[1];
                if (!r.first_mismatch || d < r.first_mismatch->degree) {
                    r.pass = false;
                    r.first_mismatch = FirstMismatch{d, x.coeff(k), y.coeff(k)};
                    r.note += (r.note.empty() ? "" : "; ") + std::string("mismatch at p^") +
                              std::to_string(k[0]) + " q^" + std::to_string(k[1]);
                }
            }
        }
    };
    scan(lhs, rhs);
    if (r.pass) scan(rhs, lhs);
    return r;
}

} // namespace

MultiSeries tilde_gamma(int z, int base_exp, long degree) {
    if (z < 1) throw BadParameter("tilde_gamma needs an integer argument >= 1");
    if (base_exp < 1) throw BadParameter("tilde_gamma base exponent must be >= 1");
    int wp = base_exp * z + 1;
    long wcap = static_cast<long>(wp) * degree + degree;
    int s = base_exp;

    std::vector<WFactor> rr_inf, pp_inf, theta_fs, num_fs, den_fs;
    append_qq_inf(rr_inf, s, wcap);
    for (int m = 1; static_cast<long>(wp) * m <= wcap; ++m) pp_inf.push_back(WFactor{m, 0});
    append_theta(theta_fs, s, wp, wcap);
    append_num(num_fs, s, s - s * z, wp, wcap);
    append_den(den_fs, s, s * z, wp, wcap);

    MultiSeries acc = multiply_factors(rr_inf, wp, wcap);
    acc = multi_mul(acc, multi_invert(multiply_factors(pp_inf, wp, wcap))).truncated(wcap);
    MultiSeries theta = multiply_factors(theta_fs, wp, wcap);
    acc = multi_mul(acc, multi_pow(theta, 1 - z)).truncated(wcap);
    acc = multi_mul(acc, multiply_factors(num_fs, wp, wcap)).truncated(wcap);
    acc = multi_mul(acc, multi_invert(multiply_factors(den_fs, wp, wcap))).truncated(wcap);
    return acc;
}

VerifyReport gamma_multiplication_check(int n, int z, long degree, bool all_base_r) {
    if (n < 2) throw BadParameter("multiplication theorem needs n >= 2");
    if (z < 1) throw BadParameter("multiplication theorem verified at integer z >= 1");
    int wp = n * z + 1;
    long wcap = static_cast<long>(wp) * degree;

    std::vector<WFactor> side1, side2;
    if (all_base_r) {
        // (q,q)inf C(nz;q) prod_{j=1..n-1} C(j/n;r)
        //   = (r,r)inf prod_{j=0..n-1} C(z+j/n;r), cross-multiplied.
        append_qq_inf(side1, 1, wcap);
        append_num(side1, 1, 1 - n * z, wp, wcap);
        for (int j = 1; j < n; ++j) append_num(side1, n, n - j, wp, wcap);
        for (int j = 0; j < n; ++j) append_den(side1, n, n * z + j, wp, wcap);

        append_qq_inf(side2, n, wcap);
        for (int j = 0; j < n; ++j) append_num(side2, n, n - n * z - j, wp, wcap);
        append_den(side2, 1, n * z, wp, wcap);
        for (int j = 1; j < n; ++j) append_den(side2, n, j, wp, wcap);
    } else {
        // theta(q;p)^{z-1} C(nz;q) prod_{j=1..n-1} C(j/n;r)
        //   = theta(r;p)^{z-1} C(z;q) prod_{j=1..n-1} C(z+j/n;r).
        for (int t = 0; t < z - 1; ++t) append_theta(side1, 1, wp, wcap);
        append_num(side1, 1, 1 - n * z, wp, wcap);
        for (int j = 1; j < n; ++j) append_num(side1, n, n - j, wp, wcap);
        append_den(side1, 1, z, wp, wcap);
        for (int j = 1; j < n; ++j) append_den(side1, n, n * z + j, wp, wcap);

        for (int t = 0; t < z - 1; ++t) append_theta(side2, n, wp, wcap);
        append_num(side2, 1, 1 - z, wp, wcap);
        for (int j = 1; j < n; ++j) append_num(side2, n, n - n * z - j, wp, wcap);
        append_den(side2, 1, n * z, wp, wcap);
        for (int j = 1; j < n; ++j) append_den(side2, n, j, wp, wcap);
    }

    MultiSeries lhs = multiply_factors(side1, wp, wcap);
    MultiSeries rhs = multiply_factors(side2, wp, wcap);
    std::string id = "EG-MULT-N" + std::to_string(n) + "-Z" + std::to_string(z);
    std::string note = all_base_r ? "uniform-base right-hand side" : "mixed-base right-hand side";
    return compare_weighted(id, lhs, rhs, degree, note);
}

VerifyReport gamma_duplication_check(int z, long degree) {
    VerifyReport r = gamma_multiplication_check(2, z, degree, true);
    r.id = "EG-DUP-Z" + std::to_string(z);
    return r;
}

VerifyReport gamma_triplication_check(int z, long degree) {
    VerifyReport r = gamma_multiplication_check(3, z, degree, true);
    r.id = "EG-TRIP-Z" + std::to_string(z);
    return r;
}

} // namespace qsv
