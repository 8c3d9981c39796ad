#include "qsv/multipart.hpp"

#include <algorithm>

namespace qsv {

namespace {

/// Every multi-index alpha with |alpha| <= bound, ordered lexicographically.
void enumerate_indices(int n, long bound, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(cur.size()) == n) {
        emit(cur);
        return;
    }
    for (int v = 0; v <= bound; ++v) {
        cur.push_back(v);
        enumerate_indices(n, bound - v, cur, emit);
        cur.pop_back();
    }
}

} // namespace

MultiSeries vecpart_F(const VecPartEnv& env) {
    if (env.n < 0) throw BadParameter("vecpart_F needs n >= 0");
    int arity = env.n + 2;  // q_1..q_n, a, t
    long cap = env.degree_cap;
    int a_slot = env.n;
    int t_slot = env.n + 1;

    MultiSeries acc = MultiSeries::constant(arity, 1, cap);
    std::vector<int> cur;
    enumerate_indices(env.n, cap - 1, cur, [&](const std::vector<int>& alpha) {
        long alpha_deg = 0;
        for (int v : alpha) alpha_deg += v;
        // numerator binomial (1 - q^alpha a t)
        MultiSeries::Key num_key(static_cast<size_t>(arity), 0);
        std::copy(alpha.begin(), alpha.end(), num_key.begin());
        num_key[static_cast<size_t>(a_slot)] = 1;
        num_key[static_cast<size_t>(t_slot)] = 1;
        if (alpha_deg + 2 <= cap) {
            MultiSeries bin(arity, MultiSeries::exact_cap);
            bin.add_term(MultiSeries::Key(static_cast<size_t>(arity), 0), 1);
            bin.add_term(num_key, -1);
            acc = multi_mul(acc, bin).truncated(cap);
        }
        // denominator 1/(1 - q^alpha t) as a geometric series
        MultiSeries geo(arity, MultiSeries::exact_cap);
        MultiSeries::Key step(num_key);
        step[static_cast<size_t>(a_slot)] = 0;
        for (long k = 0; k * (alpha_deg + 1) <= cap; ++k) {
            MultiSeries::Key kk(static_cast<size_t>(arity), 0);
            for (size_t i = 0; i < kk.size(); ++i) kk[i] = static_cast<int>(k) * step[i];
            geo.add_term(kk, 1);
        }
        acc = multi_mul(acc, geo.truncated(cap)).truncated(cap);
    });
    return acc;
}

MultiSeries vecpart_coefficients(const VecPartEnv& env, int k) {
    if (k < 0 || k > env.degree_cap) throw BadParameter("coefficient index beyond the cap");
    VecPartEnv wide{env.n, env.degree_cap + k};
    MultiSeries f = vecpart_F(wide);
    return slice_variable(f, env.n + 1, k);
}

namespace {

MultiSeries subst_t_by_subset(const MultiSeries& f, int n, unsigned subset) {
    int arity = n + 2;
    long cap = f.cap();
    std::vector<MultiSeries> assign;
    assign.reserve(static_cast<size_t>(arity));
    for (int i = 0; i < n; ++i) assign.push_back(MultiSeries::variable(arity, i, cap));
    assign.push_back(MultiSeries::variable(arity, n, cap));  // a
    MultiSeries::Key tk(static_cast<size_t>(arity), 0);
    tk[static_cast<size_t>(n + 1)] = 1;
    for (int i = 0; i < n; ++i)
        if (subset >> i & 1u) tk[static_cast<size_t>(i)] = 1;
    assign.push_back(MultiSeries::monomial(arity, 1, tk, MultiSeries::exact_cap));
    return multi_substitute(f, assign);
}

} // namespace

VerifyReport vecpart_functional_check(int n, long degree_cap) {
    MultiSeries f = vecpart_F(VecPartEnv{n, degree_cap});
    int arity = n + 2;
    MultiSeries even = MultiSeries::constant(arity, 1, degree_cap);
    MultiSeries odd = MultiSeries::constant(arity, 1, degree_cap);
    for (unsigned subset = 0; subset < (1u << n); ++subset) {
        MultiSeries fs = subst_t_by_subset(f, n, subset);
        if (__builtin_popcount(subset) % 2 == 0)
            even = multi_mul(even, fs).truncated(degree_cap);
        else
            odd = multi_mul(odd, fs).truncated(degree_cap);
    }
    // even/odd = (1-at)/(1-t), cross-multiplied
    MultiSeries one_minus_t(arity, MultiSeries::exact_cap);
    one_minus_t.add_term(MultiSeries::Key(static_cast<size_t>(arity), 0), 1);
    MultiSeries::Key tk(static_cast<size_t>(arity), 0);
    tk[static_cast<size_t>(n + 1)] = 1;
    one_minus_t.add_term(tk, -1);
    MultiSeries one_minus_at(arity, MultiSeries::exact_cap);
    one_minus_at.add_term(MultiSeries::Key(static_cast<size_t>(arity), 0), 1);
    MultiSeries::Key atk(tk);
    atk[static_cast<size_t>(n)] = 1;
    one_minus_at.add_term(atk, -1);

    MultiSeries lhs = multi_mul(even, one_minus_t).truncated(degree_cap);
    MultiSeries rhs = multi_mul(odd, one_minus_at).truncated(degree_cap);

    VerifyReport r;
    r.id = "VP-FUNC-" + std::to_string(n);
    r.order = degree_cap;
    r.pass = multi_equal(lhs, rhs);
    if (!r.pass) {
        for (const auto& [k, c] : lhs.terms()) {
            if (rhs.coeff(k) != c) {
                r.first_mismatch = FirstMismatch{lhs.degree_of(k), c, rhs.coeff(k)};
                break;
            }
        }
        if (!r.first_mismatch)
            for (const auto& [k, c] : rhs.terms())
                if (lhs.coeff(k) != c) {
                    r.first_mismatch = FirstMismatch{rhs.degree_of(k), lhs.coeff(k), c};
                    break;
                }
    }
    r.note = "alternating subset product vs (1-at)/(1-t), cross-multiplied";
    return r;
}

VerifyReport vecpart_reduction_check(int n, long degree_cap) {
    if (n < 1) throw BadParameter("reduction check needs n >= 1");
    MultiSeries fn = vecpart_F(VecPartEnv{n, degree_cap});
    MultiSeries reduced = drop_variable(set_variable_zero(fn, n - 1), n - 1);
    MultiSeries fn1 = vecpart_F(VecPartEnv{n - 1, degree_cap});
    VerifyReport r;
    r.id = "VP-REDUCE-" + std::to_string(n);
    r.order = degree_cap;
    r.pass = multi_equal(reduced, fn1);
    r.note = "q_n = 0 reduces F_n to F_{n-1}";
    return r;
}

Series fermionic_sum(const FermionicData& data, int order) {
    int n = data.nspecies;
    if (n < 1) throw BadParameter("fermionic_sum needs at least one species");
    if (static_cast<int>(data.B.size()) != n || static_cast<int>(data.A.size()) != n ||
        static_cast<int>(data.u.size()) != n)
        throw BadParameter("fermionic data dimensions disagree");

    // Per-species bounds: explicit, or derived from the diagonal when the
    // row's off-diagonal entries cannot lower the exponent.
    std::vector<long> bound = data.m_bound;
    if (bound.empty()) {
        bound.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            if (data.B[i][i] <= 0)
                throw UnboundedSum("species " + std::to_string(i) +
                                   " has no positive diagonal; pass an explicit bound");
            for (int j = 0; j < n; ++j)
                if (j != i && data.B[i][j] < 0)
                    throw UnboundedSum("negative off-diagonal coupling; pass an explicit bound");
            // (B m^2 - A m)/2 is increasing past its vertex; run to where it
            // outruns the order.
            auto expo = [&](long x) -> Rat { return (data.B[i][i] * x * x - data.A[i] * x) / 2; };
            Rat vertex = data.A[i] / (2 * data.B[i][i]);
            long past = static_cast<long>(Int(vertex.get_num() / vertex.get_den()).get_si()) + 2;
            long mb = 0;
            while (mb <= past || expo(mb) <= order) ++mb;
            bound[static_cast<size_t>(i)] = mb;
        }
    }

    Series acc = Series::zero(order);
    std::vector<long> m(static_cast<size_t>(n), 0);
    while (true) {
        if (!data.restriction || data.restriction(m)) {
            // exponent (mBm - Am)/2
            Rat e = 0;
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) e += data.B[i][j] * m[i] * m[j];
                e -= data.A[i] * m[i];
            }
            e /= 2;
            if (!is_integer(e))
                throw NonIntegerExponent("fermionic exponent " + to_string(e) +
                                         " is not an integer");
            if (e < 0) throw BadParameter("fermionic exponent dips below zero");
            long ei = e.get_num().get_si();
            if (ei <= order) {
                int rest = order - static_cast<int>(ei);
                Series term = Series::one(rest);
                bool zero = false;
                for (int i = 0; i < n && !zero; ++i) {
                    if (!data.u[i]) {
                        term = mul(term, invert(pochhammer(qpow(1), m[i], rest)));
                        continue;
                    }
                    // top = ((1-B)m + u/2)_i
                    Rat top = Rat(m[i]) + *data.u[i] / 2;
                    for (int j = 0; j < n; ++j) top -= data.B[i][j] * m[j];
                    if (!is_integer(top))
                        throw NonIntegerExponent("binomial top entry " + to_string(top) +
                                                 " is not an integer");
                    Series b = gauss_binom_extended(top.get_num().get_si(), m[i], rest);
                    if (b.is_zero()) zero = true;
                    term = mul(term, b);
                }
                if (!zero) acc = add(acc, term.shifted(static_cast<int>(ei)));
            }
        }
        // advance the multi-index
        int pos = 0;
        while (pos < n) {
            if (++m[static_cast<size_t>(pos)] <= bound[static_cast<size_t>(pos)]) break;
            m[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return acc;
}

VerifyReport momentum_window_check(long max_L) {
    VerifyReport r;
    r.id = "MW-STRUCT";
    r.order = max_L;
    r.pass = true;
    for (long L = 6; L <= max_L && r.pass; L += 2) {
        FermionicData d;
        d.nspecies = 1;
        d.B = {{2}};
        d.A = {0};
        d.u = {Rat(2 * L)};
        for (long j = 0; j <= 3 && r.pass; ++j) {
            auto w = momentum_window(d, {j}).at(0);
            if (!w.slot_count || !is_integer(*w.slot_count)) continue;
            long slots = w.slot_count->get_num().get_si();
            if (slots < j || slots > 12) continue;
            // enumerate j distinct slots out of `slots`, tallying the total
            // offset above the packed minimum (in window-step units)
            std::vector<Rat> gf(static_cast<size_t>(j * (slots - j)) + 1);
            std::vector<int> pick(static_cast<size_t>(j));
            std::function<void(int, int, long)> rec = [&](int idx, int from, long total) {
                if (idx == j) {
                    gf[static_cast<size_t>(total)] += 1;
                    return;
                }
                for (int s = from; s < static_cast<int>(slots); ++s)
                    rec(idx + 1, s + 1, total + s);
            };
            long packed = j * (j - 1) / 2;
            rec(0, 0, -packed);
            Series got{std::vector<Rat>(gf)};
            const Series& want = gauss_binom_poly(static_cast<int>(slots), static_cast<int>(j));
            if (!(got == want.padded(got.order()))) {
                r.pass = false;
                r.note = "selection generating function disagrees at L=" + std::to_string(L) +
                         " j=" + std::to_string(j);
            }
            // span of the q-binomial: (slots-1)j - j(j-1), the distinctness law
            long span = (slots - 1) * j - j * (j - 1);
            if (span != j * (slots - j)) {
                r.pass = false;
                r.note = "window span law failed";
            }
        }
    }
    if (r.pass)
        r.note = "distinct-slot selections match q-binomials on every window tested";
    return r;
}

std::vector<MomentumWindow> momentum_window(const FermionicData& data,
                                            const std::vector<long>& m) {
    int n = data.nspecies;
    if (static_cast<int>(m.size()) != n) throw BadParameter("m has wrong dimension");
    std::vector<MomentumWindow> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rat bm = 0;  // ((B-1)m)_i
        for (int j = 0; j < n; ++j) bm += data.B[i][j] * m[j];
        bm -= m[i];
        MomentumWindow w;
        w.p_min = bm - data.A[i] + 1;
        if (data.u[i]) {
            w.p_max = -w.p_min + (*data.u[i] / 2 - data.A[i]);
            w.slot_count = (*w.p_max - w.p_min) / 2 + 1;
        }
        out[static_cast<size_t>(i)] = w;
    }
    return out;
}

} // namespace qsv
