#include "qsv/zlaurent.hpp"

#include <algorithm>

namespace qsv {

ZLaurent::ZLaurent(long default_cap, int z_sanity)
    : default_cap_(default_cap), z_sanity_(z_sanity) {
    if (z_sanity < 1) throw BadParameter("z sanity bound must be positive");
}

ZLaurent ZLaurent::one(long cap, int z_sanity) {
    ZLaurent r(cap, z_sanity);
    r.set_slice(0, MultiSeries::constant(2, 1, MultiSeries::exact_cap), MultiSeries::exact_cap);
    return r;
}

ZLaurent ZLaurent::monomial(const Rat& c, int p_exp, int q_exp, int k, int z_sanity) {
    ZLaurent r(MultiSeries::exact_cap, z_sanity);
    r.set_slice(k, MultiSeries::laurent_monomial(2, c, {p_exp, q_exp}, MultiSeries::exact_cap),
                MultiSeries::exact_cap);
    return r;
}

void ZLaurent::check_range(int k) const {
    if (k > z_sanity_ || k < -z_sanity_)
        throw CapExceeded("z-exponent " + std::to_string(k) + " beyond the sanity bound");
}

long ZLaurent::cap_at(int k) const {
    auto it = slices_.find(k);
    return it == slices_.end() ? default_cap_ : it->second.cap;
}

MultiSeries ZLaurent::value_at(int k) const {
    auto it = slices_.find(k);
    return it == slices_.end() ? MultiSeries(2, default_cap_) : it->second.value;
}

long ZLaurent::mindeg_at(int k) const {
    // every slice lives in nonnegative (p, q) exponents, so zero always
    // lower-bounds the true minimum degree
    auto it = slices_.find(k);
    if (it == slices_.end()) return std::max(0L, default_cap_ + 1);
    if (it->second.value.is_zero()) return std::max(0L, it->second.cap + 1);
    return std::max(0L, it->second.value.min_degree());
}

void ZLaurent::set_slice(int k, MultiSeries value, long cap) {
    check_range(k);
    slices_[k] = Slice{value.truncated(cap), cap};
}

int ZLaurent::lowest_exponent() const {
    return slices_.empty() ? 0 : slices_.begin()->first;
}

int ZLaurent::highest_exponent() const {
    return slices_.empty() ? 0 : slices_.rbegin()->first;
}

namespace {

constexpr long zl_inf = MultiSeries::exact_cap;

// saturating: a cap at or above zl_inf means "no unknown tail at all"
long sat_add(long cap, long mindeg) {
    if (cap >= zl_inf || mindeg >= zl_inf) return zl_inf;
    return cap + mindeg;
}

} // namespace

ZLaurent zl_mul(const ZLaurent& a, const ZLaurent& b) {
    // Reliability bookkeeping.  The computed part of an output slice is the
    // convolution of the stored slices; everything else is pollution whose
    // starting degree is bounded below by one of five pair classes:
    //   P1/P2  unknown tail of a stored slice  x  content of the other side
    //   P3/P4  an unstored slice's content     x  a stored slice's content
    //   P5     unstored content on both sides.
    // The slice cap is the weakest applicable bound minus one.
    auto floor_of = [](long cap) { return cap >= zl_inf ? zl_inf : std::max(0L, cap + 1); };
    long floor_a = floor_of(a.default_cap());
    long floor_b = floor_of(b.default_cap());

    long stored_ma = zl_inf, stored_mb = zl_inf;
    for (const auto& [i, s] : a.slices()) stored_ma = std::min(stored_ma, a.mindeg_at(i));
    for (const auto& [j, s] : b.slices()) stored_mb = std::min(stored_mb, b.mindeg_at(j));

    long p5 = sat_add(floor_a, floor_b);
    long dflt = std::min({sat_add(stored_ma, floor_b), sat_add(stored_mb, floor_a), p5});
    dflt = dflt >= zl_inf ? zl_inf : dflt - 1;

    int sanity = std::max(a.z_sanity(), b.z_sanity());
    if (a.slices().empty() || b.slices().empty()) return ZLaurent(dflt, sanity);

    int lo = a.lowest_exponent() + b.lowest_exponent();
    int hi = a.highest_exponent() + b.highest_exponent();
    std::vector<std::pair<int, ZLaurent::Slice>> staged;
    for (int k = lo; k <= hi; ++k) {
        // an unknown tail starts past the cap but never below degree zero
        auto tail = [](long cap) { return cap >= zl_inf ? zl_inf : std::max(0L, cap + 1); };
        long bound = p5;  // P5, conservatively assumed reachable
        for (const auto& [i, sa] : a.slices()) {
            long content_b = b.mindeg_at(k - i);
            bound = std::min(bound, sat_add(tail(sa.cap), content_b));  // P1
            if (b.slices().find(k - i) == b.slices().end())
                bound = std::min(bound, sat_add(a.mindeg_at(i), floor_b));  // P4
        }
        for (const auto& [j, sb] : b.slices()) {
            long content_a = a.mindeg_at(k - j);
            bound = std::min(bound, sat_add(tail(sb.cap), content_a));  // P2
            if (a.slices().find(k - j) == a.slices().end())
                bound = std::min(bound, sat_add(b.mindeg_at(j), floor_a));  // P3
        }
        long cap = bound >= zl_inf ? zl_inf : bound - 1;

        MultiSeries acc(2, cap);
        for (const auto& [i, sa] : a.slices()) {
            auto it = b.slices().find(k - i);
            if (it == b.slices().end()) continue;
            acc = multi_add(acc.truncated(cap),
                            multi_mul(sa.value, it->second.value).truncated(cap));
        }
        if (k < -sanity || k > sanity) {
            // outside the working range: computed content must not be lost,
            // and a weakened claim folds into the default
            if (!acc.is_zero())
                throw CapExceeded("z-exponent " + std::to_string(k) +
                                  " beyond the sanity bound");
            dflt = std::min(dflt, cap);
            continue;
        }
        staged.emplace_back(k, ZLaurent::Slice{acc.truncated(cap), cap});
    }
    // every in-range slice keeps its own computed cap, empty or not, so the
    // (possibly much weaker) default only covers the far outside
    ZLaurent r(dflt, sanity);
    for (auto& [k, s] : staged) r.set_slice(k, s.value, s.cap);
    return r;
}

namespace {

// Substituted images shift each slice's reliable degree by a slice-dependent
// amount, so a single default cap cannot cover the unstored slices honestly.
// Materialize every slice inside the sanity window with its own cap (empty
// slices included) and claim nothing beyond it.
constexpr long no_claim = -(1L << 28);

} // namespace

ZLaurent zl_subst_scale_z(const ZLaurent& a, int dp, int dq) {
    ZLaurent r(no_claim, a.z_sanity());
    for (int k = -a.z_sanity(); k <= a.z_sanity(); ++k) {
        long cap = a.cap_at(k) + static_cast<long>(k) * (dp + dq);
        auto it = a.slices().find(k);
        MultiSeries v(2, cap);
        if (it != a.slices().end()) {
            for (const auto& [key, c] : it->second.value.terms()) {
                MultiSeries::Key nk{key[0] + k * dp, key[1] + k * dq};
                if (nk[0] < 0 || nk[1] < 0)
                    throw BadParameter("z-scale substitution needs divisible slices");
                v.add_term(nk, c);
            }
        }
        r.set_slice(k, v, cap);
    }
    return r;
}

ZLaurent zl_subst_pq_over_z(const ZLaurent& a) {
    ZLaurent r(no_claim, a.z_sanity());
    for (int k = -a.z_sanity(); k <= a.z_sanity(); ++k) {
        long cap = a.cap_at(k) + 2L * k;
        auto it = a.slices().find(k);
        MultiSeries v(2, cap);
        if (it != a.slices().end()) {
            for (const auto& [key, c] : it->second.value.terms()) {
                MultiSeries::Key nk{key[0] + k, key[1] + k};
                if (nk[0] < 0 || nk[1] < 0)
                    throw BadParameter("pq/z substitution needs divisible slices");
                v.add_term(nk, c);
            }
        }
        r.set_slice(-k, v, cap);
    }
    return r;
}

ZLaurent zl_set_p_zero(const ZLaurent& a) {
    ZLaurent r(a.default_cap(), a.z_sanity());
    for (const auto& [k, s] : a.slices()) {
        MultiSeries v(2, s.value.cap());
        for (const auto& [key, c] : s.value.terms())
            if (key[0] == 0) v.add_term(key, c);
        if (!v.is_zero() || s.cap < a.default_cap()) r.set_slice(k, v, s.cap);
    }
    return r;
}

ZMismatch zl_compare(const ZLaurent& a, const ZLaurent& b, int z_window, long degree) {
    ZMismatch m;
    for (int k = -z_window; k <= z_window; ++k) {
        if (a.cap_at(k) < degree || b.cap_at(k) < degree)
            throw CapExceeded("slice z^" + std::to_string(k) +
                              " not reliable through the requested degree");
        MultiSeries va = a.value_at(k), vb = b.value_at(k);
        for (const auto& [key, c] : va.terms()) {
            if (va.degree_of(key) > degree) continue;
            if (vb.coeff(key) != c)
                return ZMismatch{k, key, c, vb.coeff(key), true};
        }
        for (const auto& [key, c] : vb.terms()) {
            if (vb.degree_of(key) > degree) continue;
            if (va.coeff(key) != c)
                return ZMismatch{k, key, va.coeff(key), c, true};
        }
    }
    // Slices outside the window but inside sanity must also agree where both
    // sides claim knowledge; mismatches there count too.
    int lo = std::min(a.lowest_exponent(), b.lowest_exponent());
    int hi = std::max(a.highest_exponent(), b.highest_exponent());
    for (int k = lo; k <= hi; ++k) {
        if (k >= -z_window && k <= z_window) continue;
        long d = std::min({a.cap_at(k), b.cap_at(k), degree});
        MultiSeries va = a.value_at(k), vb = b.value_at(k);
        for (const auto& [key, c] : va.terms()) {
            if (va.degree_of(key) > d) continue;
            if (vb.coeff(key) != c) return ZMismatch{k, key, c, vb.coeff(key), true};
        }
        for (const auto& [key, c] : vb.terms()) {
            if (vb.degree_of(key) > d) continue;
            if (va.coeff(key) != c) return ZMismatch{k, key, va.coeff(key), c, true};
        }
    }
    return m;
}

} // namespace qsv
