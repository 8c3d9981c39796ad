#include "qsv/multiseries.hpp"

#include <algorithm>
#include <sstream>

namespace qsv {

namespace {
long clamp_cap(long c) { return std::min(c, MultiSeries::exact_cap); }
} // namespace

MultiSeries::MultiSeries(int arity, long cap)
    : arity_(arity), cap_(clamp_cap(cap)), weights_(static_cast<size_t>(arity), 1) {
    if (arity < 0) throw BadParameter("negative arity");
}

MultiSeries::MultiSeries(int arity, long cap, std::vector<int> weights)
    : arity_(arity), cap_(clamp_cap(cap)), weights_(std::move(weights)) {
    if (arity < 0) throw BadParameter("negative arity");
    if (weights_.size() != static_cast<size_t>(arity)) throw BadParameter("weight count != arity");
    for (int w : weights_)
        if (w < 1) throw BadParameter("weights must be positive");
}

MultiSeries MultiSeries::constant(int arity, const Rat& c, long cap) {
    MultiSeries m(arity, cap);
    m.add_term(Key(static_cast<size_t>(arity), 0), c);
    return m;
}

MultiSeries MultiSeries::variable(int arity, int index, long cap) {
    Key k(static_cast<size_t>(arity), 0);
    k.at(static_cast<size_t>(index)) = 1;
    return monomial(arity, 1, std::move(k), cap);
}

MultiSeries MultiSeries::monomial(int arity, const Rat& c, Key exps, long cap) {
    for (int e : exps)
        if (e < 0) throw BadParameter("monomial exponent must be >= 0");
    MultiSeries m(arity, cap);
    if (exps.size() != static_cast<size_t>(arity)) throw ArityMismatch();
    m.add_term(exps, c);
    return m;
}

MultiSeries MultiSeries::laurent_monomial(int arity, const Rat& c, Key exps, long cap,
                                          std::vector<int> weights) {
    if (weights.empty()) weights.assign(static_cast<size_t>(arity), 1);
    MultiSeries m(arity, cap, std::move(weights));
    if (exps.size() != static_cast<size_t>(arity)) throw ArityMismatch();
    m.add_term(exps, c);
    return m;
}

long MultiSeries::degree_of(const Key& k) const {
    long d = 0;
    for (size_t i = 0; i < k.size(); ++i) d += static_cast<long>(weights_[i]) * k[i];
    return d;
}

long MultiSeries::min_degree() const {
    long m = cap_ + 1;
    for (const auto& [k, c] : terms_) m = std::min(m, degree_of(k));
    return m;
}

bool MultiSeries::has_negative_exponents() const {
    for (const auto& [k, c] : terms_)
        for (int e : k)
            if (e < 0) return true;
    return false;
}

Rat MultiSeries::coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MultiSeries::add_term(const Key& k, const Rat& c) {
    if (k.size() != static_cast<size_t>(arity_)) throw ArityMismatch();
    if (c == 0 || degree_of(k) > cap_) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiSeries MultiSeries::truncated(long new_cap) const {
    MultiSeries m(arity_, std::min(new_cap, cap_), weights_);
    for (const auto& [k, c] : terms_)
        if (degree_of(k) <= m.cap_) m.terms_.emplace(k, c);
    return m;
}

MultiSeries MultiSeries::scaled(const Rat& c) const {
    MultiSeries m(arity_, cap_, weights_);
    if (c == 0) return m;
    for (const auto& [k, v] : terms_) m.terms_.emplace(k, v * c);
    return m;
}

std::string MultiSeries::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << to_string(c);
        for (size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            out << "*" << (i < names.size() ? names[i] : "v" + std::to_string(i));
            if (k[i] != 1) out << "^" << k[i];
        }
    }
    return out.str();
}

namespace {

void require_compatible(const MultiSeries& a, const MultiSeries& b) {
    if (a.arity() != b.arity()) throw ArityMismatch();
    if (a.weights() != b.weights()) throw BadParameter("mismatched gradings");
}

MultiSeries constant_like(const MultiSeries& a, const Rat& c, long cap) {
    MultiSeries m(a.arity(), cap, a.weights());
    m.add_term(MultiSeries::Key(static_cast<size_t>(a.arity()), 0), c);
    return m;
}

} // namespace

MultiSeries multi_add(const MultiSeries& a, const MultiSeries& b) {
    require_compatible(a, b);
    MultiSeries r(a.arity(), std::min(a.cap(), b.cap()), a.weights());
    for (const auto& [k, c] : a.terms()) r.add_term(k, c);
    for (const auto& [k, c] : b.terms()) r.add_term(k, c);
    return r;
}

MultiSeries multi_sub(const MultiSeries& a, const MultiSeries& b) {
    require_compatible(a, b);
    MultiSeries r(a.arity(), std::min(a.cap(), b.cap()), a.weights());
    for (const auto& [k, c] : a.terms()) r.add_term(k, c);
    for (const auto& [k, c] : b.terms()) r.add_term(k, -c);
    return r;
}

MultiSeries multi_mul(const MultiSeries& a, const MultiSeries& b) {
    require_compatible(a, b);
    // Unknown terms of one operand meet known terms of the other at degree
    // > cap + min_degree, which bounds what the product can claim.
    long cap = std::min(a.cap() + b.min_degree(), b.cap() + a.min_degree());
    MultiSeries r(a.arity(), cap, a.weights());
    MultiSeries::Key k(static_cast<size_t>(a.arity()));
    for (const auto& [ka, ca] : a.terms()) {
        long da = a.degree_of(ka);
        for (const auto& [kb, cb] : b.terms()) {
            if (da + b.degree_of(kb) > r.cap()) continue;
            for (size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
            r.add_term(k, ca * cb);
        }
    }
    return r;
}

MultiSeries multi_pow(const MultiSeries& a, long e) {
    if (e < 0) return multi_invert(multi_pow(a, -e));
    MultiSeries r(a.arity(), a.cap(), a.weights());
    r.add_term(MultiSeries::Key(static_cast<size_t>(a.arity()), 0), 1);
    MultiSeries base = a;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1UL) r = multi_mul(r, base);
        n >>= 1UL;
        if (n > 0) base = multi_mul(base, base);
    }
    return r;
}

MultiSeries multi_invert(const MultiSeries& a) {
    if (a.min_degree() < 0) throw BadParameter("cannot invert: negative minimum degree");
    MultiSeries::Key zero(static_cast<size_t>(a.arity()), 0);
    Rat c0 = a.coeff(zero);
    if (c0 == 0) throw ZeroConstantTerm();
    for (const auto& [k, c] : a.terms())
        if (k != zero && a.degree_of(k) == 0)
            throw BadParameter("cannot invert: nonconstant degree-0 part");
    // b = (1/c0) * sum_k r^k with r = 1 - a/c0 (min degree >= 1).
    MultiSeries r = multi_sub(constant_like(a, 1, a.cap()), a.scaled(1 / c0)).truncated(a.cap());
    MultiSeries acc = constant_like(a, 1, a.cap());
    MultiSeries rp = r;
    while (!rp.is_zero()) {
        acc = multi_add(acc, rp);
        rp = multi_mul(rp, r).truncated(a.cap());
    }
    return acc.scaled(1 / c0);
}

MultiSeries multi_substitute(const MultiSeries& a, const std::vector<MultiSeries>& assignments) {
    if (assignments.size() != static_cast<size_t>(a.arity())) throw ArityMismatch();
    if (assignments.empty()) return a;
    int out_arity = assignments[0].arity();
    const auto& out_weights = assignments[0].weights();
    long cap = a.cap();
    for (const auto& s : assignments) {
        if (s.arity() != out_arity || s.weights() != out_weights) throw ArityMismatch();
        if (s.min_degree() < 1)
            throw BadParameter("substitution value must have minimum degree >= 1");
        cap = std::min(cap, s.cap());
    }
    auto out_constant = [&](const Rat& c) {
        MultiSeries m(out_arity, cap, out_weights);
        m.add_term(MultiSeries::Key(static_cast<size_t>(out_arity), 0), c);
        return m;
    };
    // Cache powers of each assignment as needed.
    std::vector<std::vector<MultiSeries>> powers(assignments.size());
    auto power_of = [&](size_t var, int e) -> const MultiSeries& {
        auto& tab = powers[var];
        if (tab.empty()) tab.push_back(out_constant(1));
        while (static_cast<int>(tab.size()) <= e)
            tab.push_back(multi_mul(tab.back(), assignments[var]).truncated(cap));
        return tab[static_cast<size_t>(e)];
    };
    MultiSeries r(out_arity, cap, out_weights);
    for (const auto& [k, c] : a.terms()) {
        MultiSeries term = out_constant(c);
        for (size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            if (k[i] < 0) throw BadParameter("cannot substitute into a negative exponent");
            term = multi_mul(term, power_of(i, k[i]));
        }
        r = multi_add(r, term.truncated(cap));
    }
    return r;
}

bool multi_equal(const MultiSeries& a, const MultiSeries& b) {
    if (a.arity() != b.arity() || a.weights() != b.weights()) return false;
    long cap = std::min(a.cap(), b.cap());
    for (const auto& [k, c] : a.terms()) {
        if (a.degree_of(k) > cap) continue;
        if (b.coeff(k) != c) return false;
    }
    for (const auto& [k, c] : b.terms()) {
        if (b.degree_of(k) > cap) continue;
        if (a.coeff(k) != c) return false;
    }
    return true;
}

MultiSeries set_variable_zero(const MultiSeries& a, int index) {
    MultiSeries r(a.arity(), a.cap(), a.weights());
    for (const auto& [k, c] : a.terms())
        if (k.at(static_cast<size_t>(index)) == 0) r.add_term(k, c);
    return r;
}

MultiSeries drop_variable(const MultiSeries& a, int index) {
    std::vector<int> w = a.weights();
    w.erase(w.begin() + index);
    MultiSeries r(a.arity() - 1, a.cap(), std::move(w));
    for (const auto& [k, c] : a.terms()) {
        if (k.at(static_cast<size_t>(index)) != 0)
            throw BadParameter("drop_variable: variable still in use");
        MultiSeries::Key nk(k);
        nk.erase(nk.begin() + index);
        r.add_term(nk, c);
    }
    return r;
}

MultiSeries slice_variable(const MultiSeries& a, int index, int k) {
    std::vector<int> w = a.weights();
    int wk = w.at(static_cast<size_t>(index));
    w.erase(w.begin() + index);
    MultiSeries r(a.arity() - 1, a.cap() - static_cast<long>(wk) * k, std::move(w));
    for (const auto& [key, c] : a.terms()) {
        if (key.at(static_cast<size_t>(index)) != k) continue;
        MultiSeries::Key nk(key);
        nk.erase(nk.begin() + index);
        r.add_term(nk, c);
    }
    return r;
}

} // namespace qsv
