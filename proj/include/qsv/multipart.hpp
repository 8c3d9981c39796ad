#pragma once

#include <functional>
#include <optional>

#include "qsv/identities.hpp"
#include "qsv/multiseries.hpp"

namespace qsv {

/// Ring setup for the vector-partition generating functions: variables are
/// ordered q_1..q_n, a, t under a total-degree cap.
struct VecPartEnv {
    int n = 0;
    long degree_cap = 6;
};

/// F_n(q_1..q_n; a, t) = prod_{alpha >= 0} (1 - q^alpha a t)/(1 - q^alpha t);
/// F_0 degenerates to (1-at)/(1-t).
MultiSeries vecpart_F(const VecPartEnv& env);

/// Coefficient of t^k as a series in (q_1..q_n, a).
MultiSeries vecpart_coefficients(const VecPartEnv& env, int k);

/// The alternating functional equation: over all subsets S of the variables,
/// prod_{|S| even} F(q_S t) / prod_{|S| odd} F(q_S t) = (1-at)/(1-t),
/// verified cross-multiplied.
VerifyReport vecpart_functional_check(int n, long degree_cap);

/// Setting q_n = 0 reduces F_n to F_{n-1}.
VerifyReport vecpart_reduction_check(int n, long degree_cap);

/// Data for the quadratic-form fermionic sums:
/// f = sum_m q^{(mBm - Am)/2} prod_alpha [((1-B)m + u/2)_alpha, m_alpha].
struct FermionicData {
    int nspecies = 1;
    std::vector<std::vector<Rat>> B;
    std::vector<Rat> A;
    std::vector<std::optional<Rat>> u;  // nullopt = infinite
    std::function<bool(const std::vector<long>&)> restriction;  // null = accept all
    std::vector<long> m_bound;  // optional explicit per-species bound
};

/// Truncated fermionic sum.  Species with u = infinity contribute 1/(q)_m;
/// finite u uses the extended Gaussian binomial.  The m-sum is cut off where
/// the quadratic form outruns the order; without a usable diagonal bound an
/// explicit m_bound is required.
Series fermionic_sum(const FermionicData& data, int order);

/// Momentum window for one species, in units of pi/M.
struct MomentumWindow {
    Rat p_min;
    std::optional<Rat> p_max;      // absent for u = infinity
    std::optional<Rat> slot_count; // (p_max - p_min)/2 + 1 when defined
};

/// P_min = ((B-1)m - A + 1)_alpha and P_max = -P_min + (u/2 - A)_alpha,
/// exactly as stated, in pi/M units.
std::vector<MomentumWindow> momentum_window(const FermionicData& data,
                                            const std::vector<long>& m);

/// Structural fermion check: for small windows, the generating function of
/// distinct-slot selections by total momentum equals q^{min} [slots, j]_q.
VerifyReport momentum_window_check(long max_L);

} // namespace qsv
