#pragma once

#include "qsv/identities.hpp"
#include "qsv/zlaurent.hpp"

namespace qsv {

/// The two-base gamma function as a z-Laurent expansion, regularized: the
/// returned value is prod_{(m,n) != (0,0)} (1 - p^{m+1}q^{n+1}/z)/(1 - p^m q^n z),
/// i.e. the full function times its (1 - z) pole factor.  The checks below
/// carry the pole polynomially, which keeps every z-slice finite.
ZLaurent elliptic_gamma_core(long pq_cap, int z_sanity);

/// theta in the z variable: prod_{n>=0} (1 - s^n z)(1 - s^{n+1}/z) with base
/// s = p or q.  `skip_first` drops the n = 0 factor (mutation-test hook).
ZLaurent theta_zlaurent(ThetaBase base, long pq_cap, int z_sanity, bool skip_first = false);

/// Gamma(z) * Gamma(pq/z) = 1, checked as core(z) * core(pq/z) = (1-z)(1-pq/z)
/// with the second factor obtained by substitution on the expansion.
VerifyReport gamma_reflection_check(int zcap, long degree);

/// Gamma(pz) = theta(z;q) Gamma(z) and Gamma(qz) = theta(z;p) Gamma(z),
/// cross-multiplied by the pole factors.
VerifyReport gamma_shift_check(ThetaBase shift_base, int zcap, long degree);

/// Gamma(z; 0, q) * (z; q)_inf = 1.
VerifyReport gamma_p_zero_check(int zcap, long degree);

/// Regularized tilde-gamma at integer z >= 1 with base r = q^base_exp:
/// ((r,r)_inf/(p,p)_inf) * theta(r;p)^{1-z} * prod (1-p^{m+1}r^{nu+1-z})/(1-p^m r^{nu+z}).
/// Returned in the weighted grading wt(p) = base_exp*z+1, wt(q) = 1, under
/// which every factor has positive degree; coefficients can carry negative
/// q-exponents.
MultiSeries tilde_gamma(int z, int base_exp, long degree);

/// The multiplication theorem at r = q^n and integer z >= 1, verified in the
/// integerized cross-multiplied form (fractional theta powers cancel
/// exactly between the two sides).  Two printed readings of the right-hand
/// side circulate; `all_base_r` selects the one whose first factor also has
/// base r.
VerifyReport gamma_multiplication_check(int n, int z, long degree, bool all_base_r);

VerifyReport gamma_duplication_check(int z, long degree);
VerifyReport gamma_triplication_check(int z, long degree);

} // namespace qsv
