#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsv/qfunctions.hpp"
#include "qsv/series.hpp"

namespace qsv {

struct FirstMismatch {
    long degree = 0;
    Rat lhs;
    Rat rhs;
};

/// Outcome of one identity check.
struct VerifyReport {
    std::string id;
    long order = 0;
    bool pass = false;
    std::optional<FirstMismatch> first_mismatch;
    std::vector<Rat> coefficients;  // the verified common prefix, when meaningful
    std::string note;
};

/// Coefficientwise comparison through `order`, recording the first mismatch.
VerifyReport compare_series(const std::string& id, const Series& lhs, const Series& rhs,
                            int order, std::string note = "");

/// Sum side of the Rogers-Ramanujan pair: sum_n q^{n(n+a)} / (q)_n.
Series rr_sum_side(int a, int order);

/// Product side: 1 / prod (1-q^{5n-1-a})(1-q^{5n-4+a}).
Series rr_product_side(int a, int order);

/// Bosonic side: (1/(q)_inf) sum_m (q^{m(10m+1+2a)} - q^{(5m+2-a)(2m+1)})
/// over all integers m.  `drop_m` omits one index (mutation testing hook).
Series rr_alternating_side(int a, int order, std::optional<long> drop_m = std::nullopt);

/// Regime I/III/IV identity ids: RI-1 RI-2 RIII-1 RIII-2 RIV-1..RIV-4.
Series regime_sum_side(const std::string& id, int order);
Series regime_product_side(const std::string& id, int order);
VerifyReport regime_identity(const std::string& id, int order);

enum class RegimeII { F1_0, F1_1, F2_0, F2_1, F3_0, F3_1 };
RegimeII regimeII_from_string(const std::string& name);  // e.g. "F2(0)"

/// Double-sum sides of the regime II identities.
Series regimeII_sum(RegimeII which, int order);
/// Product sides (the F3 products coincide with the F2 ones).
Series regimeII_product(RegimeII which, int order);

/// F_a(L,q) = sum_n q^{n(n+a)} [L-n-a, n]_q, an exact polynomial.
Series finite_poly_F(int L, int a);
/// B_a(L,q) = sum_n (-1)^n q^{n(5n+1+2a)/2} [L, floor((L-5n-a)/2)]_q.
Series finite_poly_B(int L, int a);

enum class PolyVariant { P720, P721, P723, P724 };
PolyVariant poly_variant_from_string(const std::string& id);

Series poly_lhs(PolyVariant v, int N);
Series poly_rhs(PolyVariant v, int N);
/// Build both sides of a polynomial identity and compare them exactly.
VerifyReport poly_identity(PolyVariant v, int N);

/// q -> 1/q on a polynomial: reverse the coefficient list after dropping
/// trailing zeros (renormalized by the minimal power).
Series reverse_polynomial(const Series& poly);

/// Exact cached Gaussian binomial [n m]_q as a full polynomial.
const Series& gauss_binom_poly(int n, int m);

} // namespace qsv
