#include "qsv/registry.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "qsv/ellgamma.hpp"
#include "qsv/hardhex.hpp"
#include "qsv/multipart.hpp"
#include "qsv/qfunctions.hpp"

namespace qsv {

namespace {

VerifyReport merge(const std::string& id, long order, std::vector<VerifyReport> parts) {
    VerifyReport r;
    r.id = id;
    r.order = order;
    r.pass = true;
    std::ostringstream note;
    for (const auto& p : parts) {
        if (!p.pass && r.pass) {
            r.pass = false;
            r.first_mismatch = p.first_mismatch;
        }
        if (!p.note.empty()) {
            if (note.tellp() > 0) note << "; ";
            note << p.note;
        }
    }
    r.note = note.str();
    return r;
}

VerifyReport rr_triple(int a, long order) {
    int k = static_cast<int>(order);
    Series sum = rr_sum_side(a, k);
    Series prod = rr_product_side(a, k);
    Series alt = rr_alternating_side(a, k);
    std::string id = "RR-TRIPLE-" + std::to_string(a);
    VerifyReport r1 = compare_series(id, sum, prod, k, "sum vs product");
    VerifyReport r2 = compare_series(id, sum, alt, k, "sum vs bosonic");
    VerifyReport r3 = compare_series(id, prod, alt, k, "product vs bosonic");
    VerifyReport out = merge(id, order, {r1, r2, r3});
    out.coefficients = r1.coefficients;
    out.note = "all three members pairwise";
    if (!r1.pass) out.note = "sum vs product mismatch";
    if (!r2.pass) out.note = "sum vs bosonic mismatch";
    if (!r3.pass) out.note = "product vs bosonic mismatch";
    return out;
}

VerifyReport regimeII_check(RegimeII which, const std::string& id, long order) {
    int k = static_cast<int>(order);
    return compare_series(id, regimeII_sum(which, k), regimeII_product(which, k), k);
}

VerifyReport poly_sweep(PolyVariant v, const std::string& id, long max_n) {
    for (int n = 0; n <= max_n; ++n) {
        VerifyReport r = poly_identity(v, n);
        if (!r.pass) {
            r.id = id;
            r.order = max_n;
            return r;
        }
    }
    VerifyReport r;
    r.id = id;
    r.order = max_n;
    r.pass = true;
    r.note = "all sizes through " + std::to_string(max_n);
    return r;
}

VerifyReport poly_729(long max_l) {
    VerifyReport r;
    r.id = "POLY-729";
    r.order = max_l;
    r.pass = true;
    for (int a = 0; a <= 1 && r.pass; ++a) {
        for (int L = 0; L <= max_l && r.pass; ++L) {
            Series f = finite_poly_F(L, a);
            Series b = finite_poly_B(L, a);
            VerifyReport c = compare_series("POLY-729", f, b, f.order(),
                                            "L=" + std::to_string(L) + " a=" + std::to_string(a));
            if (!c.pass) {
                c.order = max_l;
                return c;
            }
        }
    }
    r.note = "both families agree for all L through " + std::to_string(max_l);
    return r;
}

VerifyReport duality_723(long max_m) {
    // Reversing the finite first-family polynomials stabilizes onto the
    // square-ordering sum sides: even sizes onto RIV-3, odd onto RIV-1,
    // reliable through degree floor(N/2).
    VerifyReport r;
    r.id = "DUALITY-723";
    r.order = max_m;
    r.pass = true;
    int n_max = static_cast<int>(3 * max_m + 2);
    Series even_target = regime_sum_side("RIV-3", n_max);
    Series odd_target = regime_sum_side("RIV-1", n_max);
    for (int n = 4; n <= n_max; ++n) {
        Series rev = reverse_polynomial(poly_lhs(PolyVariant::P723, n));
        const Series& target = n % 2 == 0 ? even_target : odd_target;
        int prefix = n / 2;
        VerifyReport c = compare_series("DUALITY-723", rev.padded(prefix).truncated(prefix),
                                        target.truncated(prefix), prefix,
                                        "N=" + std::to_string(n));
        if (!c.pass) {
            c.order = max_m;
            return c;
        }
    }
    r.note = "reversed polynomials stabilize onto the partner sum sides";
    return r;
}

VerifyReport hh_counts(long) {
    VerifyReport r;
    r.id = "HH-COUNTS";
    r.pass = true;
    // transfer DP against brute force on every torus within the oracle bound
    for (auto [rows, cols] : {std::pair{4, 4}, {4, 5}, {5, 4}, {4, 6}, {6, 4}}) {
        TriangularTorus t(rows, cols);
        OccupancyCounts dp = count_configs(t);
        OccupancyCounts bf = count_configs_brute(t);
        if (dp.g != bf.g) {
            r.pass = false;
            r.note = "transfer and brute force disagree on " + std::to_string(rows) + "x" +
                     std::to_string(cols);
            return r;
        }
    }
    // closed forms for the small occupation numbers
    for (int rows = 4; rows <= 6; ++rows) {
        for (int cols = 4; cols <= 8; ++cols) {
            TriangularTorus t(rows, cols);
            OccupancyCounts c = count_configs(t);
            long n = t.sites();
            if (c.g[0] != 1 || c.g[1] != n || 2 * c.g[2] != Int(n) * (n - 7)) {
                r.pass = false;
                r.note = "g[0..2] closed forms failed on " + std::to_string(rows) + "x" +
                         std::to_string(cols);
                return r;
            }
        }
    }
    r.note = "transfer = brute force (N <= 24); g[1] = N and 2 g[2] = N(N-7) on 4x4..6x8";
    return r;
}

VerifyReport hh_kappa(long order) {
    int k = static_cast<int>(order);
    Series kappa = kappa_series_lowz(k);
    Series expected{std::vector<Rat>{1, 1, -3}};
    VerifyReport r1 = compare_series("HH-KAPPA", kappa.truncated(std::min(k, 2)),
                                     expected.truncated(std::min(k, 2)), std::min(k, 2));
    Series parametric = solution_lowz(k + 4).kappa_of_z;
    VerifyReport r2 = compare_series("HH-KAPPA", kappa, parametric.truncated(k), k);
    VerifyReport out = merge("HH-KAPPA", order, {r1, r2});
    out.coefficients = r2.coefficients;
    out.note = "enumeration route = 1 + z - 3z^2 + ... and matches the parametric series";
    return out;
}

VerifyReport hh_rho_low(long order) {
    int k = static_cast<int>(order);
    LowActivitySolution sol = solution_lowz(k);
    Series pinned{std::vector<Rat>{0, 1, -7, 58, -519, 4856}};
    VerifyReport r1 = compare_series("HH-RHO-LOW", sol.rho_of_z.truncated(5), pinned, 5);
    // rho = z dlog(kappa)/dz
    Series dlog = mul(sol.kappa_of_z.derivative(),
                      invert(sol.kappa_of_z.truncated(k - 1))).shifted(1);
    VerifyReport r2 = compare_series("HH-RHO-LOW", sol.rho_of_z.truncated(k - 1),
                                     dlog.truncated(k - 1), k - 1);
    Series enumerated = rho_series_lowz_enumeration(4);
    VerifyReport r3 = compare_series("HH-RHO-LOW", sol.rho_of_z.truncated(4), enumerated, 4);
    VerifyReport out = merge("HH-RHO-LOW", order, {r1, r2, r3});
    out.coefficients = r1.coefficients;
    out.note =
        "reversion route = z - 7z^2 + 58z^3 - 519z^4 + 4856z^5; equals z dlog(kappa)/dz and the "
        "finite-torus densities (the circulated all-minus-signs variant of this expansion "
        "disagrees with both pipelines at z^3)";
    return out;
}

VerifyReport hh_high(long order) {
    int k = static_cast<int>(order);
    HighActivitySolution sol = solution_highz(k);
    // The first five coefficients match every circulated printing; the w^5
    // ones (-2270 here) are where the two copy variants -2037/965 fail the
    // functional-equation oracle below.
    Series pinned{std::vector<Rat>{1, -1, -5, -34, -267, -2270}};
    VerifyReport r1 = compare_series("HH-HIGH", sol.rho1_of_w.truncated(5), pinned, 5,
                                     "close-packed perturbation");
    VerifyReport r2 = compare_series("HH-HIGH", sub(sol.rho1_of_x, sol.rho2_of_x),
                                     sol.big_r_of_x, k, "R = rho1 - rho2 as products");
    // Oracle: mean density (rho1 + 2 rho2)/3 must equal z dlog(kappa)/dz,
    // entirely in the x variable, with kappa^3 = u^3/x.  This ties the
    // density products to the independent kappa product block.
    int kk = k - 1;
    Series mean = add(sol.rho1_of_x, sol.rho2_of_x.scaled(2)).scaled(Rat(1, 3));
    Series v(kk);  // w = x v
    for (int d = 0; d <= kk; ++d) v.set_coeff(d, sol.w_of_x.coeff(d + 1));
    Series u3 = sol.kappa_cubed_num_of_x;
    Series x_du_over_u = mul(u3.derivative(), invert(u3.truncated(kk))).shifted(1).truncated(kk);
    Series num = add(Series::constant(-1, kk), x_du_over_u);  // dlog(kappa^3) * x
    Series denom = add(v, v.derivative().shifted(1).truncated(kk));  // v + x v'
    Series zdlog = mul(mul(v.truncated(kk), num), invert(denom)).scaled(Rat(-1, 3));
    VerifyReport r3 = compare_series("HH-HIGH", mean.truncated(kk), zdlog, kk,
                                     "density products vs the kappa block");
    bool rho2_ok = sol.rho2_of_w.min_degree() == 2;
    VerifyReport out = merge("HH-HIGH", order, {r1, r2, r3});
    if (!rho2_ok) out.pass = false;
    out.coefficients = r1.coefficients;
    out.note = "rho1 = 1 - w - 5w^2 - 34w^3 - 267w^4 - 2270w^5 and rho2 = w^2 + 9w^3 + 80w^4 + "
               "732w^5 by both routes; the circulated fifth coefficients -2037/965 satisfy "
               "neither, and the per-site relation forces the 1/3-power prefactor of kappa "
               "onto 1/x rather than x; R identity to order " + std::to_string(k);
    return out;
}

VerifyReport hh_exponent_pattern(long) {
    Series z_of_x = solution_lowz(30).z_of_x;
    // -z/x, then peel exponents
    Series f(29);
    for (int d = 0; d <= 29; ++d) f.set_coeff(d, -z_of_x.coeff(d + 1));
    std::vector<long> cs = extract_product_exponents(f);
    static const long pattern[5] = {5, -5, -5, 5, 0};
    VerifyReport r;
    r.id = "HH-EXPONENT-PATTERN";
    r.order = 29;
    r.pass = true;
    for (size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] != pattern[i % 5]) {
            r.pass = false;
            r.first_mismatch = FirstMismatch{static_cast<long>(i + 1), Rat(cs[i]),
                                             Rat(pattern[i % 5])};
            break;
        }
        r.coefficients.push_back(Rat(cs[i]));
    }
    r.note = "product exponents of -z/x repeat 5,-5,-5,5,0";
    return r;
}

VerifyReport hh_zc(long) {
    CriticalActivityReport c = critical_activity();
    VerifyReport r;
    r.id = "HH-ZC";
    r.pass = c.phi_fifth_power_matches && c.golden_ratio_law && c.decimal == "11.09017";
    r.note = "z_c = (11+5*sqrt5)/2 = phi^5 = " + c.decimal;
    return r;
}

VerifyReport ferm_rr_inf(long order) {
    int k = static_cast<int>(order);
    VerifyReport parts[2];
    for (int a = 0; a <= 1; ++a) {
        FermionicData d;
        d.nspecies = 1;
        d.B = {{2}};
        d.A = {Rat(-2 * a)};
        d.u = {std::nullopt};
        parts[a] = compare_series("FERM-RR-INF", fermionic_sum(d, k), rr_sum_side(a, k), k,
                                  "a=" + std::to_string(a));
    }
    VerifyReport r = merge("FERM-RR-INF", order, {parts[0], parts[1]});
    r.note = "quadratic-form sum with u = infinity equals both linear-denominator sums";
    return r;
}

VerifyReport ferm_rr_poly(long max_l) {
    VerifyReport r;
    r.id = "FERM-RR-POLY";
    r.order = max_l;
    r.pass = true;
    for (int a = 0; a <= 1; ++a) {
        for (int L = a; L <= max_l; ++L) {
            Series f = finite_poly_F(L, a);
            FermionicData d;
            d.nspecies = 1;
            d.B = {{2}};
            d.A = {Rat(-2 * a)};
            d.u = {Rat(2 * (L - a))};
            Series fs = fermionic_sum(d, f.order());
            VerifyReport c = compare_series("FERM-RR-POLY", fs, f, f.order(),
                                            "L=" + std::to_string(L) + " a=" + std::to_string(a));
            if (!c.pass) {
                c.order = max_l;
                return c;
            }
        }
    }
    r.note = "finite-u data reproduces the bounded polynomials for all L through " +
             std::to_string(max_l);
    return r;
}

std::vector<CheckSpec> build_registry() {
    std::vector<CheckSpec> v;
    auto series_check = [&](const std::string& id, const std::string& desc, long order,
                            std::function<VerifyReport(long)> f) {
        v.push_back(CheckSpec{id, desc, order, std::move(f)});
    };

    for (const char* id : {"RI-1", "RI-2", "RIII-1", "RIII-2", "RIV-1", "RIV-2", "RIV-3",
                           "RIV-4"}) {
        series_check(id, "sum-product identity (disordered/square regimes)", 60,
                     [id](long k) { return regime_identity(id, static_cast<int>(k)); });
    }
    struct RIIRow { RegimeII which; const char* id; };
    for (auto [which, id] : {RIIRow{RegimeII::F1_0, "RII-F1-0"}, RIIRow{RegimeII::F1_1, "RII-F1-1"},
                             RIIRow{RegimeII::F2_0, "RII-F2-0"}, RIIRow{RegimeII::F2_1, "RII-F2-1"},
                             RIIRow{RegimeII::F3_0, "RII-F3-0"}, RIIRow{RegimeII::F3_1, "RII-F3-1"}})
        series_check(id, "triangular-ordering double-sum vs product combination", 60,
                     [which, id](long k) { return regimeII_check(which, id, k); });

    series_check("RR-TRIPLE-0", "Rogers-Ramanujan triple equality, a=0", 100, [](long k) {
        return rr_triple(0, k);
    });
    series_check("RR-TRIPLE-1", "Rogers-Ramanujan triple equality, a=1", 100, [](long k) {
        return rr_triple(1, k);
    });

    series_check("POLY-720", "first finite double-sum family", 40,
                 [](long n) { return poly_sweep(PolyVariant::P720, "POLY-720", n); });
    series_check("POLY-721", "second finite double-sum family", 40,
                 [](long n) { return poly_sweep(PolyVariant::P721, "POLY-721", n); });
    series_check("POLY-723", "first finite single-sum family", 40,
                 [](long n) { return poly_sweep(PolyVariant::P723, "POLY-723", n); });
    series_check("POLY-724", "second finite single-sum family", 40,
                 [](long n) { return poly_sweep(PolyVariant::P724, "POLY-724", n); });
    series_check("POLY-729", "bounded-row polynomials vs bilateral alternating sums", 40,
                 poly_729);
    series_check("DUALITY-723", "coefficient reversal onto the square-ordering sums", 12,
                 duality_723);

    series_check("HH-COUNTS", "lattice-gas counting: transfer vs brute force and closed forms",
                 0, hh_counts);
    series_check("HH-KAPPA", "per-site partition function from enumeration vs products", 4,
                 hh_kappa);
    series_check("HH-RHO-LOW", "low-activity density series, three routes", 30, hh_rho_low);
    series_check("HH-HIGH", "high-activity densities and the R identity", 30, hh_high);
    series_check("HH-EXPONENT-PATTERN", "period-5 product exponents of the activity map", 29,
                 hh_exponent_pattern);
    series_check("HH-ZC", "critical activity as a golden-ratio power", 0, hh_zc);

    series_check("EG-REFLECT", "two-base gamma reflection", 10,
                 [](long d) { return gamma_reflection_check(6, d); });
    series_check("EG-SHIFT-P", "two-base gamma p-shift", 10,
                 [](long d) { return gamma_shift_check(ThetaBase::q, 6, d); });
    series_check("EG-SHIFT-Q", "two-base gamma q-shift", 10,
                 [](long d) { return gamma_shift_check(ThetaBase::p, 6, d); });
    series_check("EG-P0", "two-base gamma p = 0 degeneration", 10,
                 [](long d) { return gamma_p_zero_check(6, d); });
    for (int n = 2; n <= 3; ++n)
        for (int z = 1; z <= 3; ++z) {
            std::string id = "EG-MULT-N" + std::to_string(n) + "-Z" + std::to_string(z);
            series_check(id, "multiplication theorem specialization", 8, [n, z](long d) {
                return gamma_multiplication_check(n, z, d, true);
            });
        }
    for (int z = 1; z <= 2; ++z) {
        series_check("EG-DUP-Z" + std::to_string(z), "duplication formula", 8,
                     [z](long d) { return gamma_duplication_check(z, d); });
        series_check("EG-TRIP-Z" + std::to_string(z), "triplication formula", 8,
                     [z](long d) { return gamma_triplication_check(z, d); });
    }

    series_check("VP-FUNC-1", "alternating functional equation, one variable", 8,
                 [](long c) { return vecpart_functional_check(1, c); });
    series_check("VP-FUNC-2", "alternating functional equation, two variables", 7,
                 [](long c) { return vecpart_functional_check(2, c); });
    series_check("VP-FUNC-3", "alternating functional equation, three variables", 6,
                 [](long c) { return vecpart_functional_check(3, c); });
    series_check("VP-FUNC-4", "alternating functional equation, four variables", 5,
                 [](long c) { return vecpart_functional_check(4, c); });
    for (int n = 2; n <= 4; ++n)
        series_check("VP-REDUCE-" + std::to_string(n), "variable-elimination reduction", 6,
                     [n](long c) { return vecpart_reduction_check(n, c); });

    series_check("FERM-RR-INF", "quadratic-form sum, unbounded data", 40, ferm_rr_inf);
    series_check("FERM-RR-POLY", "quadratic-form sum, bounded data", 20, ferm_rr_poly);
    series_check("MW-STRUCT", "momentum-window selection generating functions", 12,
                 momentum_window_check);
    return v;
}

} // namespace

const std::vector<CheckSpec>& check_registry() {
    static const std::vector<CheckSpec> reg = build_registry();
    return reg;
}

VerifyReport run_check(const std::string& id, std::optional<long> order) {
    for (const auto& spec : check_registry()) {
        if (spec.id == id) {
            long k = order && *order > 0 ? *order : spec.default_order;
            return spec.run(k);
        }
    }
    throw UnknownIdentity(id);
}

std::vector<VerifyReport> run_all_checks(int jobs) {
    const auto& reg = check_registry();
    std::vector<VerifyReport> out(reg.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < reg.size(); ++i) out[i] = reg[i].run(reg[i].default_order);
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= reg.size()) break;
            out[i] = reg[i].run(reg[i].default_order);
        }
    };
    std::vector<std::future<void>> futs;
    for (int j = 0; j < jobs; ++j) futs.push_back(std::async(std::launch::async, worker));
    for (auto& f : futs) f.get();
    return out;
}

const std::vector<std::string>& expandable_names() {
    static const std::vector<std::string> names = {
        "G",          "H",           "P",          "Q",          "rr-sum-0",  "rr-sum-1",
        "rr-prod-0",  "rr-prod-1",   "rr-alt-0",   "rr-alt-1",   "f1-0",      "f1-1",
        "f2-0",       "f2-1",        "f3-0",       "f3-1",       "z-of-x",    "x-of-z",
        "rho-low",    "rho-low-x",   "kappa-low",  "kappa-low-parametric",    "w-of-x",
        "rho1-high",  "rho2-high",   "R-high",     "w-kappa3-high"};
    return names;
}

Series expand_function(const std::string& name, int order) {
    if (name == "G") return expand_named(NamedProductId::G, order);
    if (name == "H") return expand_named(NamedProductId::H, order);
    if (name == "P") return expand_named(NamedProductId::P, order);
    if (name == "Q") return expand_named(NamedProductId::Q, order);
    if (name == "rr-sum-0") return rr_sum_side(0, order);
    if (name == "rr-sum-1") return rr_sum_side(1, order);
    if (name == "rr-prod-0") return rr_product_side(0, order);
    if (name == "rr-prod-1") return rr_product_side(1, order);
    if (name == "rr-alt-0") return rr_alternating_side(0, order);
    if (name == "rr-alt-1") return rr_alternating_side(1, order);
    if (name == "f1-0") return regimeII_sum(RegimeII::F1_0, order);
    if (name == "f1-1") return regimeII_sum(RegimeII::F1_1, order);
    if (name == "f2-0") return regimeII_sum(RegimeII::F2_0, order);
    if (name == "f2-1") return regimeII_sum(RegimeII::F2_1, order);
    if (name == "f3-0") return regimeII_sum(RegimeII::F3_0, order);
    if (name == "f3-1") return regimeII_sum(RegimeII::F3_1, order);
    if (name == "z-of-x") return solution_lowz(order).z_of_x;
    if (name == "x-of-z") return solution_lowz(order).x_of_z;
    if (name == "rho-low") return solution_lowz(order).rho_of_z;
    if (name == "rho-low-x") return solution_lowz(order).rho_of_x;
    if (name == "kappa-low") return kappa_series_lowz(order);
    if (name == "kappa-low-parametric") return solution_lowz(order).kappa_of_z;
    if (name == "w-of-x") return solution_highz(order).w_of_x;
    if (name == "rho1-high") return solution_highz(order).rho1_of_w;
    if (name == "rho2-high") return solution_highz(order).rho2_of_w;
    if (name == "R-high") return solution_highz(order).big_r_of_x;
    if (name == "w-kappa3-high") return solution_highz(order).w_kappa_cubed_of_w;
    throw BadParameter("unknown expandable function: " + name);
}

} // namespace qsv
