#include "qsv/hardhex.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <tuple>

#include "qsv/qfunctions.hpp"

namespace qsv {

TriangularTorus::TriangularTorus(int r, int c) : rows(r), cols(c) {
    if (r < 4 || c < 4) throw BadParameter("torus needs rows, cols >= 4");
}

namespace {

unsigned rotate_up(unsigned mask, int rows) {
    unsigned full = (1u << rows) - 1;
    return ((mask << 1) | (mask >> (rows - 1))) & full;
}

/// Independent row profiles: no two cyclically adjacent bits.
std::vector<unsigned> column_profiles(int rows) {
    std::vector<unsigned> out;
    unsigned full = (1u << rows) - 1;
    for (unsigned m = 0; m <= full; ++m)
        if ((m & rotate_up(m, rows)) == 0) out.push_back(m);
    return out;
}

using Poly = std::vector<Int>;  // coefficients in z

void add_shifted(Poly& dst, const Poly& src, int shift) {
    for (size_t i = 0; i < src.size(); ++i) {
        if (src[i] == 0) continue;
        size_t j = i + static_cast<size_t>(shift);
        if (j < dst.size()) dst[j] += src[i];
    }
}

} // namespace

OccupancyCounts count_configs(const TriangularTorus& t, const HardHexBounds& bounds) {
    if (t.rows > bounds.max_rows || t.cols > bounds.max_cols)
        throw SizeTooLarge("torus exceeds the configured transfer bound");
    int rows = t.rows, cols = t.cols;
    int max_n = t.sites() / 3;
    auto profiles = column_profiles(rows);
    size_t np = profiles.size();
    std::vector<size_t> index(1u << rows, SIZE_MAX);
    for (size_t i = 0; i < np; ++i) index[profiles[i]] = i;

    // compat[a][b]: columns a, b may sit side by side.
    std::vector<std::vector<char>> compat(np, std::vector<char>(np));
    for (size_t a = 0; a < np; ++a)
        for (size_t b = 0; b < np; ++b)
            compat[a][b] = (profiles[a] & (profiles[b] | rotate_up(profiles[b], rows))) == 0;

    std::vector<int> weight(np);
    for (size_t i = 0; i < np; ++i) weight[i] = __builtin_popcount(profiles[i]);

    OccupancyCounts out;
    out.sites = t.sites();
    out.g.assign(static_cast<size_t>(max_n) + 1, Int(0));

    // trace of T^cols, accumulated per fixed first profile
    for (size_t s = 0; s < np; ++s) {
        std::vector<Poly> v(np, Poly(static_cast<size_t>(max_n) + 1, Int(0)));
        v[s][0] = 1;
        for (int step = 0; step < cols; ++step) {
            std::vector<Poly> nv(np, Poly(static_cast<size_t>(max_n) + 1, Int(0)));
            for (size_t a = 0; a < np; ++a) {
                bool live = false;
                for (const Int& c : v[a])
                    if (c != 0) { live = true; break; }
                if (!live) continue;
                for (size_t b = 0; b < np; ++b) {
                    if (!compat[a][b]) continue;
                    if (weight[b] > max_n) continue;
                    add_shifted(nv[b], v[a], weight[b]);
                }
            }
            v.swap(nv);
        }
        for (size_t n = 0; n < out.g.size(); ++n) out.g[n] += v[s][n];
    }
    return out;
}

OccupancyCounts count_configs_brute(const TriangularTorus& t, const HardHexBounds& bounds) {
    int n_sites = t.sites();
    if (n_sites > bounds.brute_max_sites)
        throw SizeTooLarge("torus exceeds the brute-force bound");
    auto at = [&](int i, int j) {
        int ii = ((i % t.rows) + t.rows) % t.rows;
        int jj = ((j % t.cols) + t.cols) % t.cols;
        return ii * t.cols + jj;
    };
    std::vector<unsigned long> nbr(static_cast<size_t>(n_sites), 0);
    for (int i = 0; i < t.rows; ++i) {
        for (int j = 0; j < t.cols; ++j) {
            int s = at(i, j);
            for (auto [di, dj] : std::array<std::pair<int, int>, 6>{
                     {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}})
                nbr[static_cast<size_t>(s)] |= 1UL << at(i + di, j + dj);
        }
    }
    OccupancyCounts out;
    out.sites = n_sites;
    out.g.assign(static_cast<size_t>(n_sites / 3) + 1, Int(0));
    // Depth-first over sites; banned carries the exclusion zone placed so far.
    std::vector<std::tuple<int, unsigned long, int>> stack;
    stack.emplace_back(0, 0UL, 0);
    while (!stack.empty()) {
        auto [pos, banned, placed] = stack.back();
        stack.pop_back();
        if (pos == n_sites) {
            out.g[static_cast<size_t>(placed)] += 1;
            continue;
        }
        stack.emplace_back(pos + 1, banned, placed);  // leave empty
        if (!(banned >> pos & 1UL) && placed + 1 <= n_sites / 3)
            stack.emplace_back(pos + 1, banned | nbr[static_cast<size_t>(pos)] | (1UL << pos),
                               placed + 1);
    }
    return out;
}

Series grand_partition(const TriangularTorus& t, const HardHexBounds& bounds) {
    OccupancyCounts c = count_configs(t, bounds);
    Series z(static_cast<int>(c.g.size()) - 1);
    for (size_t n = 0; n < c.g.size(); ++n) z.set_coeff(static_cast<int>(n), Rat(c.g[n]));
    return z;
}

namespace {

/// Ladder of torus sizes used for the thermodynamic stabilization checks.
const std::vector<std::pair<int, int>>& size_ladder() {
    static const std::vector<std::pair<int, int>> ladder = {
        {4, 4}, {5, 5}, {6, 6}, {7, 7}, {8, 8}, {8, 9}};
    return ladder;
}

HardHexBounds ladder_bounds() { return HardHexBounds{9, 16, 24}; }

Series per_site_log_z(const TriangularTorus& t, int order) {
    Series z = grand_partition(t, ladder_bounds()).padded(order);
    return log_series(z).scaled(Rat(1, t.sites()));
}

Series per_site_density(const TriangularTorus& t, int order) {
    Series z = grand_partition(t, ladder_bounds()).padded(order + 1);
    Series num = z.derivative().shifted(1);  // z * Z'(z)
    return mul(num, invert(z.truncated(order))).scaled(Rat(1, t.sites()));
}

/// Per-coefficient stabilization across the ladder: accept coefficient k once
/// two successive sizes agree and both dimensions of both sizes exceed k+1.
/// Ladder entries are evaluated lazily (the big tori only when needed).
Series stabilize(int order, const std::function<Series(const TriangularTorus&, int)>& f) {
    const auto& ladder = size_ladder();
    std::vector<std::optional<Series>> values(ladder.size());
    auto value = [&](size_t i) -> const Series& {
        if (!values[i]) values[i] = f(TriangularTorus(ladder[i].first, ladder[i].second), order);
        return *values[i];
    };
    Series out(order);
    for (int k = 0; k <= order; ++k) {
        bool found = false;
        for (size_t i = 0; i + 1 < ladder.size() && !found; ++i) {
            auto [r1, c1] = ladder[i];
            auto [r2, c2] = ladder[i + 1];
            if (std::min({r1, c1, r2, c2}) <= k + 1) continue;
            if (value(i).coeff(k) == value(i + 1).coeff(k)) {
                out.set_coeff(k, value(i).coeff(k));
                found = true;
            }
        }
        if (!found)
            throw NoStabilization("coefficient z^" + std::to_string(k) +
                                  " did not stabilize on the configured ladder");
    }
    return out;
}

} // namespace

Series kappa_series_lowz(int order) {
    if (order > 6) throw BadParameter("kappa_series_lowz supports order <= 6");
    Series log_kappa = stabilize(order, per_site_log_z);
    return exp_series(log_kappa);
}

Series rho_series_lowz_enumeration(int order) {
    if (order > 6) throw BadParameter("rho_series_lowz_enumeration supports order <= 6");
    return stabilize(order, per_site_density);
}

namespace {

ProductSpec kappa_lowz_spec() {
    ProductSpec s = named_product(NamedProductId::H).powered(3);
    s.times(named_product(NamedProductId::Q).stretched(5).powered(2));
    s.times(named_product(NamedProductId::G).powered(-2));
    s.factor(1, 2, 6, 1).factor(1, 3, 6, 2).factor(1, 4, 6, 1);
    s.factor(1, 1, 6, -1).factor(1, 5, 6, -1).factor(1, 6, 6, -2);
    return s;
}

ProductSpec h_over_g_fifth() {
    ProductSpec s = named_product(NamedProductId::H).powered(5);
    s.times(named_product(NamedProductId::G).powered(-5));
    return s;
}

} // namespace

LowActivitySolution solution_lowz(int order) {
    if (order > 64) throw BadParameter("solution_lowz supports order <= 64");
    LowActivitySolution sol;
    sol.z_of_x = h_over_g_fifth().expand(order - 1).shifted(1).scaled(-1);

    sol.kappa_of_x = kappa_lowz_spec().expand(order);

    ProductSpec rho = named_product(NamedProductId::G);
    rho.times(named_product(NamedProductId::H).stretched(6));
    rho.times(named_product(NamedProductId::P).stretched(3));
    rho.times(named_product(NamedProductId::P).powered(-1));
    sol.rho_of_x = rho.expand(order - 1).shifted(1).scaled(-1);

    sol.x_of_z = reversion(sol.z_of_x);
    sol.kappa_of_z = compose(sol.kappa_of_x, sol.x_of_z);
    sol.rho_of_z = compose(sol.rho_of_x, sol.x_of_z);
    return sol;
}

HighActivitySolution solution_highz(int order) {
    if (order > 64) throw BadParameter("solution_highz supports order <= 64");
    HighActivitySolution sol;
    sol.w_of_x = h_over_g_fifth().expand(order - 1).shifted(1);
    sol.x_of_w = reversion(sol.w_of_x);

    auto Q = [](int k) { return named_product(NamedProductId::Q).stretched(k); };
    auto H = [](int k) { return named_product(NamedProductId::H).stretched(k); };

    // rho1 = H*Q*(G*Q + x^2 H(x^9) Q(x^9)) / Q(x^3)^2, split into the two
    // product terms; the second one alone is rho2.
    ProductSpec t1 = named_product(NamedProductId::H);
    t1.times(named_product(NamedProductId::Q));
    t1.times(named_product(NamedProductId::G));
    t1.times(named_product(NamedProductId::Q));
    t1.times(Q(3).powered(-2));

    ProductSpec t2 = named_product(NamedProductId::H);
    t2.times(named_product(NamedProductId::Q));
    t2.times(H(9));
    t2.times(Q(9));
    t2.times(Q(3).powered(-2));

    Series term1 = t1.expand(order);
    Series term2 = t2.expand(std::max(0, order - 2)).shifted(2).truncated(order);
    sol.rho1_of_x = add(term1, term2);
    sol.rho2_of_x = term2;

    ProductSpec r_spec = named_product(NamedProductId::Q);
    r_spec.times(Q(5));
    r_spec.times(Q(3).powered(-2));
    sol.big_r_of_x = r_spec.expand(order);

    ProductSpec kc = named_product(NamedProductId::G).powered(3);
    kc.times(Q(5).powered(2));
    kc.times(named_product(NamedProductId::H).powered(-2));
    kc.factor(1, 1, 3, 1).factor(1, 2, 3, 1).factor(1, 3, 3, -2);
    sol.kappa_cubed_num_of_x = kc.powered(3).expand(order);

    sol.rho1_of_w = compose(sol.rho1_of_x, sol.x_of_w);
    sol.rho2_of_w = compose(sol.rho2_of_x, sol.x_of_w);
    // w * kappa^3 = u^3(x(w)) * (w / x(w)); x = w + O(w^2) keeps it regular.
    Series x_over_w(order - 1);
    for (int d = 0; d < order; ++d) x_over_w.set_coeff(d, sol.x_of_w.coeff(d + 1));
    sol.w_kappa_cubed_of_w =
        mul(compose(sol.kappa_cubed_num_of_x, sol.x_of_w).truncated(order - 1),
            invert(x_over_w));
    return sol;
}

CriticalActivityReport critical_activity() {
    CriticalActivityReport rep;
    SqrtFive phi{Rat(1, 2), Rat(1, 2)};
    SqrtFive phi2 = phi * phi;
    SqrtFive phi5 = phi2 * phi2 * phi;
    rep.phi_fifth_power_matches = phi5 == SqrtFive{Rat(11, 2), Rat(5, 2)};
    SqrtFive phi_plus_one{phi.a + 1, phi.b};
    rep.golden_ratio_law = phi2 == phi_plus_one;

    // Certified 5-place rounding of (11 + 5 sqrt5)/2 via integer sqrt bounds.
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 24);
    Int lo_sqrt;
    mpz_sqrt(lo_sqrt.get_mpz_t(), Int(5 * scale * scale).get_mpz_t());
    Rat lo = (Rat(11) + 5 * Rat(lo_sqrt) / Rat(scale)) / 2;
    Rat hi = (Rat(11) + 5 * (Rat(lo_sqrt) + 1) / Rat(scale)) / 2;
    auto round5 = [](const Rat& x) {
        Rat scaled = x * 100000 + Rat(1, 2);
        Int f = scaled.get_num() / scaled.get_den();
        return f;
    };
    Int rl = round5(lo), rh = round5(hi);
    if (rl != rh) throw Error("critical activity rounding not certified");
    std::string digits = rl.get_str();
    rep.decimal = digits.substr(0, digits.size() - 5) + "." + digits.substr(digits.size() - 5);
    return rep;
}

} // namespace qsv
