#pragma once

#include <string>
#include <vector>

#include "qsv/series.hpp"

namespace qsv {

/// Triangular lattice wrapped on a torus; every site has the six neighbours
/// (i+-1,j), (i,j+-1), (i+1,j-1), (i-1,j+1), all mod (rows, cols).
/// rows, cols >= 4 keeps the adjacency simple (no self loops or double edges).
struct TriangularTorus {
    int rows;
    int cols;

    TriangularTorus(int r, int c);
    int sites() const { return rows * cols; }
};

/// g[n] = number of ways to place n mutually non-adjacent particles.
struct OccupancyCounts {
    std::vector<Int> g;
    int sites = 0;
};

struct HardHexBounds {
    int max_rows = 6;
    int max_cols = 16;
    int brute_max_sites = 24;
};

/// Exact counts by a column-by-column bitmask transfer over admissible row
/// profiles, with the torus wrap handled by summing over the fixed first
/// profile.
OccupancyCounts count_configs(const TriangularTorus& t, const HardHexBounds& bounds = {});

/// Subset-enumeration oracle, limited to small tori.
OccupancyCounts count_configs_brute(const TriangularTorus& t, const HardHexBounds& bounds = {});

/// Z(z) = sum_n g[n] z^n as an exact polynomial in z.
Series grand_partition(const TriangularTorus& t, const HardHexBounds& bounds = {});

/// kappa(z) = lim Z^{1/N}: per-site free energy from growing tori, accepting
/// the z^k coefficient once two successive ladder sizes agree with both
/// dimensions > k+1.  Throws NoStabilization when the ladder is exhausted.
Series kappa_series_lowz(int order);

/// Mean density z * d/dz log(Z) / N from the same stabilization ladder.
Series rho_series_lowz_enumeration(int order);

struct LowActivitySolution {
    Series z_of_x;
    Series kappa_of_x;
    Series rho_of_x;
    Series x_of_z;
    Series kappa_of_z;
    Series rho_of_z;
};

/// Small-z parametric solution: z = -x H^5/G^5, kappa and rho as modular
/// products in x, inverted to series in z by reversion.
LowActivitySolution solution_lowz(int order);

struct HighActivitySolution {
    Series w_of_x;                 // w = 1/z = x H^5 / G^5
    Series x_of_w;
    Series rho1_of_x;
    Series rho2_of_x;
    Series big_r_of_x;             // R = rho1 - rho2 = Q(x)Q(x^3)^{-2}Q(x^5)
    Series kappa_cubed_num_of_x;   // u^3 with kappa^3 = u^3 / x
    Series rho1_of_w;
    Series rho2_of_w;
    Series w_kappa_cubed_of_w;     // w * kappa^3, a power series with constant 1
};

/// Large-z solution in w = 1/z.  kappa is carried as kappa^3 = u^3/x where u
/// is the modular product block: the cube removes the 1/3-power prefactor and
/// the numerator form keeps everything inside the power-series ring (kappa^3
/// itself opens at 1/w).  The 1/x direction of the prefactor is forced by the
/// per-site density relation; see the high-activity verification report.
HighActivitySolution solution_highz(int order);

/// Elements a + b*sqrt(5) with exact rational a, b.
struct SqrtFive {
    Rat a;
    Rat b;
    friend SqrtFive operator*(const SqrtFive& x, const SqrtFive& y) {
        return SqrtFive{x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator==(const SqrtFive& x, const SqrtFive& y) = default;
};

struct CriticalActivityReport {
    bool phi_fifth_power_matches = false;  // phi^5 == (11+5*sqrt5)/2
    bool golden_ratio_law = false;         // phi^2 == phi + 1
    std::string decimal;                   // 5 decimal places, certified rounding
};

CriticalActivityReport critical_activity();

} // namespace qsv
