#pragma once

#include <vector>

#include "strebel/rational.hpp"
#include "strebel/series.hpp"

namespace strebel {

struct Stratum {
    std::vector<Rational> perimeters;  // L_1..L_M, M >= 3, all > 0
};

struct StratumVolume {
    Rational value;
    int degree = 0;  // homogeneous degree 2(M-3) in the perimeters
};

StratumVolume stratum_volume(const Stratum& s);
// Oracle: explicit sum over exponent tuples weighted by genus-0 intersection numbers.
Rational stratum_volume_bruteforce(const Stratum& s);

// Integers c_n with [w^n] I_0(sqrt w)^k = c_n / (4^n n!^2), n = 0..nmax.
std::vector<BigInt> i0_power_numerators(int k, int nmax);

// Z_{N+3}(L,...,L) / L^{2N}.
Rational volume_uniform(int N);
// Rows N = 0..n_max; the parallel version splits rows across threads.
std::vector<Rational> volume_table(int n_max);
std::vector<Rational> volume_table_serial(int n_max);

// L^2 d^2 Zhat / d mu^2 as an exact series in m = mu L^2.
Series d2Z_closed_series(int order);

// Coefficients of r^{2d}, d = 0..N, of f_N / L^{2N}.
std::vector<Rational> one_point_exact(int N);
std::vector<std::vector<Rational>> one_point_table(int n_max);  // rows N = 0..n_max, parallel
Rational one_point_eval(const std::vector<Rational>& poly, const Rational& r);
double one_point_log_eval(const std::vector<Rational>& poly, double r);

// (u^{2D} I_0^4 / (2 I_0 - u I_1))_+ in m, coefficients m^0..m^order.
Series positive_part_fD(int D, int order);
// The discarded coefficients of m^{-1}, m^{-2}, ..., m^{D} (empty for D >= 0).
std::vector<Rational> polar_part_fD(int D);

// Exact m-series of Zhat_n (L = 1, ratios L_i/L), coefficients m^0..m^order.
Series zhat_n_series(int n, const std::vector<Rational>& ratios, int order);

// Float Zhat_n at m in [0, m_c), L = 1, including the polar correction.
double zhat_n_closed(int n, const std::vector<double>& ratios, double m);
// Zhat_n * exp(-u_c sum_i ratios_i), usable when the ratios are huge.
double zhat_n_scaled(int n, const std::vector<double>& ratios, double m);

// d^{n-3}_mu ( mu^n L^{2n} [u^{-2n} I_0^4/(2I_0 - u I_1) prod (z_i^2 - u^2/L^2)^{-1/2}]_+ ).
// project = false skips the ( )_+ projection.
double F_n_kernel(int n, const std::vector<double>& z, double m, double L, bool project = true);
// Same object with the z_i given through zt_i^2 = z_i^2 - u^2/L^2 (no cancellation near the cut).
double F_n_kernel_tilde(int n, const std::vector<double>& zt, double m, double L,
                        bool project = true);
// d^3_mu F_n = d^n_mu of the unprojected bracket.
double d3F_n_kernel(int n, const std::vector<double>& z, double m, double L);

// One-point resummations; K0 = sum mu^N/N! f_N, dH/dmu = sum mu^{N+2}/(N+2)! f_N.
double one_point_K0(double m, double r);
double dH_dmu(double mu, double L, double L1, int kmax = 64);
double H_closed(double mu, double L, double L1, int kmax = 64);
// Partial sum of mu^{N+3}/(N+3)! f_N over N <= n_max, for cross-checks.
double H_series_partial(double mu, double L, double L1, int n_max);

}  // namespace strebel
