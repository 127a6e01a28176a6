#pragma once

#include <vector>

namespace strebel {

// log of C (2N-1)!! / (2^N m_c^N), the large-N law for Z_{N+3} / L^{2N}.
double volume_asymptotic(int N);

struct SaddleSolution {
    int regime = 0;  // 1, 2 or 3
    int N = 0;
    double l = 0;    // L_1 / (N L)
    double x0 = 0;
    double S_value = 0;   // exponent per N at the saddle
    double S_second = 0;  // S'' at the saddle (direct differentiation)
    double log_fN_minus_log_prefactor = 0;  // log(f_N / (N! L^{2N}))
    // regime 2 only: the two alternative second-derivative expressions, for comparison
    double S_second_alt_a = 0;  // -1 + (l - 2/x0)^2
    double S_second_alt_b = 0;  // ((l^2+1) x0^2 + 5 x0 - 4) / x0^2
};

// Default crossovers: regime 1 when l sqrt(N) < 0.1, regime 3 when l > 10.
int choose_regime(int N, double l);
SaddleSolution saddle_regime(int N, double l, int force_regime = 0);

// Regime-1 value of log(f_N / (N! L^{2N})) at ratio r = L_1/L (saddle normalization as derived).
double regime1_log(int N, double r);
// The same with the printed prefactor sqrt(2 pi)/sqrt(u_c^2 - 4), for comparison only.
double regime1_log_printed(int N, double r);

// exact f_N over the regime-1 asymptotic.
double saddle_vs_exact(int N, double r);

struct LogLogFit {
    double slope = 0;
    double intercept = 0;
    double max_residual = 0;
    std::vector<double> log_x, log_y, residual;
};

// Least squares of log|y| against log x.
LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

enum class KpzTarget {
    ZhatFixedRatios,    // Zhat_n at fixed L_i/L
    ZhatDoubleScaled,   // Zhat_n with L_i/L = c_i b / sqrt(1 - m/m_c), e^{u_c L_i/L} divided out
    LaplaceFixedXi,     // F_n kernel at fixed blow-up coordinates xi_i
};

// Samples 1 - m/m_c log-uniformly on [lo, hi] and fits against u_c - u.
// params are the ratios, the c_i, or the xi_i depending on the target.
LogLogFit kpz_fit(int n, KpzTarget target, const std::vector<double>& params, double lo = 1e-7,
                  double hi = 1e-3, int samples = 16);

// The printed large-N formulas for Zhat_3 and Zhat_4 with the e^{u_c L_i/L} factors divided out.
double zhat34_asymptotic(int n, const std::vector<double>& ratios, double m, double L);

}  // namespace strebel
