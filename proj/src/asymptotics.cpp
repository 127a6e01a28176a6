#include "strebel/asymptotics.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <exception>
#include <sstream>

#include "strebel/amplitudes.hpp"
#include "strebel/bessel.hpp"
#include "strebel/errors.hpp"
#include "strebel/ucurve.hpp"

namespace strebel {

namespace {

double log_i0(double x) { return x == 0 ? 0.0 : bessel_log_eval(0, x); }

// I_1/I_0 for any x >= 0
double bessel_ratio(double x) {
    if (x == 0) return 0.0;
    if (x <= kBesselMaxArg) return bessel_eval(1, x) / bessel_eval(0, x);
    return std::exp(bessel_log_eval(1, x) - bessel_log_eval(0, x));
}

// d/dx (I_1/I_0)(x) = 1 - rho/x - rho^2
double bessel_ratio_prime(double x) {
    if (x == 0) return 0.5;
    const double rho = bessel_ratio(x);
    return 1 - rho / x - rho * rho;
}

double solve_saddle(int N, double l, int regime) {
    const double uc = critical_constants().u_c;
    const double Nl = N * l;
    // both saddle equations are increasing in x and positive at u_c
    auto f = [&](double x) {
        const double rho = bessel_ratio(x);
        double v = rho - 2 / x, d = bessel_ratio_prime(x) + 2 / (x * x);
        if (regime == 2) {
            v += l;
        } else {
            v += l * bessel_ratio(Nl * x);
            d += l * Nl * bessel_ratio_prime(Nl * x);
        }
        return std::make_pair(v, d);
    };
    const double guess = std::min(uc, l > 0 ? 2 / l : uc);
    std::uintmax_t iters = 200;
    const double x0 = boost::math::tools::newton_raphson_iterate(f, guess, 1e-12, uc, 52, iters);
    const double res = f(x0).first;
    if (iters >= 200 || !std::isfinite(x0) || std::fabs(res) > 1e-9) {
        std::ostringstream msg;
        msg << "saddle Newton failed: N=" << N << " l=" << l << " regime=" << regime
            << " x=" << x0 << " residual=" << res << " iterations=" << iters;
        throw NumericError(msg.str());
    }
    return x0;
}

}  // namespace

double volume_asymptotic(int N) {
    if (N < 1) throw UsageError("volume_asymptotic: N must be >= 1");
    const auto& cc = critical_constants();
    return std::log(cc.C) + log_double_factorial(2 * N - 1) - N * std::log(2.0) -
           N * std::log(cc.m_c);
}

int choose_regime(int N, double l) {
    if (l * std::sqrt(static_cast<double>(N)) < 0.1) return 1;
    if (l > 10) return 3;
    return 2;
}

double regime1_log(int N, double r) {
    const double uc = critical_constants().u_c;
    const double kappa = 1 - 4 / (uc * uc);
    return (N + 2) * log_i0(uc) - 2.0 * N * std::log(uc) + log_i0(r * uc) - std::log(uc) -
           0.5 * std::log(2 * M_PI * N * kappa);
}

double regime1_log_printed(int N, double r) {
    const double uc = critical_constants().u_c;
    return (N + 2) * log_i0(uc) - 2.0 * N * std::log(uc) + log_i0(r * uc) +
           0.5 * std::log(2 * M_PI) - 0.5 * std::log(uc * uc - 4);
}

SaddleSolution saddle_regime(int N, double l, int force_regime) {
    if (N < 1) throw UsageError("saddle_regime: N must be >= 1");
    if (!(l >= 0)) throw UsageError("saddle_regime: l must be nonnegative");
    if (force_regime < 0 || force_regime > 3) throw UsageError("saddle_regime: regime must be 1, 2 or 3");
    SaddleSolution s;
    s.N = N;
    s.l = l;
    s.regime = force_regime ? force_regime : choose_regime(N, l);
    const double uc = critical_constants().u_c;
    const double r = N * l;
    if (s.regime == 1) {
        s.x0 = uc;
        s.S_value = log_i0(uc) - 2 * std::log(uc);
        s.S_second = 1 - 4 / (uc * uc);
        s.log_fN_minus_log_prefactor = regime1_log(N, r);
        return s;
    }
    const double x = solve_saddle(N, l, s.regime);
    s.x0 = x;
    if (s.regime == 2) {
        s.S_value = log_i0(x) - 2 * std::log(x) + l * x;
        s.S_second = 1 - 4 / (x * x) + 5 * l / x - l * l;
        s.S_second_alt_a = -1 + (l - 2 / x) * (l - 2 / x);
        s.S_second_alt_b = ((l * l + 1) * x * x + 5 * x - 4) / (x * x);
    } else {
        const double w = r * x;
        const double rw = bessel_ratio(w);
        s.S_value = log_i0(x) - 2 * std::log(x) + log_i0(w) / N;
        s.S_second = bessel_ratio_prime(x) + 2 / (x * x) + r * l * (1 - rw / w - rw * rw);
    }
    if (!(s.S_second > 0)) throw NumericError("saddle_regime: non-positive curvature at the saddle");
    s.log_fN_minus_log_prefactor = (N + 2) * log_i0(x) - 2.0 * N * std::log(x) + log_i0(r * x) -
                                   std::log(x) - 0.5 * std::log(2 * M_PI * N * s.S_second);
    return s;
}

double saddle_vs_exact(int N, double r) {
    if (N < 1) throw UsageError("saddle_vs_exact: N must be >= 1");
    if (!(r > 0)) throw UsageError("saddle_vs_exact: r must be positive");
    const double exact = one_point_log_eval(one_point_exact(N), r);
    return std::exp(exact - std::lgamma(N + 1.0) - regime1_log(N, r));
}

LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 3) throw UsageError("fit_loglog: need matching samples");
    LogLogFit f;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0) || !(std::fabs(y[i]) > 0) || !std::isfinite(y[i]))
            throw NumericError("fit_loglog: sample not usable on a log scale");
        f.log_x.push_back(std::log(x[i]));
        f.log_y.push_back(std::log(std::fabs(y[i])));
    }
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += f.log_x[i];
        sy += f.log_y[i];
        sxx += f.log_x[i] * f.log_x[i];
        sxy += f.log_x[i] * f.log_y[i];
    }
    const double det = n * sxx - sx * sx;
    if (std::fabs(det) <= 1e-12 * n * sxx) throw NumericError("fit_loglog: ill-conditioned fit");
    f.slope = (n * sxy - sx * sy) / det;
    f.intercept = (sy - f.slope * sx) / n;
    for (std::size_t i = 0; i < x.size(); ++i) {
        f.residual.push_back(f.log_y[i] - f.intercept - f.slope * f.log_x[i]);
        f.max_residual = std::max(f.max_residual, std::fabs(f.residual.back()));
    }
    return f;
}

LogLogFit kpz_fit(int n, KpzTarget target, const std::vector<double>& params, double lo, double hi,
                  int samples) {
    if (n < 3) throw UsageError("kpz_fit: n must be >= 3");
    if (static_cast<int>(params.size()) != n) throw UsageError("kpz_fit: need n parameters");
    if (!(lo > 0) || !(hi > lo) || hi >= 1) throw UsageError("kpz_fit: bad window");
    if (samples < 12) throw UsageError("kpz_fit: at least 12 samples");
    const auto& cc = critical_constants();
    std::vector<double> xs(static_cast<std::size_t>(samples)), ys(xs.size());
    auto sample = [&](int i) {
        const double t = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (samples - 1));
        const double m = cc.m_c * (1 - t);
        const double u = u_newton(m), eps = cc.u_c - u;
        xs[i] = eps;
        switch (target) {
            case KpzTarget::ZhatFixedRatios:
                ys[i] = zhat_n_closed(n, params, m);
                break;
            case KpzTarget::ZhatDoubleScaled: {
                std::vector<double> r;
                for (double c : params) r.push_back(c * cc.b / std::sqrt(t));
                ys[i] = zhat_n_scaled(n, r, m);
                break;
            }
            case KpzTarget::LaplaceFixedXi: {
                std::vector<double> zt;
                for (double xi : params) zt.push_back(std::sqrt(eps) * std::sqrt(u) * xi);
                ys[i] = F_n_kernel_tilde(n, zt, m, 1.0);
                break;
            }
        }
    };
    std::exception_ptr failure;
    // samples are independent; each one solves for u and runs its own derivative tower
#pragma omp parallel for schedule(static)
    for (int i = 0; i < samples; ++i) {
        try {
            sample(i);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return fit_loglog(xs, ys);
}

double zhat34_asymptotic(int n, const std::vector<double>& ratios, double m, double L) {
    if (n != 3 && n != 4) throw UsageError("zhat34_asymptotic: n must be 3 or 4");
    if (static_cast<int>(ratios.size()) != n) throw UsageError("zhat34_asymptotic: need n ratios");
    const auto& cc = critical_constants();
    const double uc = cc.u_c, eps = uc - u_newton(m);
    double lg = 0, sum_r = 0;
    for (double r : ratios) {
        if (!(r > 0)) throw UsageError("zhat34_asymptotic: ratios must be positive");
        lg -= 0.5 * std::log(r * eps);
        sum_r += r;
    }
    if (n == 3) {
        lg += std::log(8.0) + 1.5 * std::log(2 / M_PI) + 4 * std::log(L) - 2.5 * std::log(uc) -
              std::log(uc * uc - 4) + 0.5 * std::log(eps);
        return std::exp(lg);
    }
    lg += std::log(64 / (M_PI * M_PI)) + 6 * std::log(L) - 3 * std::log(uc) -
          2 * std::log(uc * uc - 4) - std::log(eps);
    return std::exp(lg) * (1 + sum_r * eps);
}

}  // namespace strebel
