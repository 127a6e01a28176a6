#include "strebel/spectral.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "strebel/bessel.hpp"
#include "strebel/errors.hpp"
#include "strebel/ucurve.hpp"

namespace strebel {

namespace {

void check_curve_m(double m) {
    if (!(m >= 0)) throw DomainError("curve: m must be nonnegative");
    if (m >= critical_constants().m_c) throw DomainError("curve: m must stay below m_c");
}

double odd_double_factorial(int k) {  // (2k-1)!!
    double d = 1;
    for (int j = 1; j <= k; ++j) d *= 2 * j - 1;
    return d;
}

}  // namespace

CurveModel build_curve(double m, double L, int K) {
    check_curve_m(m);
    if (!(L > 0)) throw UsageError("curve: L must be positive");
    if (K < 1) throw UsageError("curve: K must be >= 1");
    CurveModel c;
    c.m = m;
    c.L = L;
    c.K = K;
    c.u = u_newton(m);
    const double mu = m / (L * L);
    // t_{2k+1} = mu L^{2k} I_k(u) / ((2k-1)!! u^k), k = 0..K+1 (the last one only for the tail)
    std::vector<double> t(static_cast<std::size_t>(K) + 2);
    for (int k = 0; k <= K + 1; ++k)
        t[k] = mu * std::pow(L, 2 * k) * bessel_eval_reduced(k, c.u) / odd_double_factorial(k);
    c.times.assign(t.begin(), t.begin() + K + 1);
    c.x_poly = {c.u * c.u / (L * L), 0.0, 1.0};
    // y = z - (1/2) sum_{k>=0} t_{2k+3} z^{2k+1}
    c.y_poly.assign(static_cast<std::size_t>(2 * K), 0.0);
    for (int k = 0; k < K; ++k) c.y_poly[2 * k + 1] = (k == 0 ? 1.0 : 0.0) - 0.5 * t[k + 1];
    c.tail_bound = 0.5 * t[K + 1];
    return c;
}

double curve_x(const CurveModel& c, double z) { return z * z + c.x_poly[0]; }

double curve_y(const CurveModel& c, double z) {
    long double acc = 0;
    for (int j = static_cast<int>(c.y_poly.size()) - 1; j >= 0; --j) acc = acc * z + c.y_poly[j];
    return static_cast<double>(acc);
}

double ydx_du_check(const CurveModel& c) {
    const double u = c.u, L = c.L, mu = c.m / (L * L);
    const int K = c.K;
    std::vector<double> red(static_cast<std::size_t>(K) + 2);
    for (int k = 0; k <= K + 1; ++k) red[k] = bessel_eval_reduced(k, u);
    // I_{k+1} - I_{k-1} + 2k I_k / u with I_j = u^j red_j
    double rec = 0;
    for (int k = 1; k <= K; ++k) {
        const double r = std::pow(u, k + 1) * red[k + 1] - std::pow(u, k - 1) * red[k - 1] +
                         2.0 * k * std::pow(u, k - 1) * red[k];
        rec = std::max(rec, std::fabs(r));
    }
    if (c.m == 0) return rec;
    // 2z dy/du|_x with d/du(I_k/u^k) = (I_{k-1} - 2k I_k/u)/u^k, against -2u/L^2 + mu I_1(u)
    const double target = -2 * u / (L * L) + mu * u * red[1];
    double cst = 0;
    for (double s : {0.25, 0.5, 1.0}) {
        const double z = s / L;
        long double e = -2.0L * u / (L * L);
        for (int k = 1; k <= K; ++k) {
            const double dk = (red[k - 1] - 2.0 * k * red[k]) / u;
            const double ck = std::pow(L, 2 * k) / odd_double_factorial(k);
            e -= static_cast<long double>(mu) * ck * dk * std::pow(z, 2 * k);
            e += static_cast<long double>(mu) * u * ck * (2 * k - 1) / (L * L) * red[k] *
                 std::pow(z, 2 * k - 2);
        }
        cst = std::max(cst, static_cast<double>(std::fabs(e - target)));
    }
    return rec + cst;
}

double ydx_laplace(const CurveModel& c, double v, int kmax) {
    if (!(v > 0)) throw DomainError("ydx_laplace: v must be positive");
    const double u = c.u, L = c.L;
    long double sum = 0, term = 0;
    for (int k = 1; k <= kmax; ++k) {
        term = bessel_eval_reduced(k, u) * std::pow(L * L / (2 * v), k);
        sum += term;
    }
    if (std::fabs(term) > 1e-15 * std::fabs(sum) && term > 1e-300)
        throw DomainError("ydx_laplace: v too small for the Bessel sum to converge at this kmax");
    const double i0 = bessel_eval(0, u);
    return std::sqrt(M_PI) / (2 * i0) * std::exp(-v * u * u / (L * L)) * std::pow(v, -1.5) *
           (i0 - u * u * v / (L * L) * static_cast<double>(sum));
}

double ydx_laplace_quadrature(const CurveModel& c, double v) {
    if (!(v > 0)) throw DomainError("ydx_laplace_quadrature: v must be positive");
    const double x0 = c.x_poly[0];
    auto f = [&](double z) { return curve_y(c, z) * 2 * z * std::exp(-v * (z * z + x0)); };
    const double zmax = std::sqrt(80.0 / v);
    double err = 0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, zmax, 20, 1e-14,
                                                                         &err);
}

BlowupCurve blowup(double m, double L) {
    const auto& cc = critical_constants();
    check_curve_m(m);
    if (!(m > 0)) throw DomainError("blowup: needs m close to m_c");
    CurveModel c = build_curve(m, L, 40);
    const double uc = cc.u_c, u = c.u, eps = uc - u;
    BlowupCurve b;
    b.eps = eps;
    b.px = eps * uc / (L * L);
    b.py = std::pow(eps, 1.5) * (uc * uc - 4) / (6 * L * std::sqrt(uc));
    // x = eps u xi^2 / L^2 + u^2/L^2 and u^2 - u_c^2 = -eps (u_c + u)
    b.x_tilde = {-eps * (uc + u) / (L * L) / b.px, 0.0, eps * u / (L * L) / b.px};
    // z = -sqrt(eps) sqrt(u)/L xi, so the xi^j coefficient is y_j (-s)^j with s = sqrt(eps u)/L
    const double s = std::sqrt(eps * u) / L;
    std::vector<double> yt(c.y_poly.size(), 0.0);
    for (std::size_t j = 1; j < c.y_poly.size(); j += 2) yt[j] = -c.y_poly[j] * std::pow(s, j) / b.py;
    b.y_tilde.assign(yt.begin(), yt.begin() + 4);
    for (std::size_t j = 5; j < yt.size(); j += 2) b.remainder = std::max(b.remainder, std::fabs(yt[j]));
    b.x_deviation = std::max({std::fabs(b.x_tilde[0] + 2), std::fabs(b.x_tilde[1]),
                              std::fabs(b.x_tilde[2] - 1)});
    b.y_deviation = std::max({std::fabs(b.y_tilde[0]), std::fabs(b.y_tilde[1] + 3),
                              std::fabs(b.y_tilde[2]), std::fabs(b.y_tilde[3] - 1)});
    b.py_measured = -c.y_poly[3] * std::pow(s, 3) / std::pow(eps, 1.5);
    return b;
}

double f03_32(const std::vector<double>& xi) {
    if (xi.size() != 3) throw UsageError("f03_32 takes three arguments");
    for (double x : xi)
        if (x == 0) throw DomainError("f03_32: zero argument");
    return 1.0 / (6 * xi[0] * xi[1] * xi[2]);
}

double f04_32(const std::vector<double>& xi) {
    if (xi.size() != 4) throw UsageError("f04_32 takes four arguments");
    double prod = 1, inv2 = 1;
    for (double x : xi) {
        if (x == 0) throw DomainError("f04_32: zero argument");
        prod *= x;
        inv2 += 1 / (x * x);
    }
    return -inv2 / (36 * prod);
}

}  // namespace strebel
