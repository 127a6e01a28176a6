#include "strebel/amplitudes.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <functional>
#include <numeric>

#include "strebel/bessel.hpp"
#include "strebel/errors.hpp"
#include "strebel/intersections.hpp"
#include "strebel/jet.hpp"
#include "strebel/ucurve.hpp"

namespace strebel {

namespace {

// phi(c w) where phi(w) = I_0(sqrt w)
Series i0_scaled_series(const Rational& c, int order) {
    Series s = bessel_reduced_series(0, order);
    std::vector<Rational> v = s.coeffs();
    Rational p = 1;
    for (auto& q : v) {
        q *= p;
        p *= c;
    }
    return Series(std::move(v));
}

// I_0^4 / (2 I_0 - u I_1) as a series in w = u^2.
Series g_series(int order) {
    Series phi = bessel_reduced_series(0, order);
    Series den = Rational(2) * phi - bessel_reduced_series(1, order).shifted_up(1);
    Series phi2 = series_mul(phi, phi);
    return series_mul(series_mul(phi2, phi2), series_recip(den));
}

// Q(m) = psi(m)^{-n} P(w(m)) with w(m) = m psi(m); P is a series in w.
Series pull_back(const Series& P, int n, int order) {
    Series w = u_squared_series(order + 1);
    Series psi = w.shifted_down(1);
    Series Q = series_compose(P.truncated(order), w.truncated(order));
    if (n > 0) Q = series_mul(Q, series_pow(series_recip(psi), static_cast<unsigned>(n)));
    if (n < 0) Q = series_mul(Q, series_pow(psi, static_cast<unsigned>(-n)));
    return Q;
}

void check_m(double m) {
    const auto& cc = critical_constants();
    if (!(m >= 0)) throw DomainError("m must be nonnegative");
    if (m >= cc.m_c) throw DomainError("m must stay below m_c (pole of the correlators)");
}

// Apply (L^2 / m'(u)) d/du k times to f, an expansion around u0 of order >= k.
double mu_derivative(const Jet& f, double u0, int k, double L) {
    if (k == 0) return f.value();
    Jet i0 = bessel_jet(0, u0, 1.0, k), i1 = bessel_jet(1, u0, 1.0, k);
    Jet u = Jet::identity(u0, k);
    Jet mp = u * (2.0 * i0 - u * i1) * recip(i0 * i0);
    Jet inv = (L * L) * recip(mp);
    Jet g = f;
    for (int i = 0; i < k; ++i) g = g.derivative() * inv;
    return g.value();
}

// I_0^{4-n} / (2 I_0 - u I_1) around u0.
Jet base_jet(int n, double u0, int order) {
    Jet i0 = bessel_jet(0, u0, 1.0, order), i1 = bessel_jet(1, u0, 1.0, order);
    Jet u = Jet::identity(u0, order);
    Jet den = recip(2.0 * i0 - u * i1);
    const int p = 4 - n;
    Jet pw = Jet::constant(1.0, order);
    Jet f = p >= 0 ? i0 : recip(i0);
    for (int i = 0; i < std::abs(p); ++i) pw = pw * f;
    return pw * den;
}

// d^k/dm^k of the polynomial sum_j q_j m^j at m.
double poly_derivative(const Series& q, int upto, int k, double m) {
    long double acc = 0;
    for (int j = upto; j >= k; --j) {
        long double c = q[j].get_d();
        for (int i = 0; i < k; ++i) c *= (j - i);
        acc = acc * m + c;
    }
    return static_cast<double>(acc);
}

Series zhat_P(const std::vector<Rational>& ratios, int order) {
    Series P = g_series(order);
    for (const auto& r : ratios) P = series_mul(P, i0_scaled_series(r * r, order));
    return P;
}

// prod_i (z_i^2 - w/L^2)^{-1/2} as a series in w.
Series cut_factors(const std::vector<Rational>& z, const Rational& L, int order) {
    Series P = Series::constant(Rational(1), order);
    for (const auto& zi : z) {
        std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
        Rational x = 1 / (L * L * zi * zi), p = 1 / zi;
        if (zi < 0) p = -p;
        for (int j = 0; j <= order; ++j) {
            c[j] = p * Rational(binomial(2 * j, j)) / Rational(BigInt(1) << (2 * j));
            p *= x;
        }
        P = series_mul(P, Series(std::move(c)));
    }
    return P;
}

// Polar correction d^{n-3}_mu (mu^n L^{2n} [..]_-) for the F_n kernels.
double F_polar(int n, const std::vector<double>& z, double m, double L) {
    std::vector<Rational> zq;
    for (double x : z) zq.push_back(rational_from_double(x));
    Rational Lq = rational_from_double(L);
    Series P = series_mul(g_series(n - 1), cut_factors(zq, Lq, n - 1));
    Series Q = pull_back(P, n, n - 1);
    return std::pow(L * L, n - 3) * poly_derivative(Q, n - 1, n - 3, m);
}

double F_from_cut_jets(int n, const std::vector<Jet>& cuts, double u0, double L, int k) {
    Jet f = base_jet(n, u0, k);
    for (const auto& c : cuts) f = f * c;
    return mu_derivative(f, u0, k, L);
}

}  // namespace

StratumVolume stratum_volume(const Stratum& s) {
    const int M = static_cast<int>(s.perimeters.size());
    if (M < 3) throw UsageError("stratum needs at least three faces");
    for (const auto& L : s.perimeters)
        if (sgn(L) <= 0) throw UsageError("perimeters must be positive");
    const int K = M - 3;
    Series P = Series::constant(Rational(1), K);
    for (const auto& L : s.perimeters) P = series_mul(P, i0_scaled_series(L * L, K));
    Rational v = P[K] * Rational(factorial(static_cast<unsigned>(K))) / 2;
    return {v, 2 * K};
}

Rational stratum_volume_bruteforce(const Stratum& s) {
    const int M = static_cast<int>(s.perimeters.size());
    if (M < 3) throw UsageError("stratum needs at least three faces");
    Rational total = 0;
    for (const auto& t : admissible_products(M)) {
        Rational term = intersection_number(t);
        for (int i = 0; i < M; ++i) {
            const int d = t.d[i];
            Rational L2 = s.perimeters[i] * s.perimeters[i], p = 1;
            for (int j = 0; j < d; ++j) p *= L2 / 4;
            term *= p / Rational(factorial(static_cast<unsigned>(d)));
        }
        total += term;
    }
    return total / 2;
}

std::vector<BigInt> i0_power_numerators(int k, int nmax) {
    if (k < 0 || nmax < 0) throw UsageError("i0_power_numerators: negative argument");
    // Power recurrence for phi^k with phi_j = 1/(4^j j!^2), scaled to integers.
    std::vector<BigInt> c(static_cast<std::size_t>(nmax) + 1);
    c[0] = 1;
    BigInt acc, b, t;
    for (int n = 1; n <= nmax; ++n) {
        acc = 0;
        for (int j = 1; j <= n; ++j) {
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
            t = b * b;
            t *= c[n - j];
            t *= static_cast<long>((k + 1) * j - n);
            acc += t;
        }
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
        c[n] = acc;
    }
    return c;
}

// (N!/2) [w^N] phi^{N+3} = c_N / (2 4^N N!)
Rational volume_uniform(int N) {
    if (N < 0) throw UsageError("volume_uniform: N must be nonnegative");
    BigInt cN = i0_power_numerators(N + 3, N).back();
    BigInt den = factorial(static_cast<unsigned>(N));
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(2 * N + 1));
    return make_rational(cN, den);
}

std::vector<Rational> volume_table_serial(int n_max) {
    std::vector<Rational> out(static_cast<std::size_t>(n_max) + 1);
    for (int N = 0; N <= n_max; ++N) out[N] = volume_uniform(N);
    return out;
}

std::vector<Rational> volume_table(int n_max) {
    std::vector<Rational> out(static_cast<std::size_t>(n_max) + 1);
    // Large N first: the rows cost O(N^2), so this balances the tail.
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i <= n_max; ++i) {
        const int N = n_max - i;
        out[N] = volume_uniform(N);
    }
    return out;
}

Series d2Z_closed_series(int order) {
    if (order < 1) throw UsageError("d2Z_closed_series: order must be >= 1");
    // w (phi^2 - w (I_1/u)^2) / 2, an even function of u written in w
    Series phi = bessel_reduced_series(0, order), r1 = bessel_reduced_series(1, order);
    Series h = series_mul(phi, phi) - series_mul(r1, r1).shifted_up(1);
    h = h.shifted_up(1) * Rational(1, 2);
    return series_compose(h, u_squared_series(order));
}

std::vector<Rational> one_point_exact(int N) {
    if (N < 0) throw UsageError("one_point_exact: N must be nonnegative");
    auto c = i0_power_numerators(N + 2, N);
    std::vector<Rational> poly(static_cast<std::size_t>(N) + 1);
    const BigInt nfact = factorial(static_cast<unsigned>(N));
    for (int d = 0; d <= N; ++d) {
        // (N!/2) / (4^d d!^2) * c_{N-d} / (4^{N-d} (N-d)!^2)
        BigInt fd = factorial(static_cast<unsigned>(d)), fr = factorial(static_cast<unsigned>(N - d));
        BigInt den = fd * fd * fr * fr;
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(2 * N + 1));
        poly[d] = make_rational(nfact * c[N - d], den);
    }
    return poly;
}

std::vector<std::vector<Rational>> one_point_table(int n_max) {
    std::vector<std::vector<Rational>> out(static_cast<std::size_t>(n_max) + 1);
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i <= n_max; ++i) out[n_max - i] = one_point_exact(n_max - i);
    return out;
}

Rational one_point_eval(const std::vector<Rational>& poly, const Rational& r) {
    Rational acc = 0, r2 = r * r;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * r2 + *it;
    return acc;
}

double one_point_log_eval(const std::vector<Rational>& poly, double r) {
    if (!(r > 0)) throw DomainError("one_point_log_eval: ratio must be positive");
    std::vector<double> terms(poly.size());
    double top = -INFINITY;
    for (std::size_t d = 0; d < poly.size(); ++d) {
        terms[d] = log_abs(poly[d]) + 2.0 * static_cast<double>(d) * std::log(r);
        top = std::max(top, terms[d]);
    }
    long double s = 0;
    for (double t : terms) s += std::exp(static_cast<long double>(t - top));
    return top + static_cast<double>(std::log(s));
}

Series positive_part_fD(int D, int order) {
    if (order < 1) throw UsageError("positive_part_fD: order must be >= 1");
    // u^{2D} G = m^D psi^D G(w(m)); for D < 0 expand to order - D and drop m^D..m^{-1}
    const int ext = D < 0 ? order - D : order;
    Series Q = pull_back(g_series(ext), -D, ext);
    if (D >= 0) return Q.shifted_up(D);
    return Q.shifted_down(-D);
}

std::vector<Rational> polar_part_fD(int D) {
    if (D >= 0) return {};
    Series Q = pull_back(g_series(-D), -D, -D);
    std::vector<Rational> out;
    for (int j = 1; j <= -D; ++j) out.push_back(Q[-D - j]);  // coefficient of m^{-j}
    return out;
}

Series zhat_n_series(int n, const std::vector<Rational>& ratios, int order) {
    if (n < 3) throw UsageError("zhat_n_series: n must be >= 3");
    if (static_cast<int>(ratios.size()) != n) throw UsageError("zhat_n_series: need n ratios");
    const int ext = order + n - 3;
    Series Q = pull_back(zhat_P(ratios, ext), n, ext);
    std::vector<Rational> c = Q.coeffs();
    for (int j = 0; j < n && j <= ext; ++j) c[j] = 0;
    Series S(std::move(c));
    for (int i = 0; i < n - 3; ++i) S = S.derivative();
    return S;
}

namespace {

double zhat_impl(int n, const std::vector<double>& ratios, double m, bool scaled) {
    if (n < 3) throw UsageError("zhat: n must be >= 3");
    if (static_cast<int>(ratios.size()) != n) throw UsageError("zhat: need n ratios");
    for (double r : ratios)
        if (!(r > 0)) throw UsageError("zhat: ratios must be positive");
    check_m(m);
    if (m == 0) return 0.0;
    const double uc = critical_constants().u_c;
    const double u0 = u_newton(m);
    const int k = n - 3;
    Jet f = base_jet(n, u0, k);
    double shift_total = 0;
    for (double r : ratios) {
        const double shift = scaled ? uc * r : 0.0;
        shift_total += shift;
        f = f * bessel_jet(0, u0, r, k, shift);
    }
    const double main = mu_derivative(f, u0, k, 1.0);
    std::vector<Rational> rq;
    for (double r : ratios) rq.push_back(rational_from_double(r));
    Series Q = pull_back(zhat_P(rq, n - 1), n, n - 1);
    const double polar = poly_derivative(Q, n - 1, k, m);
    return main - polar * std::exp(-shift_total);
}

}  // namespace

double zhat_n_closed(int n, const std::vector<double>& ratios, double m) {
    return zhat_impl(n, ratios, m, false);
}

double zhat_n_scaled(int n, const std::vector<double>& ratios, double m) {
    return zhat_impl(n, ratios, m, true);
}

double F_n_kernel_tilde(int n, const std::vector<double>& zt, double m, double L, bool project) {
    if (n < 3) throw UsageError("F_n_kernel: n must be >= 3");
    if (static_cast<int>(zt.size()) != n) throw UsageError("F_n_kernel: need n points");
    if (!(L > 0)) throw UsageError("F_n_kernel: L must be positive");
    check_m(m);
    for (double t : zt)
        if (!(t > 0)) throw DomainError("F_n_kernel: point on or inside the cut");
    const double u0 = u_newton(m);
    const int k = n - 3;
    std::vector<double> z;
    for (double t : zt) z.push_back(std::sqrt(t * t + u0 * u0 / (L * L)));
    double polar = project ? F_polar(n, z, m, L) : 0.0;
    if (m == 0) return project ? 0.0 : F_polar(n, z, 0.0, L);
    std::vector<Jet> cuts;
    for (double t : zt) {
        // (zt^2 - (2 u0 d + d^2)/L^2)^{-1/2}
        std::vector<double> a(static_cast<std::size_t>(k) + 1, 0.0);
        a[0] = t * t;
        if (k >= 1) a[1] = -2 * u0 / (L * L);
        if (k >= 2) a[2] = -1 / (L * L);
        cuts.push_back(pow(Jet(a), -0.5));
    }
    return F_from_cut_jets(n, cuts, u0, L, k) - polar;
}

double F_n_kernel(int n, const std::vector<double>& z, double m, double L, bool project) {
    check_m(m);
    const double u0 = u_newton(m);
    std::vector<double> zt;
    for (double x : z) {
        const double t2 = x * x - u0 * u0 / (L * L);
        if (!(t2 > 0)) throw DomainError("F_n_kernel: z on or inside the cut");
        zt.push_back(std::sqrt(t2));
    }
    return F_n_kernel_tilde(n, zt, m, L, project);
}

double d3F_n_kernel(int n, const std::vector<double>& z, double m, double L) {
    if (n < 3) throw UsageError("d3F_n_kernel: n must be >= 3");
    if (static_cast<int>(z.size()) != n) throw UsageError("d3F_n_kernel: need n points");
    if (!(L > 0)) throw UsageError("d3F_n_kernel: L must be positive");
    check_m(m);
    const double u0 = u_newton(m);
    for (double x : z)
        if (!(x * x > u0 * u0 / (L * L))) throw DomainError("d3F_n_kernel: z on or inside the cut");
    if (m == 0) {
        // d^n_mu of sum_j Q_j m^j at 0 is n! L^{2n} Q_n
        std::vector<Rational> zq;
        for (double x : z) zq.push_back(rational_from_double(x));
        Series P = series_mul(g_series(n), cut_factors(zq, rational_from_double(L), n));
        Series Q = pull_back(P, n, n);
        return std::tgamma(n + 1.0) * std::pow(L * L, n) * Q[n].get_d();
    }
    std::vector<Jet> cuts;
    for (double x : z) {
        std::vector<double> a(static_cast<std::size_t>(n) + 1, 0.0);
        a[0] = x * x - u0 * u0 / (L * L);
        if (n >= 1) a[1] = -2 * u0 / (L * L);
        if (n >= 2) a[2] = -1 / (L * L);
        cuts.push_back(pow(Jet(a), -0.5));
    }
    return F_from_cut_jets(n, cuts, u0, L, n);
}

double one_point_K0(double m, double r) {
    check_m(m);
    const double u = u_newton(m);
    const double i0 = bessel_eval(0, u), i1 = bessel_eval(1, u);
    return i0 * i0 * i0 * std::exp(bessel_log_eval(0, std::max(u * r, 1e-300))) /
           (2 * i0 - u * i1);
}

namespace {

double bessel_any(int k, double x) {
    if (x <= kBesselMaxArg) return bessel_eval(k, x);
    return std::exp(bessel_log_eval(k, x));
}

// L^4 dH/dmu as a function of (u, m, r); see dH_dmu.
double k2_reduced(double u, double m, double r, int kmax) {
    if (u == 0) return 0.0;
    const double head = 2 * u * u / (r * r) * bessel_any(2, u * r);
    long double sum = 0, last = 0;
    double sign = -1.0 / r, pw = sign;
    for (int k = 1; k <= kmax; ++k) {
        last = static_cast<long double>(pw) * bessel_eval(k, u) * bessel_any(k + 1, u * r);
        sum += last;
        pw *= sign;
    }
    const double total = head + m * u / r * static_cast<double>(sum);
    const double tail = std::fabs(m * u / r * static_cast<double>(last));
    if (tail > 1e-14 * std::fabs(total) && tail > 1e-300)
        throw AccuracyError("dH/dmu: alternating Bessel sum not converged at kmax=" +
                            std::to_string(kmax));
    return total;
}

}  // namespace

// dH/dmu = (2/L1) [ u^2/(L^2 L1) I_2(u r) + (mu u/(2L)) sum_k (-L/L1)^k I_k(u) I_{k+1}(u r) ]
double dH_dmu(double mu, double L, double L1, int kmax) {
    if (!(L > 0) || !(L1 > 0)) throw UsageError("dH_dmu: perimeters must be positive");
    if (kmax < 1) throw UsageError("dH_dmu: kmax must be >= 1");
    const double m = mu * L * L;
    check_m(m);
    const double u = u_newton(m), r = L1 / L;
    return k2_reduced(u, m, r, kmax) / std::pow(L, 4);
}

// H = int_0^mu dH/dmu, integrated in u where the integrand is analytic.
double H_closed(double mu, double L, double L1, int kmax) {
    if (!(L > 0) || !(L1 > 0)) throw UsageError("H_closed: perimeters must be positive");
    if (kmax < 1) throw UsageError("H_closed: kmax must be >= 1");
    const double m = mu * L * L;
    check_m(m);
    if (m == 0) return 0.0;
    const double u1 = u_newton(m), r = L1 / L;
    auto integrand = [&](double u) { return k2_reduced(u, m_of_u(u), r, kmax) * dm_du(u); };
    const double I = boost::math::quadrature::gauss<double, 30>::integrate(integrand, 0.0, u1);
    return I / std::pow(L, 6);
}

double H_series_partial(double mu, double L, double L1, int n_max) {
    const double r = L1 / L;
    auto table = one_point_table(n_max);
    long double sum = 0;
    for (int N = 0; N <= n_max; ++N) {
        long double poly = 0;
        for (auto it = table[N].rbegin(); it != table[N].rend(); ++it)
            poly = poly * r * r + static_cast<long double>(it->get_d());
        long double term = poly * std::pow(static_cast<long double>(L), 2 * N) *
                           std::pow(static_cast<long double>(mu), N + 3) /
                           std::tgamma(static_cast<long double>(N + 4));
        sum += term;
    }
    return static_cast<double>(sum);
}

}  // namespace strebel
