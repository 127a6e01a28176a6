#include "strebel/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "strebel/amplitudes.hpp"
#include "strebel/asymptotics.hpp"
#include "strebel/bessel.hpp"
#include "strebel/errors.hpp"
#include "strebel/intersections.hpp"
#include "strebel/series.hpp"
#include "strebel/spectral.hpp"
#include "strebel/ucurve.hpp"

namespace strebel {

namespace {

using Sink = std::vector<CheckResult>;

void record(Sink& out, const std::string& suite, const std::string& name, bool ok,
            const std::string& detail = "") {
    out.push_back({suite, name, ok, detail});
}

std::string sci(double x) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << x;
    return s.str();
}

Series random_series(std::mt19937_64& rng, int order, bool unit_linear_zero_const) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (auto& q : c) q = make_rational(num(rng), den(rng));
    if (unit_linear_zero_const) {
        c[0] = 0;
        c[1] = 1;
    } else if (sgn(c[0]) == 0) {
        c[0] = 1;
    }
    return Series(std::move(c));
}

bool canonical(const Series& s) {
    for (const auto& q : s.coeffs()) {
        if (q.get_den() <= 0) return false;
        BigInt g;
        mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
        if (g != 1) return false;
    }
    return true;
}

void series_suite(Sink& out, std::uint64_t seed) {
    const std::string S = "series";
    std::mt19937_64 rng(seed);
    bool comm = true, assoc = true, distr = true, recip = true, rev = true, canon = true, par = true;
    for (int trial = 0; trial < 6; ++trial) {
        const int order = 8 + 4 * trial;  // up to 28
        Series a = random_series(rng, order, false), b = random_series(rng, order, false),
               c = random_series(rng, order, false);
        Series ab = a * b;
        comm &= ab == b * a;
        assoc &= (ab * c) == (a * (b * c));
        distr &= (a * (b + c)) == (ab + a * c);
        recip &= (a * series_recip(a)) == Series::constant(Rational(1), order);
        Series f = random_series(rng, order, true);
        Series g = series_reversion(f);
        rev &= series_compose(f, g) == Series::variable(order);
        canon &= canonical(ab) && canonical(g) && canonical(series_recip(a));
        par &= series_mul_parallel(a, b) == series_mul_serial(a, b);
    }
    {
        std::mt19937_64 r2(seed + 1);
        Series a = random_series(r2, 32, false), b = random_series(r2, 32, false),
               c = random_series(r2, 32, false);
        comm &= a * b == b * a;
        assoc &= (a * b) * c == a * (b * c);
        distr &= a * (b + c) == a * b + a * c;
    }
    record(out, S, "commutativity", comm);
    record(out, S, "associativity", assoc);
    record(out, S, "distributivity", distr);
    record(out, S, "mul_recip_is_one", recip);
    record(out, S, "compose_reversion_is_identity", rev);
    record(out, S, "canonical_coefficients", canon);
    record(out, S, "parallel_matches_serial", par);
}

void bessel_suite(Sink& out) {
    const std::string S = "bessel";
    const int order = 40;
    // I_{k-1} - I_{k+1} = (2k/x) I_k, multiplied through by x
    bool exact = true;
    for (int k = 1; k <= 10; ++k) {
        Series lhs = (bessel_series(k - 1, order).series - bessel_series(k + 1, order).series)
                         .shifted_up(1);
        Series rhs = bessel_series(k, order).series * Rational(2 * k);
        exact &= lhs == rhs;
    }
    record(out, S, "recurrence_exact_series", exact);
    double worst = 0;
    for (double x : {0.5, 1.0, critical_constants().u_c, 5.0}) {
        for (int k = 1; k <= 10; ++k) {
            const double l = bessel_eval(k - 1, x) - bessel_eval(k + 1, x);
            const double r = 2.0 * k / x * bessel_eval(k, x);
            worst = std::max(worst, std::fabs(l - r) / std::fabs(r));
        }
    }
    record(out, S, "recurrence_float_1e-12", worst <= 1e-12, "max rel " + sci(worst));
    record(out, S, "derivative_I0_is_I1",
           bessel_series(0, order).series.derivative() ==
               bessel_series(1, order).series.truncated(order - 1));
    bool mono = true;
    double prev = bessel_eval(0, 0);
    for (int i = 1; i <= 500; ++i) {
        const double v = bessel_eval(0, 0.1 * i);
        mono &= v > prev;
        prev = v;
    }
    record(out, S, "I0_increasing", mono);
}

void intersections_suite(Sink& out) {
    const std::string S = "intersections";
    bool eq = true;
    std::size_t count = 0;
    for (int n = 3; n <= 9; ++n) {
        for (const auto& t : admissible_products(n)) {
            eq &= intersection_number(t) == string_equation_oracle(t);
            ++count;
        }
    }
    record(out, S, "closed_form_equals_string_equation", eq, std::to_string(count) + " tuples");
    TauProduct t{{3, 1, 0, 2, 0, 0, 0, 0, 0}};
    bool sym = true;
    auto d = t.d;
    std::sort(d.begin(), d.end());
    const Rational ref = intersection_number(t);
    do {
        sym &= intersection_number({d}) == ref;
    } while (std::next_permutation(d.begin(), d.end()));
    record(out, S, "symmetric", sym);
    bool zero = true;
    for (int n = 3; n <= 7; ++n) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[0] = n - 2;  // one too many
        zero &= intersection_number({e}) == 0 && string_equation_oracle({e}) == 0;
    }
    record(out, S, "dimension_mismatch_is_zero", zero);
}

void ucurve_suite(Sink& out) {
    const std::string S = "ucurve";
    const auto& cc = critical_constants();
    const double g = cc.u_c * bessel_eval(1, cc.u_c) - 2 * bessel_eval(0, cc.u_c);
    record(out, S, "critical_equation", std::fabs(g) < 1e-13 * bessel_eval(0, cc.u_c), sci(g));
    record(out, S, "a_b2_is_one", std::fabs(cc.a * cc.b * cc.b - 1) < 1e-14);
    record(out, S, "m_c_definition", std::fabs(cc.m_c - m_of_u(cc.u_c)) < 1e-15);
    bool mono = true;
    double prev = -1;
    for (int i = 0; i <= 200; ++i) {
        const double u = u_newton(cc.m_c * i / 200.0);
        mono &= u > prev;
        prev = u;
    }
    record(out, S, "u_newton_increasing", mono);
    // order 60 leaves a 1e-8 tail at 0.8 m_c (radius of convergence m_c); order 100 meets 1e-9
    Series w60 = u_squared_series(60), w100 = u_squared_series(100);
    double e60 = 0, e100 = 0;
    for (int i = 1; i <= 16; ++i) {
        const double m = 0.8 * cc.m_c * i / 16.0, u = u_newton(m);
        e60 = std::max(e60, std::fabs(std::sqrt(series_eval(w60, m)) - u));
        e100 = std::max(e100, std::fabs(std::sqrt(series_eval(w100, m)) - u));
    }
    record(out, S, "series_matches_newton_1e-9", e100 <= 1e-9,
           "order 100: " + sci(e100) + ", order 60: " + sci(e60));
    double worst = 0;
    for (double t : {1e-6, 3e-6, 1e-5, 3e-5, 1e-4}) {
        const double ratio = (cc.u_c - u_newton(cc.m_c * (1 - t))) / std::sqrt(t);
        worst = std::max(worst, std::fabs(ratio / cc.b - 1));
    }
    record(out, S, "square_root_approach_to_u_c", worst < 0.01, "max rel " + sci(worst));
}

void amplitudes_suite(Sink& out) {
    const std::string S = "amplitudes";
    bool ladder = true;
    auto vols = volume_table(30);
    auto ones = one_point_table(30);
    for (int N = 0; N <= 30; ++N) ladder &= one_point_eval(ones[N], Rational(1)) == vols[N];
    record(out, S, "one_point_at_r1_is_volume", ladder);
    Series d2 = d2Z_closed_series(20);
    bool gen = true;
    for (int N = 0; N + 1 <= 20; ++N)
        gen &= d2[N + 1] == vols[std::min(N, 30)] / Rational(factorial(static_cast<unsigned>(N + 1)));
    gen &= sgn(d2[0]) == 0;
    record(out, S, "d2Z_matches_volumes", gen);
    Stratum s{{Rational(1), Rational(3, 2), Rational(2), Rational(1, 3), Rational(5)}};
    auto v = stratum_volume(s).value;
    Stratum p{{Rational(5), Rational(1, 3), Rational(1), Rational(2), Rational(3, 2)}};
    Stratum t = s;
    for (auto& L : t.perimeters) L *= Rational(7, 3);
    Rational scale = 1;
    for (int i = 0; i < 2 * 2; ++i) scale *= Rational(7, 3);
    record(out, S, "stratum_symmetric", stratum_volume(p).value == v);
    record(out, S, "stratum_homogeneous", stratum_volume(t).value == v * scale);
    bool pos = true, brute = true;
    for (int M = 3; M <= 8; ++M) {
        Stratum q;
        for (int i = 0; i < M; ++i) q.perimeters.push_back(make_rational(i + 1, (i % 3) + 1));
        Rational x = stratum_volume(q).value;
        pos &= sgn(x) > 0;
        brute &= x == stratum_volume_bruteforce(q);
    }
    record(out, S, "stratum_positive", pos);
    record(out, S, "stratum_matches_intersection_sum", brute);
}

void spectral_suite(Sink& out) {
    const std::string S = "spectral";
    const auto& cc = critical_constants();
    bool slope = true;
    for (double f : {0.1, 0.4, 0.7, 0.95}) {
        CurveModel c = build_curve(f * cc.m_c, 1.0, 40);
        const double i0 = bessel_eval(0, c.u), i1 = bessel_eval(1, c.u);
        const double lhs = c.y_poly[1] * 2 * i0, rhs = 2 * i0 - c.u * i1;
        slope &= std::fabs(lhs - rhs) < 1e-13 * i0 && rhs > 0;
    }
    const double at_c = 2 * bessel_eval(0, cc.u_c) - cc.u_c * bessel_eval(1, cc.u_c);
    record(out, S, "y_slope_regular_below_critical", slope && std::fabs(at_c) < 1e-13,
           "2I0-uI1 at u_c: " + sci(at_c));
    double worst = 0;
    for (double f : {0.2, 0.5, 0.8}) {
        CurveModel c = build_curve(f * cc.m_c, 1.0, 40);
        for (double v : {1.0, 2.0, 5.0}) {
            const double a = ydx_laplace(c, v), b = ydx_laplace_quadrature(c, v);
            worst = std::max(worst, std::fabs(a - b) / std::fabs(b));
        }
    }
    record(out, S, "laplace_matches_quadrature", worst < 1e-8, "max rel " + sci(worst));
    BlowupCurve b1 = blowup(cc.m_c * (1 - 1e-4), 1.0), b2 = blowup(cc.m_c * (1 - 1e-6), 1.0);
    const double er = b1.eps / b2.eps;
    const double xr = b1.x_deviation / b2.x_deviation, yr = b1.y_deviation / b2.y_deviation;
    record(out, S, "blowup_converges", std::fabs(xr / er - 1) < 0.2 && yr > 0.8 * std::sqrt(er),
           "eps ratio " + sci(er) + ", x ratio " + sci(xr) + ", y ratio " + sci(yr));
}

void asymptotics_suite(Sink& out) {
    const std::string S = "asymptotics";
    bool finite = std::isfinite(volume_asymptotic(10000));
    for (double l : {0.0, 1e-4, 0.01, 1.0, 20.0}) {
        auto s = saddle_regime(10000, l);
        finite &= std::isfinite(s.log_fN_minus_log_prefactor);
    }
    record(out, S, "log_space_no_overflow", finite);
    const double r1 = saddle_regime(100, 1e-6, 1).log_fN_minus_log_prefactor;
    const double r2 = saddle_regime(100, 1e-6, 2).log_fN_minus_log_prefactor;
    const double gap = std::fabs(std::expm1(r2 - r1));
    record(out, S, "regime2_to_regime1_continuity", gap < 1e-3, "gap " + sci(gap));
    auto vols = volume_table(120);
    bool mono = true;
    double prev = 0;
    for (int N = 20; N <= 120; ++N) {
        const double ratio = std::exp(log_abs(vols[N]) - volume_asymptotic(N));
        mono &= ratio > prev && ratio < 1;
        prev = ratio;
    }
    record(out, S, "volume_ratio_monotone", mono, "ratio at 120: " + sci(prev));
    auto full = kpz_fit(3, KpzTarget::ZhatFixedRatios, {1, 1, 1}, 1e-7, 1e-4);
    auto half = kpz_fit(3, KpzTarget::ZhatFixedRatios, {1, 1, 1}, 1e-7, std::sqrt(1e-7 * 1e-4));
    record(out, S, "fit_stable_under_halving", std::fabs(full.slope - half.slope) < 0.01,
           "slopes " + sci(full.slope) + " / " + sci(half.slope));
}

}  // namespace

const std::vector<std::string>& check_suites() {
    static const std::vector<std::string> s = {"series",   "bessel",   "intersections", "ucurve",
                                               "amplitudes", "spectral", "asymptotics"};
    return s;
}

std::vector<CheckResult> run_checks(const std::string& suite, std::uint64_t seed) {
    const std::map<std::string, std::function<void(Sink&)>> table = {
        {"series", [seed](Sink& o) { series_suite(o, seed); }},
        {"bessel", bessel_suite},
        {"intersections", intersections_suite},
        {"ucurve", ucurve_suite},
        {"amplitudes", amplitudes_suite},
        {"spectral", spectral_suite},
        {"asymptotics", asymptotics_suite},
    };
    Sink out;
    if (suite == "all") {
        for (const auto& name : check_suites()) table.at(name)(out);
        return out;
    }
    auto it = table.find(suite);
    if (it == table.end()) throw UsageError("unknown check suite: " + suite);
    it->second(out);
    return out;
}

}  // namespace strebel
