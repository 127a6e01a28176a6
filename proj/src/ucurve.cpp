#include "strebel/ucurve.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <utility>

#include "strebel/bessel.hpp"
#include "strebel/errors.hpp"

namespace strebel {

namespace {

CriticalConstants compute_constants() {
    // g(u) = u I_1 - 2 I_0, g'(u) = u I_0 - 2 I_1 (from I_1' = I_0 - I_1/u)
    auto g = [](double u) {
        const double i0 = bessel_eval(0, u), i1 = bessel_eval(1, u);
        return std::make_pair(u * i1 - 2 * i0, u * i0 - 2 * i1);
    };
    std::uintmax_t iters = 100;
    const double uc = boost::math::tools::newton_raphson_iterate(g, 2.5, 1.0, 5.0, 52, iters);
    if (iters >= 100) throw NumericError("critical point: Newton did not converge");
    CriticalConstants c;
    c.u_c = uc;
    const double i0 = bessel_eval(0, uc);
    c.m_c = uc * uc / i0;
    c.C = i0 * i0 * i0 / (std::sqrt(2.0) * std::sqrt(uc * uc - 4));
    c.a = (uc * uc - 4) / (2 * uc * uc);
    c.b = std::sqrt(2 * uc * uc / (uc * uc - 4));
    return c;
}

}  // namespace

const CriticalConstants& critical_constants() {
    static const CriticalConstants c = compute_constants();
    return c;
}

Series u_squared_series(int order) {
    if (order < 1) throw UsageError("u_squared_series: order must be >= 1");
    // m(w) = w * (1/phi(w)), phi(w) = I_0(sqrt w)
    Series inv_phi = series_recip(bessel_reduced_series(0, order));
    return series_reversion(inv_phi.shifted_up(1));
}

double m_of_u(double u) { return u * u / bessel_eval(0, u); }

double dm_du(double u) {
    if (u < 0) throw DomainError("dm_du: u must be nonnegative");
    const double i0 = bessel_eval(0, u), i1 = bessel_eval(1, u);
    return (2 * u * i0 - u * u * i1) / (i0 * i0);
}

double u_newton(double m) {
    const auto& cc = critical_constants();
    if (!(m >= 0) || m > cc.m_c) throw DomainError("u_newton: m outside [0, m_c]");
    if (m == 0) return 0;
    if (m == cc.m_c) return cc.u_c;
    // bracket by bisection first; m(u) is increasing on [0, u_c]
    double lo = 0, hi = cc.u_c;
    for (int i = 0; i < 20; ++i) {
        const double mid = 0.5 * (lo + hi);
        (m_of_u(mid) < m ? lo : hi) = mid;
    }
    // safeguarded Newton; near the top dm/du -> 0 and the bisection fallback takes over
    auto f = [m](double u) { return std::make_pair(m_of_u(u) - m, dm_du(u)); };
    std::uintmax_t iters = 200;
    double u = boost::math::tools::newton_raphson_iterate(f, 0.5 * (lo + hi), lo, hi, 52, iters);
    if (std::fabs(m_of_u(u) - m) > 1e-12) {
        // flat region: finish by plain bisection on the residual sign
        lo = std::max(lo, u - 1e-4);
        hi = std::min(hi, u + 1e-4);
        if (m_of_u(lo) > m) lo = 0;
        for (int i = 0; i < 200 && hi - lo > 0; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            (m_of_u(mid) < m ? lo : hi) = mid;
        }
        u = std::fabs(m_of_u(lo) - m) < std::fabs(m_of_u(hi) - m) ? lo : hi;
    }
    if (std::fabs(m_of_u(u) - m) > 1e-12) throw NumericError("u_newton: residual above 1e-12");
    return u;
}

}  // namespace strebel
