#pragma once

#include "strebel/series.hpp"

namespace strebel {

struct CriticalConstants {
    double u_c = 0;  // root of u I_1(u) = 2 I_0(u)
    double m_c = 0;  // u_c^2 / I_0(u_c), the maximum of u^2/I_0(u)
    double C = 0;    // I_0(u_c)^3 / (sqrt 2 sqrt(u_c^2 - 4))
    double a = 0;    // (u_c^2 - 4) / (2 u_c^2)
    double b = 0;    // sqrt(2 u_c^2 / (u_c^2 - 4))
};

// Computed once, then cached.
const CriticalConstants& critical_constants();

// w = u^2 as an exact series in m, the inverse of m = w / I_0(sqrt w).
Series u_squared_series(int order);

// m(u) = u^2 / I_0(u) and its derivative.
double m_of_u(double u);
double dm_du(double u);

// Principal branch u in [0, u_c] of u^2 / I_0(u) = m.
double u_newton(double m);

}  // namespace strebel
