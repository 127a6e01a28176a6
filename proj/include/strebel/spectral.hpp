#pragma once

#include <vector>

namespace strebel {

struct CurveModel {
    double m = 0;  // mu L^2
    double L = 1;
    double u = 0;
    int K = 0;
    std::vector<double> times;   // t_{2k+1}, k = 0..K
    std::vector<double> x_poly;  // coefficients of z^0..z^2
    std::vector<double> y_poly;  // coefficients of z^0..z^{2K-1}; odd slots only
    double tail_bound = 0;       // size of the first dropped y coefficient
};

struct BlowupCurve {
    double eps = 0;  // u_c - u
    double px = 0, py = 0;
    std::vector<double> x_tilde;  // coefficients of xi^0..xi^2 of (x - u_c^2/L^2)/px
    std::vector<double> y_tilde;  // coefficients of xi^0..xi^3 of y/py
    double x_deviation = 0;       // max distance from (-2, 0, 1)
    double y_deviation = 0;       // max distance from (0, -3, 0, 1)
    double remainder = 0;         // size of the xi^5 and higher coefficients of y/py
    double py_measured = 0;       // xi^3 coefficient of y, divided by eps^{3/2}
};

CurveModel build_curve(double m, double L, int K = 40);

double curve_x(const CurveModel& c, double z);
double curve_y(const CurveModel& c, double z);

// Bessel recurrence residual over k <= K plus the residual of the constant term of d(ydx)/du.
double ydx_du_check(const CurveModel& c);

double ydx_laplace(const CurveModel& c, double v, int kmax = 40);
// Quadrature of y dx e^{-v x} over z in [0, inf).
double ydx_laplace_quadrature(const CurveModel& c, double v);

BlowupCurve blowup(double m, double L);

double f03_32(const std::vector<double>& xi);
double f04_32(const std::vector<double>& xi);

}  // namespace strebel
