#pragma once

#include "strebel/rational.hpp"
#include "strebel/series.hpp"

namespace strebel {

struct BesselSeries {
    int k = 0;
    Series series{0};  // in z; coefficient of z^{2j+k} is 1/(2^{2j+k} j! (j+k)!)
};

BesselSeries bessel_series(int k, int order);

// Even part as a series in w = z^2: I_0(sqrt w) for k = 0, and I_k(sqrt w)/sqrt(w)^k in general.
// Coefficient of w^j is 1/(2^{2j+k} j! (j+k)!).
Series bessel_reduced_series(int k, int order);

// Exact partial sum of I_k(x) over j < terms, for cross-checking float evaluation.
Rational bessel_partial_sum(int k, const Rational& x, int terms);

inline constexpr double kBesselMaxArg = 50.0;

// I_k(x) by direct series summation, 0 <= x <= 50.
double bessel_eval(int k, double x);
// I_k(x) / x^k, finite at x = 0 (value 1/(2^k k!)); 0 <= x <= 50.
double bessel_eval_reduced(int k, double x);

// log I_k(x) for any x > 0: series below 50, Hankel expansion above.
double bessel_log_eval(int k, double x);
// I_k(x) e^{-x}, any x >= 0.
double bessel_eval_scaled(int k, double x);

BigInt double_factorial(int n);
double log_double_factorial(int n);

}  // namespace strebel
