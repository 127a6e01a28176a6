#include "strebel/bessel.hpp"

#include <cmath>
#include <limits>

#include "strebel/errors.hpp"

namespace strebel {

namespace {

Rational bessel_coeff(int j, int k) {
    BigInt den = factorial(static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(j + k));
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(2 * j + k));
    return make_rational(BigInt(1), den);
}

void check_arg(double x) {
    if (!(x >= 0.0) || x > kBesselMaxArg)
        throw DomainError("bessel_eval: argument outside [0, 50]: " + std::to_string(x));
}

// sum_j (x^2/4)^j / (j! (j+k)!) times 1/2^k, i.e. I_k(x)/x^k.
long double reduced_sum(int k, long double x) {
    long double t = 1.0L;
    for (int i = 1; i <= k; ++i) t /= 2.0L * i;
    long double sum = t;
    const long double q = x * x / 4.0L;
    for (int j = 1; j < 10000; ++j) {
        t *= q / (static_cast<long double>(j) * (j + k));
        sum += t;
        if (t <= sum * std::numeric_limits<long double>::epsilon()) break;
    }
    return sum;
}

// Hankel series for log I_k(x), large x.
double hankel_log(int k, double x) {
    const double mu = 4.0 * k * k;
    double term = 1.0, sum = 1.0, prev = 1.0;
    for (int j = 1; j < 60; ++j) {
        term *= -(mu - (2.0 * j - 1) * (2.0 * j - 1)) / (8.0 * j * x);
        if (std::fabs(term) > std::fabs(prev)) break;  // asymptotic: stop at the smallest term
        sum += term;
        prev = term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    }
    return x - 0.5 * std::log(2.0 * M_PI * x) + std::log(sum);
}

}  // namespace

BesselSeries bessel_series(int k, int order) {
    if (k < 0) throw UsageError("bessel_series: negative index");
    if (order < k) throw UsageError("bessel_series: order must be at least k");
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int j = 0; 2 * j + k <= order; ++j) c[2 * j + k] = bessel_coeff(j, k);
    return {k, Series(std::move(c))};
}

Series bessel_reduced_series(int k, int order) {
    if (k < 0) throw UsageError("bessel_reduced_series: negative index");
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int j = 0; j <= order; ++j) c[j] = bessel_coeff(j, k);
    return Series(std::move(c));
}

Rational bessel_partial_sum(int k, const Rational& x, int terms) {
    Rational sum = 0, xk = 1, x2 = x * x;
    for (int i = 0; i < k; ++i) xk *= x;
    Rational p = xk;
    for (int j = 0; j < terms; ++j) {
        sum += p * bessel_coeff(j, k);
        p *= x2;
    }
    return sum;
}

double bessel_eval(int k, double x) {
    if (k < 0) throw UsageError("bessel_eval: negative index");
    check_arg(x);
    if (x == 0.0) return k == 0 ? 1.0 : 0.0;
    const long double xl = x;
    return static_cast<double>(reduced_sum(k, xl) * std::pow(xl, static_cast<long double>(k)));
}

double bessel_eval_reduced(int k, double x) {
    if (k < 0) throw UsageError("bessel_eval_reduced: negative index");
    check_arg(x);
    return static_cast<double>(reduced_sum(k, x));
}

double bessel_log_eval(int k, double x) {
    if (k < 0) throw UsageError("bessel_log_eval: negative index");
    if (!(x > 0.0)) throw DomainError("bessel_log_eval: argument must be positive");
    // The Hankel series needs x well beyond k^2/2 to be accurate.
    if (x <= kBesselMaxArg || x < 0.5 * k * k + 50.0) {
        if (x <= kBesselMaxArg) return std::log(bessel_eval(k, x));
        // moderate x, large k: log-space series
        const long double xl = x;
        return static_cast<double>(std::log(reduced_sum(k, xl)) + k * std::log(xl));
    }
    return hankel_log(k, x);
}

double bessel_eval_scaled(int k, double x) {
    if (x == 0.0) return k == 0 ? 1.0 : 0.0;
    return std::exp(bessel_log_eval(k, x) - x);
}

BigInt double_factorial(int n) {
    if (n < -1) throw UsageError("double_factorial: n must be >= -1");
    if (n <= 0) return 1;
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

double log_double_factorial(int n) {
    if (n < -1) throw UsageError("log_double_factorial: n must be >= -1");
    if (n <= 0) return 0.0;
    // n!! = 2^{k} k! (n = 2k) or (2k)!/(2^k k!) with n = 2k-1
    if (n % 2 == 0) {
        const double k = n / 2;
        return k * std::log(2.0) + std::lgamma(k + 1);
    }
    const double k = (n + 1) / 2;
    return std::lgamma(2 * k + 1) - k * std::log(2.0) - std::lgamma(k + 1);
}

}  // namespace strebel
