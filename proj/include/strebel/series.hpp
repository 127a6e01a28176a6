#pragma once

#include <vector>

#include "strebel/rational.hpp"

namespace strebel {

// Truncated power series sum_{k<=order} c_k z^k with exact rational coefficients.
// The order is part of the value; binary operations insist on equal orders.
class Series {
public:
    explicit Series(int order);                   // the zero series
    explicit Series(std::vector<Rational> coeffs);  // order = size - 1

    static Series constant(const Rational& c, int order);
    static Series variable(int order);  // z
    static Series monomial(const Rational& c, int degree, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    // Same coefficients cut (or zero-padded) to a new order.
    Series truncated(int order) const;
    Series derivative() const;  // order drops by one
    // Multiply by z^k (k >= 0) keeping the order; divide by z^k drops the first k coefficients.
    Series shifted_up(int k) const;
    Series shifted_down(int k) const;

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Rational& s);

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

private:
    std::vector<Rational> c_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator*(Series a, const Rational& s);
Series operator*(const Rational& s, Series a);
Series operator*(const Series& a, const Series& b);

// Cauchy product; picks the OpenMP kernel above a size threshold.
Series series_mul(const Series& a, const Series& b);
// Reference implementation kept for tests and benchmarks.
Series series_mul_serial(const Series& a, const Series& b);
Series series_mul_parallel(const Series& a, const Series& b);

Series series_pow(const Series& a, unsigned k);
Series series_recip(const Series& a);
Series series_reversion(const Series& a);
Series series_compose(const Series& a, const Series& b);

// Value of a truncated series at a float point (Horner, long double accumulation).
double series_eval(const Series& a, double x);

}  // namespace strebel
