#pragma once

#include <vector>

namespace strebel {

// Truncated Taylor expansion f(u0 + d) = sum_j c[j] d^j in double precision.
// Used for exact-in-principle derivative towers (no finite differences).
class Jet {
public:
    Jet() = default;
    explicit Jet(std::vector<double> c) : c_(std::move(c)) {}
    static Jet constant(double v, int order);
    static Jet identity(double u0, int order);  // u0 + d

    int order() const { return static_cast<int>(c_.size()) - 1; }
    double operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
    double value() const { return c_.front(); }

    Jet derivative() const;
    Jet truncated(int order) const;

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator*(double s, Jet a);

private:
    std::vector<double> c_;
};

Jet recip(const Jet& a);
Jet pow(const Jet& a, double alpha);  // needs a[0] > 0 for non-integer alpha

// Expansion of d -> I_k(r (u0 + d)) * exp(-shift), valid for any size of r u0.
Jet bessel_jet(int k, double u0, double r, int order, double shift = 0.0);

}  // namespace strebel
