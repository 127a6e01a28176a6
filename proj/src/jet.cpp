#include "strebel/jet.hpp"

#include <algorithm>
#include <cmath>

#include "strebel/bessel.hpp"
#include "strebel/errors.hpp"

namespace strebel {

Jet Jet::constant(double v, int order) {
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[0] = v;
    return Jet(std::move(c));
}

Jet Jet::identity(double u0, int order) {
    Jet j = constant(u0, order);
    if (order >= 1) j.c_[1] = 1.0;
    return j;
}

Jet Jet::derivative() const {
    std::vector<double> d(std::max<std::size_t>(c_.size(), 2) - 1, 0.0);
    for (std::size_t j = 1; j < c_.size(); ++j) d[j - 1] = static_cast<double>(j) * c_[j];
    return Jet(std::move(d));
}

Jet Jet::truncated(int order) const {
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    for (std::size_t j = 0; j < c.size() && j < c_.size(); ++j) c[j] = c_[j];
    return Jet(std::move(c));
}

Jet operator+(const Jet& a, const Jet& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) c[j] = a[j] + b[j];
    return Jet(std::move(c));
}

Jet operator-(const Jet& a, const Jet& b) { return a + (-1.0) * b; }

Jet operator*(const Jet& a, const Jet& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= k; ++i) c[k] += a[i] * b[k - i];
    return Jet(std::move(c));
}

Jet operator*(double s, Jet a) {
    for (auto& x : a.c_) x *= s;
    return a;
}

Jet recip(const Jet& a) {
    if (a[0] == 0.0) throw DomainError("jet reciprocal of a vanishing value");
    const int n = a.order();
    std::vector<double> b(static_cast<std::size_t>(n) + 1, 0.0);
    b[0] = 1.0 / a[0];
    for (int k = 1; k <= n; ++k) {
        double s = 0;
        for (int i = 1; i <= k; ++i) s += a[i] * b[k - i];
        b[k] = -s / a[0];
    }
    return Jet(std::move(b));
}

Jet pow(const Jet& a, double alpha) {
    if (!(a[0] > 0.0)) throw DomainError("jet power needs a positive value");
    const int n = a.order();
    std::vector<double> b(static_cast<std::size_t>(n) + 1, 0.0);
    b[0] = std::pow(a[0], alpha);
    for (int k = 1; k <= n; ++k) {
        double s = 0;
        for (int j = 1; j <= k; ++j) s += ((alpha + 1.0) * j - k) * a[j] * b[k - j];
        b[k] = s / (k * a[0]);
    }
    return Jet(std::move(b));
}

// I_k^{(j)}(x) = 2^{-j} sum_i C(j,i) I_{|k-j+2i|}(x)
Jet bessel_jet(int k, double u0, double r, int order, double shift) {
    const double x = r * u0;
    std::vector<double> vals(static_cast<std::size_t>(k + order) + 1);
    for (int q = 0; q <= k + order; ++q) {
        if (x == 0.0) {
            vals[q] = (q == 0 ? 1.0 : 0.0) * std::exp(-shift);
        } else {
            vals[q] = std::exp(bessel_log_eval(q, x) - shift);
        }
    }
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    double rj = 1.0, fact = 1.0;
    for (int j = 0; j <= order; ++j) {
        if (j > 0) {
            rj *= r;
            fact *= j;
        }
        double d = 0, binom = 1.0;
        for (int i = 0; i <= j; ++i) {
            d += binom * vals[static_cast<std::size_t>(std::abs(k - j + 2 * i))];
            binom = binom * (j - i) / (i + 1);
        }
        c[j] = d * std::ldexp(1.0, -j) * rj / fact;
    }
    return Jet(std::move(c));
}

}  // namespace strebel
