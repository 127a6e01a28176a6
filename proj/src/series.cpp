#include "strebel/series.hpp"

#include <utility>

#include "strebel/errors.hpp"

namespace strebel {

namespace {

void require_same_order(const Series& a, const Series& b, const char* op) {
    if (a.order() != b.order())
        throw UsageError(std::string(op) + ": mismatched truncation orders " +
                         std::to_string(a.order()) + " and " + std::to_string(b.order()));
}

// Below this order the thread start-up costs more than the convolution.
constexpr int kParallelThreshold = 48;

}  // namespace

Series::Series(int order) {
    if (order < 0) throw UsageError("series order must be nonnegative");
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

Series::Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw UsageError("series needs at least one coefficient");
    for (auto& q : c_) q.canonicalize();
}

Series Series::constant(const Rational& c, int order) {
    Series s(order);
    s.c_[0] = c;
    return s;
}

Series Series::variable(int order) { return monomial(Rational(1), 1, order); }

Series Series::monomial(const Rational& c, int degree, int order) {
    Series s(order);
    if (degree < 0) throw UsageError("negative monomial degree");
    if (degree <= order) s.c_[static_cast<std::size_t>(degree)] = c;
    return s;
}

Series Series::truncated(int order) const {
    Series s(order);
    for (int k = 0; k <= std::min(order, this->order()); ++k) s.c_[k] = c_[k];
    return s;
}

Series Series::derivative() const {
    if (order() == 0) return Series(0);
    Series d(order() - 1);
    for (int k = 1; k <= order(); ++k) d.c_[k - 1] = c_[k] * k;
    return d;
}

Series Series::shifted_up(int k) const {
    Series s(order());
    for (int i = 0; i + k <= order(); ++i) s.c_[i + k] = c_[i];
    return s;
}

Series Series::shifted_down(int k) const {
    if (k > order()) throw UsageError("shift exceeds series order");
    return Series(std::vector<Rational>(c_.begin() + k, c_.end()));
}

Series Series::operator-() const {
    Series s(*this);
    for (auto& q : s.c_) q = -q;
    return s;
}

Series& Series::operator+=(const Series& o) {
    require_same_order(*this, o, "series_add");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    require_same_order(*this, o, "series_sub");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

Series& Series::operator*=(const Rational& s) {
    for (auto& q : c_) q *= s;
    return *this;
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }
Series operator*(Series a, const Rational& s) { return a *= s; }
Series operator*(const Rational& s, Series a) { return a *= s; }
Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }

Series series_mul_serial(const Series& a, const Series& b) {
    require_same_order(a, b, "series_mul");
    const int n = a.order();
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    Rational t;
    for (int k = 0; k <= n; ++k) {
        Rational acc = 0;
        for (int i = 0; i <= k; ++i) {
            if (sgn(a[i]) == 0) continue;
            t = a[i] * b[k - i];
            acc += t;
        }
        c[k] = std::move(acc);
    }
    return Series(std::move(c));
}

Series series_mul_parallel(const Series& a, const Series& b) {
    require_same_order(a, b, "series_mul");
    const int n = a.order();
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    // Row k costs k+1 products; dynamic scheduling evens out the triangle.
#pragma omp parallel for schedule(dynamic, 4)
    for (int k = 0; k <= n; ++k) {
        Rational acc = 0, t;
        for (int i = 0; i <= k; ++i) {
            if (sgn(a[i]) == 0) continue;
            t = a[i] * b[k - i];
            acc += t;
        }
        c[k] = std::move(acc);
    }
    return Series(std::move(c));
}

Series series_mul(const Series& a, const Series& b) {
    return a.order() >= kParallelThreshold ? series_mul_parallel(a, b) : series_mul_serial(a, b);
}

Series series_pow(const Series& a, unsigned k) {
    Series result = Series::constant(Rational(1), a.order());
    Series base = a;
    while (k > 0) {
        if (k & 1u) result = series_mul(result, base);
        k >>= 1;
        if (k > 0) base = series_mul(base, base);
    }
    return result;
}

Series series_recip(const Series& a) {
    if (sgn(a[0]) == 0) throw DomainError("series_recip: zero constant term");
    const int n = a.order();
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    Rational inv0 = 1 / a[0];
    b[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int i = 1; i <= k; ++i) acc += a[i] * b[k - i];
        b[k] = -acc * inv0;
    }
    return Series(std::move(b));
}

// Lagrange: if a(z) = z / phi(z) then g_n = [z^{n-1}] phi(z)^n / n.
Series series_reversion(const Series& a) {
    const int n = a.order();
    if (n < 1) throw DomainError("series_reversion: order must be at least 1");
    if (sgn(a[0]) != 0) throw DomainError("series_reversion: a(0) must vanish");
    if (sgn(a[1]) == 0) throw DomainError("series_reversion: a'(0) must be nonzero");
    Series q = a.shifted_down(1).truncated(n - 1);  // a(z)/z, order n-1
    Series phi = series_recip(q);
    std::vector<Rational> g(static_cast<std::size_t>(n) + 1);
    Series p = Series::constant(Rational(1), n - 1);
    for (int k = 1; k <= n; ++k) {
        p = series_mul(p, phi);
        g[k] = p[k - 1] / k;
    }
    return Series(std::move(g));
}

Series series_compose(const Series& a, const Series& b) {
    require_same_order(a, b, "series_compose");
    if (sgn(b[0]) != 0) throw DomainError("series_compose: inner series must vanish at 0");
    const int n = a.order();
    Series acc = Series::constant(a[n], n);
    for (int k = n - 1; k >= 0; --k) {
        acc = series_mul(acc, b);
        acc += Series::constant(a[k], n);
    }
    return acc;
}

double series_eval(const Series& a, double x) {
    long double acc = 0;
    for (int k = a.order(); k >= 0; --k) acc = acc * x + static_cast<long double>(a[k].get_d());
    return static_cast<double>(acc);
}

}  // namespace strebel
