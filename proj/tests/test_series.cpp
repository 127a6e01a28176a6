#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "strebel/errors.hpp"
#include "strebel/series.hpp"

using namespace strebel;

namespace {

Series S(std::vector<Rational> c) { return Series(std::move(c)); }
Rational q(long p, long d = 1) { return make_rational(p, d); }

// direct double loop, independent of the library kernels
Series naive_product(const Series& a, const Series& b) {
    std::vector<Rational> c(a.coeffs().size());
    for (int i = 0; i <= a.order(); ++i)
        for (int j = 0; i + j <= a.order(); ++j) c[i + j] += a[i] * b[j];
    return S(c);
}

// coefficients of I_0(z) listed by hand up to z^4
Series i0_to_4() { return S({q(1), q(0), q(1, 4), q(0), q(1, 64)}); }

Series random_series(std::mt19937_64& rng, int order, bool zero_constant = false) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 17);
    std::vector<Rational> c;
    for (int k = 0; k <= order; ++k) c.push_back(make_rational(num(rng), den(rng)));
    if (zero_constant) c[0] = 0;
    return S(c);
}

bool canonical(const Series& s) {
    for (const auto& c : s.coeffs()) {
        Rational t = c;
        t.canonicalize();
        if (t.get_num() != c.get_num() || t.get_den() != c.get_den() || c.get_den() <= 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("rational serialization and parsing") {
    CHECK(to_string(q(3)) == "3/1");
    CHECK(to_string(q(6, -4)) == "-3/2");
    CHECK(parse_rational("1.25") == q(5, 4));
    CHECK(parse_rational("-7/21") == q(-1, 3));
    CHECK(parse_rational("12") == q(12));
    CHECK(parse_rational("1e-2") == q(1, 100));
    CHECK_THROWS_AS(parse_rational("1/x"), UsageError);
    CHECK_THROWS_AS(parse_rational(""), UsageError);
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
    CHECK(rational_from_double(0.375) == q(3, 8));
    CHECK(log_abs(q(1, 8)) == doctest::Approx(-std::log(8.0)));
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
}

TEST_CASE("series_mul examples") {
    CHECK(series_mul(S({q(1), q(1), q(0)}), S({q(1), q(-1), q(0)})) == S({q(1), q(0), q(-1)}));
    const Series one_plus_z = S({q(1), q(1), q(0)});
    CHECK(series_mul(series_mul(one_plus_z, one_plus_z), one_plus_z) == S({q(1), q(3), q(3)}));
    CHECK(series_mul(i0_to_4(), i0_to_4()) == S({q(1), q(0), q(1, 2), q(0), q(3, 32)}));
    CHECK_THROWS_AS(series_mul(Series(2), Series(3)), UsageError);
}

TEST_CASE("series_pow examples") {
    std::mt19937_64 rng(1);
    CHECK(series_pow(random_series(rng, 5), 0) == Series::constant(q(1), 5));
    CHECK(series_pow(S({q(1), q(-1), q(0), q(0)}), 2) == S({q(1), q(-2), q(1), q(0)}));
    Series brute = Series::constant(q(1), 4);
    for (int i = 0; i < 5; ++i) brute = naive_product(brute, i0_to_4());
    CHECK(brute[4] == q(45, 64));
    CHECK(series_pow(i0_to_4(), 5) == brute);
}

TEST_CASE("series_recip examples") {
    const int n = 8;
    std::vector<Rational> geo(n + 1, q(1)), alt;
    for (int k = 0; k <= n; ++k) alt.push_back(q(k % 2 ? -1 : 1));
    CHECK(series_recip(Series::constant(q(1), n) - Series::variable(n)) == S(geo));
    CHECK(series_recip(Series::constant(q(1), n) + Series::variable(n)) == S(alt));
    // triangular solve: b2 = -1/4, b4 = -(1/64 + b2/4)
    Rational b2 = -q(1, 4), b4 = -(q(1, 64) + b2 * q(1, 4));
    CHECK(series_recip(i0_to_4()) == S({q(1), q(0), b2, q(0), b4}));
    CHECK(b4 == q(3, 64));
    CHECK_THROWS_AS(series_recip(Series::variable(3)), DomainError);
}

TEST_CASE("series_reversion examples") {
    CHECK(series_reversion(Series::variable(6)) == Series::variable(6));
    const Series a = S({q(0), q(1), q(1), q(0), q(0)});
    // iterative substitution g <- w - g^2
    Series g = Series::variable(4);
    for (int it = 0; it < 5; ++it) g = Series::variable(4) - naive_product(g, g);
    CHECK(g == S({q(0), q(1), q(-1), q(2), q(-5)}));
    CHECK(series_reversion(a) == g);
    CHECK_THROWS_AS(series_reversion(Series::constant(q(1), 3) + Series::variable(3)), DomainError);
    CHECK_THROWS_AS(series_reversion(Series::monomial(q(1), 2, 3)), DomainError);
}

TEST_CASE("series_compose examples") {
    std::mt19937_64 rng(2);
    const Series a = random_series(rng, 6);
    CHECK(series_compose(a, Series::variable(6)) == a);
    const Series one_plus_z = Series::constant(q(1), 4) + Series::variable(4);
    CHECK(series_compose(one_plus_z, Series::monomial(q(1), 2, 4)) == S({q(1), q(0), q(1), q(0), q(0)}));
    const Series b = S({q(0), q(1), q(1), q(0), q(0), q(0)});
    CHECK(series_compose(b, series_reversion(b)) == Series::variable(5));
    CHECK_THROWS_AS(series_compose(a, Series::constant(q(1), 6)), DomainError);
}

TEST_CASE("ring axioms, inverses and canonical form on random series") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 6; ++trial) {
        const int order = 4 + 5 * trial;
        const Series a = random_series(rng, order), b = random_series(rng, order),
                     c = random_series(rng, order);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == naive_product(a, b));
        CHECK(canonical(a * b + c));
        Series u = a;
        if (sgn(u[0]) == 0) u = u + Series::constant(q(1), order);
        CHECK(series_mul(u, series_recip(u)) == Series::constant(q(1), order));
        Series f = random_series(rng, order, true);
        f = f - Series::monomial(f[1], 1, order) + Series::variable(order);
        const Series g = series_reversion(f);
        CHECK(canonical(g));
        CHECK(series_compose(f, g) == Series::variable(order));
    }
}

TEST_CASE("parallel product equals the serial reference") {
    std::mt19937_64 rng(7);
    for (int order : {0, 1, 47, 48, 120}) {
        const Series a = random_series(rng, order), b = random_series(rng, order);
        CHECK(series_mul_parallel(a, b) == series_mul_serial(a, b));
        CHECK(series_mul(a, b) == naive_product(a, b));
    }
}

TEST_CASE("helpers: truncation, shifts, derivative, evaluation") {
    const Series a = S({q(1), q(2), q(3)});
    CHECK(a.truncated(1) == S({q(1), q(2)}));
    CHECK(a.truncated(4) == S({q(1), q(2), q(3), q(0), q(0)}));
    CHECK(a.derivative() == S({q(2), q(6)}));
    CHECK(a.shifted_up(1) == S({q(0), q(1), q(2)}));
    CHECK(a.shifted_down(1) == S({q(2), q(3)}));
    CHECK(series_eval(a, 0.5) == doctest::Approx(1 + 1 + 0.75));
    CHECK_THROWS_AS(Series(-1), UsageError);
}
