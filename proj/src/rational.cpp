#include "strebel/rational.hpp"

#include <cmath>
#include <string>

#include "strebel/errors.hpp"

namespace strebel {

Rational make_rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("non-finite value has no rational form");
    Rational q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw UsageError("empty number");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt p(s.substr(0, slash), 10), q(s.substr(slash + 1), 10);
            return make_rational(p, q);
        }
        auto dot = s.find_first_of(".eE");
        if (dot == std::string::npos) return Rational(BigInt(s, 10));
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed rational: " + s);
    }
    // decimal literal: go through the exact decimal expansion, not through double
    std::size_t pos = 0;
    std::string mant = s, expo;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
        mant = s.substr(0, e);
        expo = s.substr(e + 1);
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
        neg = mant[0] == '-';
        mant = mant.substr(1);
    }
    std::string digits;
    long scale = 0;
    bool seen_dot = false;
    for (; pos < mant.size(); ++pos) {
        char c = mant[pos];
        if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits += c;
            if (seen_dot) ++scale;
        } else {
            throw UsageError("malformed number: " + s);
        }
    }
    if (digits.empty()) throw UsageError("malformed number: " + s);
    long e10 = 0;
    if (!expo.empty()) {
        try {
            std::size_t used = 0;
            e10 = std::stol(expo, &used);
            if (used != expo.size()) throw UsageError("malformed exponent: " + s);
        } catch (const std::logic_error&) {
            throw UsageError("malformed exponent: " + s);
        }
    }
    e10 -= scale;
    BigInt num(digits, 10), ten = 10, p;
    mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(e10)));
    Rational q = e10 >= 0 ? Rational(num * p) : make_rational(num, p);
    return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

double log_abs(const BigInt& z) {
    if (z == 0) throw DomainError("log of zero");
    long e = 0;
    double m = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

double log_abs(const Rational& q) { return log_abs(q.get_num()) - log_abs(q.get_den()); }

BigInt factorial(unsigned n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace strebel
