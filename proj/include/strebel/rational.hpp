#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace strebel {

// gmpxx keeps mpq_class canonical after every arithmetic operation;
// only direct construction from (num, den) needs an explicit canonicalize().
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

// Exact binary value of a finite double.
Rational rational_from_double(double x);

// Accepts "p", "p/q", or a decimal literal such as "1.25" (converted exactly).
Rational parse_rational(std::string_view s);

// "p/q" always, even for integers ("3/1"), so the format is uniform.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

// log|q| without overflow for huge numerators or denominators; q != 0.
double log_abs(const Rational& q);
double log_abs(const BigInt& z);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace strebel
