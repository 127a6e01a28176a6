#pragma once

#include <vector>

#include "strebel/rational.hpp"

namespace strebel {

// Exponents d_1..d_n of a genus-0 bracket <tau_{d_1} ... tau_{d_n}>, n >= 3.
struct TauProduct {
    std::vector<int> d;
};

// (n-3)! / prod d_i! when sum d_i = n-3, zero otherwise.
Rational intersection_number(const TauProduct& t);

// Independent evaluation by the string equation, down to <tau_0^3> = 1.
Rational string_equation_oracle(const TauProduct& t);

// Every ordered exponent tuple of length n with sum n-3.
std::vector<TauProduct> admissible_products(int n);

}  // namespace strebel
