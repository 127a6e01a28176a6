#include "strebel/intersections.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "strebel/errors.hpp"

namespace strebel {

namespace {

std::vector<int> canonical(const TauProduct& t) {
    if (t.d.size() < 3) throw UsageError("tau product needs at least three insertions");
    for (int x : t.d)
        if (x < 0) throw UsageError("negative tau exponent");
    std::vector<int> d = t.d;
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

bool dimension_ok(const std::vector<int>& d) {
    return std::accumulate(d.begin(), d.end(), 0) == static_cast<int>(d.size()) - 3;
}

Rational string_rec(std::vector<int> d, std::map<std::vector<int>, Rational>& memo) {
    std::sort(d.begin(), d.end(), std::greater<>());
    if (!dimension_ok(d)) return 0;
    if (d.size() == 3) return 1;  // only tau_0^3 survives the dimension check
    if (auto it = memo.find(d); it != memo.end()) return it->second;
    // sum d = n-3 with n >= 4 forces at least one tau_0; remove it
    auto zero = std::find(d.begin(), d.end(), 0);
    std::vector<int> rest(d.begin(), zero);
    rest.insert(rest.end(), zero + 1, d.end());
    Rational total = 0;
    for (std::size_t j = 0; j < rest.size(); ++j) {
        if (rest[j] == 0) continue;
        auto lowered = rest;
        --lowered[j];
        total += string_rec(lowered, memo);
    }
    memo.emplace(d, total);
    return total;
}

}  // namespace

Rational intersection_number(const TauProduct& t) {
    auto d = canonical(t);
    if (!dimension_ok(d)) return 0;
    BigInt den = 1;
    for (int x : d) den *= factorial(static_cast<unsigned>(x));
    return make_rational(factorial(static_cast<unsigned>(d.size() - 3)), den);
}

Rational string_equation_oracle(const TauProduct& t) {
    std::map<std::vector<int>, Rational> memo;
    return string_rec(canonical(t), memo);
}

std::vector<TauProduct> admissible_products(int n) {
    if (n < 3) throw UsageError("admissible_products: n must be >= 3");
    std::vector<TauProduct> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int slots, int remaining) {
        if (slots == 0) {
            if (remaining == 0) out.push_back({cur});
            return;
        }
        for (int p = remaining; p >= 0; --p) {
            cur.push_back(p);
            rec(slots - 1, remaining - p);
            cur.pop_back();
        }
    };
    rec(n, n - 3);
    return out;
}

}  // namespace strebel
