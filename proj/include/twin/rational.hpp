#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace twin {

using Rational = mpq_class;
using Valuation = std::vector<Rational>;

mpz_class floor_int(const Rational& q);
Rational frac(const Rational& q);
bool is_integer(const Rational& q);

// Always "num/den", also for integers.
std::string to_string(const Rational& q);
// Accepts "n", "n/d" and finite decimals such as "0.25".
Rational parse_rational(std::string_view text);

// The rational with the smallest denominator strictly inside (lo, hi).
// Requires 0 <= lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace twin
