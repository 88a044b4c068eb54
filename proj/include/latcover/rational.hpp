#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace latcover {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// cpp_rational's two-argument constructor rejects negative denominators,
// so construction goes through here. Result is in lowest terms, den > 0.
Rat make_rat(Int num, Int den);

inline Int rat_num(const Rat &r) { return numerator(r); }
inline Int rat_den(const Rat &r) { return denominator(r); }

Int rat_floor(const Rat &r);
Int rat_ceil(const Rat &r);

// floor(sqrt(n)), n >= 0
Int isqrt_floor(const Int &n);
bool is_perfect_square(const Int &n, Int *root = nullptr);

// exact nonnegative square root of q if q is a square of a rational
std::optional<Rat> rat_sqrt_exact(const Rat &q);

// dyadic bracketing: sqrt_lower_bound(x,k) <= sqrt(x) <= sqrt_upper_bound(x,k),
// both with denominator 2^k, so the gap is at most 2^(1-k)
Rat sqrt_lower_bound(const Rat &x, unsigned k);
Rat sqrt_upper_bound(const Rat &x, unsigned k);

// largest integer n with n <= c + sqrt(rem), rem >= 0
Int floor_c_plus_sqrt(const Rat &c, const Rat &rem);
// smallest integer n with n >= c - sqrt(rem), rem >= 0
Int ceil_c_minus_sqrt(const Rat &c, const Rat &rem);

// "p/q", or "p" when q == 1
std::string rat_to_string(const Rat &r);
// fixed-point decimal, `digits` places, rounded half away from zero
std::string rat_to_decimal(const Rat &r, unsigned digits);
// accepts [+-]?digits or [+-]?digits/digits; nullopt on anything else
std::optional<Rat> parse_rational(std::string_view s);

long long to_ll(const Int &n);

}  // namespace latcover
