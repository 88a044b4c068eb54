#pragma once

#include "latcover/rational.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace latcover {

// An exact nonnegative real of the form sqrt(radicand), radicand rational,
// plus a distinguished positive infinity. Comparisons never leave Q.
class SqrtVal {
 public:
  SqrtVal() : inf_(false), rad_(0) {}

  static SqrtVal sqrt_of(const Rat &radicand);   // value sqrt(radicand)
  static SqrtVal of_rational(const Rat &x);      // value x, x >= 0
  static SqrtVal infinity();

  bool is_infinite() const { return inf_; }
  // only valid for finite values
  const Rat &radicand() const { return rad_; }

  // machine form: "sqrt(p/q)", "sqrt(p)", or "inf"
  std::string to_machine_string() const;
  // human form: perfect squares simplify to "p/q", otherwise the machine form
  std::string to_human_string() const;

 private:
  bool inf_;
  Rat rad_;
};

// -1, 0, +1; agrees with the reals sqrt(a), sqrt(b)
int sqrt_cmp(const SqrtVal &a, const SqrtVal &b);

inline bool operator==(const SqrtVal &a, const SqrtVal &b) { return sqrt_cmp(a, b) == 0; }
inline bool operator!=(const SqrtVal &a, const SqrtVal &b) { return sqrt_cmp(a, b) != 0; }
inline bool operator<(const SqrtVal &a, const SqrtVal &b) { return sqrt_cmp(a, b) < 0; }
inline bool operator<=(const SqrtVal &a, const SqrtVal &b) { return sqrt_cmp(a, b) <= 0; }
inline bool operator>(const SqrtVal &a, const SqrtVal &b) { return sqrt_cmp(a, b) > 0; }
inline bool operator>=(const SqrtVal &a, const SqrtVal &b) { return sqrt_cmp(a, b) >= 0; }

inline std::string to_machine_string(const SqrtVal &v) { return v.to_machine_string(); }
inline std::string to_human_string(const SqrtVal &v) { return v.to_human_string(); }
// decimal hint; "inf" for infinity
std::string approx_decimal(const SqrtVal &v, unsigned digits);
// accepts the machine forms plus bare rationals
std::optional<SqrtVal> parse_sqrtval(std::string_view s);

}  // namespace latcover
