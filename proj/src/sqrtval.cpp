#include "latcover/sqrtval.hpp"

#include <stdexcept>

namespace latcover {

SqrtVal SqrtVal::sqrt_of(const Rat &radicand) {
  if (radicand < 0) throw std::invalid_argument("sqrt of a negative number");
  SqrtVal v;
  v.rad_ = radicand;
  return v;
}

SqrtVal SqrtVal::of_rational(const Rat &x) {
  if (x < 0) throw std::invalid_argument("negative value");
  SqrtVal v;
  v.rad_ = x * x;
  return v;
}

SqrtVal SqrtVal::infinity() {
  SqrtVal v;
  v.inf_ = true;
  return v;
}

int sqrt_cmp(const SqrtVal &a, const SqrtVal &b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return 0;
    return a.is_infinite() ? 1 : -1;
  }
  if (a.radicand() < b.radicand()) return -1;
  if (a.radicand() > b.radicand()) return 1;
  return 0;
}

std::string SqrtVal::to_machine_string() const {
  if (inf_) return "inf";
  return "sqrt(" + rat_to_string(rad_) + ")";
}

std::string SqrtVal::to_human_string() const {
  if (inf_) return "inf";
  if (auto r = rat_sqrt_exact(rad_)) return rat_to_string(*r);
  return to_machine_string();
}

std::string approx_decimal(const SqrtVal &v, unsigned digits) {
  if (v.is_infinite()) return "inf";
  Int pow10 = 1;
  for (unsigned i = 0; i < digits; ++i) pow10 *= 10;
  // round(sqrt(rad) * 10^digits) half up, computed exactly
  Int n = floor_c_plus_sqrt(make_rat(Int(1), Int(2)), v.radicand() * Rat(pow10 * pow10));
  if (digits == 0) return n.str();
  Int ip = n / pow10, fp = n % pow10;
  std::string frac = fp.str();
  return ip.str() + "." + std::string(digits - frac.size(), '0') + frac;
}

std::optional<SqrtVal> parse_sqrtval(std::string_view s) {
  if (s == "inf") return SqrtVal::infinity();
  constexpr std::string_view pre = "sqrt(";
  if (s.size() > pre.size() + 1 && s.substr(0, pre.size()) == pre && s.back() == ')') {
    auto inner = parse_rational(s.substr(pre.size(), s.size() - pre.size() - 1));
    if (!inner || *inner < 0) return std::nullopt;
    return SqrtVal::sqrt_of(*inner);
  }
  auto r = parse_rational(s);
  if (!r || *r < 0) return std::nullopt;
  return SqrtVal::of_rational(*r);
}

}  // namespace latcover
