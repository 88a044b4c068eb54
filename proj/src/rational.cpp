#include "latcover/rational.hpp"

#include <stdexcept>

namespace latcover {

Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

Int rat_floor(const Rat &r) {
  Int n = rat_num(r), d = rat_den(r);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

Int rat_ceil(const Rat &r) { return -rat_floor(-r); }

Int isqrt_floor(const Int &n) {
  if (n < 0) throw std::invalid_argument("isqrt of a negative number");
  return sqrt(n);  // boost floor square root
}

bool is_perfect_square(const Int &n, Int *root) {
  if (n < 0) return false;
  Int r = isqrt_floor(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

std::optional<Rat> rat_sqrt_exact(const Rat &q) {
  if (q < 0) return std::nullopt;
  Int rn, rd;
  if (!is_perfect_square(rat_num(q), &rn)) return std::nullopt;
  if (!is_perfect_square(rat_den(q), &rd)) return std::nullopt;
  return make_rat(rn, rd);
}

// floor(sqrt(p/q)) = floor(isqrt(p*q)/q) for q > 0
static Int floor_sqrt_rat(const Rat &x) {
  Int p = rat_num(x), q = rat_den(x);
  return isqrt_floor(p * q) / q;
}

static Int ceil_sqrt_rat(const Rat &x) {
  Int f = floor_sqrt_rat(x);
  return (Rat(f) * Rat(f) == x) ? f : f + 1;
}

Rat sqrt_lower_bound(const Rat &x, unsigned k) {
  if (x < 0) throw std::invalid_argument("sqrt bound of a negative number");
  Rat scaled = x * Rat(Int(1) << (2 * k));
  return make_rat(floor_sqrt_rat(scaled), Int(1) << k);
}

Rat sqrt_upper_bound(const Rat &x, unsigned k) {
  if (x < 0) throw std::invalid_argument("sqrt bound of a negative number");
  Rat scaled = x * Rat(Int(1) << (2 * k));
  return make_rat(ceil_sqrt_rat(scaled), Int(1) << k);
}

Int floor_c_plus_sqrt(const Rat &c, const Rat &rem) {
  if (rem < 0) throw std::invalid_argument("negative radicand");
  auto le = [&](const Int &n) {
    Rat t = Rat(n) - c;
    return t <= 0 || t * t <= rem;
  };
  Int n = rat_floor(c + sqrt_upper_bound(rem, 16));
  while (!le(n)) --n;
  while (le(n + 1)) ++n;
  return n;
}

Int ceil_c_minus_sqrt(const Rat &c, const Rat &rem) {
  if (rem < 0) throw std::invalid_argument("negative radicand");
  auto ge = [&](const Int &n) {
    Rat t = c - Rat(n);
    return t <= 0 || t * t <= rem;
  };
  Int n = rat_ceil(c - sqrt_upper_bound(rem, 16));
  while (!ge(n)) ++n;
  while (ge(n - 1)) --n;
  return n;
}

std::string rat_to_string(const Rat &r) {
  Int n = rat_num(r), d = rat_den(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

std::string rat_to_decimal(const Rat &r, unsigned digits) {
  Int pow10 = 1;
  for (unsigned i = 0; i < digits; ++i) pow10 *= 10;
  Rat scaled = r * Rat(pow10);
  Int a = rat_num(scaled), d = rat_den(scaled);
  bool neg = a < 0;
  if (neg) a = -a;
  Int n = (2 * a + d) / (2 * d);  // round half away from zero
  std::string body;
  if (digits == 0) {
    body = n.str();
  } else {
    Int ip = n / pow10, fp = n % pow10;
    std::string frac = fp.str();
    body = ip.str() + "." + std::string(digits - frac.size(), '0') + frac;
  }
  return (neg && n != 0) ? "-" + body : body;
}

std::optional<Rat> parse_rational(std::string_view s) {
  size_t i = 0;
  auto read_int = [&](Int &out, bool sign_ok) -> bool {
    bool neg = false;
    if (sign_ok && i < s.size() && (s[i] == '+' || s[i] == '-')) {
      neg = s[i] == '-';
      ++i;
    }
    size_t start = i;
    Int v = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    if (i == start) return false;
    out = neg ? -v : v;
    return true;
  };
  Int num, den = 1;
  if (!read_int(num, true)) return std::nullopt;
  if (i < s.size() && s[i] == '/') {
    ++i;
    if (!read_int(den, false)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  if (i != s.size()) return std::nullopt;
  return make_rat(num, den);
}

long long to_ll(const Int &n) { return n.convert_to<long long>(); }

}  // namespace latcover
