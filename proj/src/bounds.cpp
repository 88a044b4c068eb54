#include "latcover/bounds.hpp"

#include <stdexcept>

namespace latcover {

DensityVerdict density_verdict(const Rat &d) {
  if (d <= 0) throw std::invalid_argument("dilation must be positive");
  DensityVerdict v;
  v.d = d;
  auto mp = max_points_in_disk(1 / (d * d));
  v.k = mp.count;
  v.witness = mp.witness;
  Rat lhs = Rat(v.k) * Rat(v.k) * d * d * d * d;
  v.comparison = lhs < 12 ? -1 : (lhs > 12 ? 1 : 0);
  v.uncoverable = v.comparison < 0;
  return v;
}

std::string prior_bound_decimal(int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  // 2(2 sqrt(3)/3 - 1) = sqrt(16/3) - 2, rounded half up at `digits` places
  Int pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  Rat c = make_rat(Int(1), Int(2)) - 2 * Rat(pow10);
  Int n = floor_c_plus_sqrt(c, make_rat(Int(16), Int(3)) * Rat(pow10 * pow10));
  if (digits == 0) return n.str();
  Int ip = n / pow10, fp = n % pow10;
  std::string frac = fp.str();
  return ip.str() + "." + std::string(digits - frac.size(), '0') + frac;
}

ScanResult threshold_scan(const Rat &d_lo, const Rat &d_hi, int steps) {
  if (steps < 1) throw std::invalid_argument("need at least one grid point");
  if (d_lo <= 0) throw std::invalid_argument("grid must be positive");
  if (steps == 1) {
    if (d_lo > d_hi) throw std::invalid_argument("reversed grid range");
  } else if (d_lo >= d_hi) {
    throw std::invalid_argument("grid range must be increasing");
  }
  ScanResult out;
  for (int i = 0; i < steps; ++i) {
    Rat d = steps == 1 ? d_lo : d_lo + (d_hi - d_lo) * Rat(i) / Rat(steps - 1);
    auto row = density_verdict(d);
    if (row.uncoverable) out.largest_uncoverable = d;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace latcover
