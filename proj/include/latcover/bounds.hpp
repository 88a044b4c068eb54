#pragma once

#include "latcover/geometry.hpp"
#include "latcover/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latcover {

struct DensityVerdict {
  Rat d;
  long long k = 0;      // max points of the scaled lattice in one unit disk
  int comparison = 0;   // sign of k^2 * d^4 - 12
  bool uncoverable = false;  // k^2 * d^4 < 12; otherwise inconclusive
  DiskWitness witness;
  std::string verdict_name() const { return uncoverable ? "uncoverable" : "inconclusive"; }
};

// k = max_points_in_disk(1/d^2); uncoverable iff k^2 d^4 < 12 exactly.
// Math notes: docs/density-bounds.md. Throws on d <= 0.
DensityVerdict density_verdict(const Rat &d);

struct ScanResult {
  std::vector<DensityVerdict> rows;            // at the inclusive grid points
  std::optional<Rat> largest_uncoverable;      // largest grid d proved uncoverable
};

// decimal form of the reference constant 2(2*sqrt(3)/3 - 1), the prior
// two-point lower bound this scan is compared against
std::string prior_bound_decimal(int digits);

// steps = number of grid points; steps == 1 scans {d_lo}.
// Requires 0 < d_lo < d_hi (d_lo == d_hi allowed only with steps == 1).
ScanResult threshold_scan(const Rat &d_lo, const Rat &d_hi, int steps);

}  // namespace latcover
