#pragma once

#include "latcover/lattice.hpp"
#include "latcover/point.hpp"
#include "latcover/sqrtval.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latcover {

// one motif copy: the integer points it covers plus its center
struct Cluster {
  std::vector<IntPoint> points;  // non-empty, pairwise distinct
  QPoint center;                 // free rational point, not forced to centroid
};

// the periodic family { cluster_k + lambda : k, lambda in lattice }
struct CoveringCertificate {
  std::string name;
  IntLattice lattice;
  std::vector<Cluster> clusters;  // non-empty
};

bool operator==(const Cluster &a, const Cluster &b);
bool operator==(const CoveringCertificate &a, const CoveringCertificate &b);

struct CertificateError : std::runtime_error {
  int line;
  CertificateError(int line_, const std::string &msg);
};

// line-oriented text format; see docs/certificate-format.md.
// Throws CertificateError with a 1-based line number on malformed input.
CoveringCertificate parse_certificate(std::string_view text);
std::string serialize_certificate(const CoveringCertificate &cert);

// built-in catalog
std::vector<std::string> builtin_names();            // "B1".."B6"
std::string builtin_summary(const std::string &id);  // one-line description
// accepts "B1".."B6" or the alias names; throws std::out_of_range otherwise
CoveringCertificate builtin(std::string_view name);

struct SearchTarget {
  Rat alpha_sq_min;   // > 0
  Rat beta_sq_max;    // >= 0
  int max_index = 12;
  int max_orbits = 8;
};

// alpha_sq_min = 4/d_lo^2, beta_sq_max = 1/d_hi^2 (0 when d_hi is infinite).
// Throws std::invalid_argument unless 0 < d_lo <= d_hi.
SearchTarget target_from_interval(const SqrtVal &d_lo, const SqrtVal &d_hi);

}  // namespace latcover
