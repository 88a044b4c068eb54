#pragma once

#include "latcover/certificate.hpp"
#include "latcover/interval.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latcover {

enum class Multiplicity { partition, cover };

struct CoverageResult {
  bool covered = false;
  std::optional<IntPoint> witness;  // unhit canonical residue
  Multiplicity multiplicity = Multiplicity::partition;
  long long overlap = 0;  // total points minus distinct residues hit
};

CoverageResult check_coverage(const CoveringCertificate &cert);

// max over clusters of max squared center-to-point distance
Rat compute_beta_sq(const CoveringCertificate &cert);

// exact min squared distance between distinct centers of the periodic
// family; 0 when two clusters share a center modulo the lattice
Rat compute_alpha_sq(const CoveringCertificate &cert);

struct VerificationReport {
  CoverageResult coverage;
  Rat alpha_sq, beta_sq;
  bool admissible = false;  // alpha_sq > 0 and 4*beta_sq <= alpha_sq
  std::optional<SqrtInterval> interval;  // [sqrt(4/alpha_sq), sqrt(1/beta_sq)]
  bool verified() const { return coverage.covered && admissible; }
};

VerificationReport verify(const CoveringCertificate &cert);

// one translated copy of a cluster
struct Instance {
  QPoint center;
  int cluster = 0;
  IntPoint offset;  // lattice translation
};

// all instances whose center lies in [-window, window]^2, sorted by center
std::vector<Instance> window_instances(const CoveringCertificate &cert, long long window);

struct WindowCheckResult {
  bool pass = true;
  enum class Kind { none, coverage, disjointness } kind = Kind::none;
  IntPoint point;            // coverage witness: uncovered lattice point
  QPoint center_a, center_b; // disjointness witness: offending center pair
  std::string describe() const;
};

// Independent geometric oracle at a concrete rational d: every lattice
// point of the window must lie in its own instance's unit disk after
// dilation by d, and all instance centers in the window must be >= 2/d
// apart. Coverage is checked first; tangency passes. The window must be
// at least twice the diameter bound of one period (throws otherwise).
WindowCheckResult window_check(const CoveringCertificate &cert, const Rat &d,
                               long long window);

// exact plane isometry x -> R x + t with R rational orthogonal
struct Isometry {
  std::array<Rat, 4> r;  // row-major
  Rat tx, ty;
  QPoint apply(const QPoint &p) const;
};

struct CongruenceResult {
  bool pass = false;
  std::vector<Isometry> maps;  // cluster 0 -> cluster k
  std::optional<std::pair<int, int>> fail_pair;
};

// every cluster congruent to cluster 0, centers corresponding
CongruenceResult strict_congruence(const CoveringCertificate &cert);

struct TransitivityResult {
  bool pass = false;
  std::optional<std::pair<int, int>> fail_pair;
};

// requires strict_congruence to have passed; checks that each pair of
// cluster orbits is linked by an isometry normalizing the lattice and
// permuting the orbits modulo lattice translations
TransitivityResult strict_transitivity(const CoveringCertificate &cert);

}  // namespace latcover
