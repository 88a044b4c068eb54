#pragma once

#include "latcover/certificate.hpp"
#include "latcover/interval.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace latcover {

enum class Feasibility { feasible, infeasible };

// Centers pairwise >= alpha apart have planar density at most 2/(sqrt(3)*alpha^2),
// while covering needs one cluster of at most k_max = max_points_in_disk(beta_sq_max)
// points per det cells. Infeasible iff sqrt(3)*alpha_sq_min > 2*k_max, decided
// exactly as 3*alpha_sq_min^2 > 4*k_max^2.
Feasibility density_precheck(const SearchTarget &target, long long *k_max_out = nullptr);

struct SearchParams {
  SearchTarget target;
  // empty: enumerate all sublattices in Hermite normal form with
  // determinant 1..max_index, in canonical order
  std::vector<IntLattice> lattice_candidates;
  std::uint64_t node_budget = 2'000'000;  // per-lattice DFS node cap
  int threads = 1;
};

struct SearchStats {
  long long lattices_enumerated = 0;
  long long lattices_explored = 0;    // survived the root prunes
  long long lattices_root_pruned = 0;
  long long lattices_budget_aborted = 0;
  std::uint64_t nodes = 0;
};

struct SearchOutcome {
  enum class Kind { found, exhausted, budget_exceeded, infeasible };
  Kind kind = Kind::exhausted;
  std::optional<CoveringCertificate> certificate;
  Rat alpha_sq, beta_sq;     // exact values of the found certificate
  long long k_max = 0;       // cluster size cap implied by beta_sq_max
  long long winner_index = -1;  // canonical index of the found lattice
  SearchStats stats;         // deterministic: covers lattices up to the winner
  SearchTarget target;
  std::uint64_t node_budget = 0;
  std::string describe() const;
};

// Backtracking over candidate lattices: assign each coset of Z^2 mod L to a
// cluster, clusters capped by sec radius <= beta_sq_max, centers at sec
// centers, periodic center pairs >= alpha_sq_min apart. The first solution
// in canonical order wins, independent of thread count. Every returned
// certificate is re-verified and its interval contains the target interval.
SearchOutcome search_certificate(const SearchParams &params);

}  // namespace latcover
