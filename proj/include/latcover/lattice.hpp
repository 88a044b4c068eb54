#pragma once

#include "latcover/point.hpp"

#include <map>
#include <vector>

namespace latcover {

// full-rank sublattice of Z^2 spanned by u, v
struct IntLattice {
  IntPoint u, v;
};

inline Int lat_det(const IntLattice &L) { return cross(L.u, L.v); }
inline bool is_full_rank(const IntLattice &L) { return lat_det(L) != 0; }
bool operator==(const IntLattice &a, const IntLattice &b);

// Gauss-Lagrange reduction. Postconditions:
//   |u|^2 <= |v|^2  and  2*|u.v| <= |u|^2,
// which makes u a shortest nonzero lattice vector. Signs are normalized
// (both vectors lex-positive) so the result is deterministic.
// Throws std::invalid_argument on a rank-deficient basis.
IntLattice gauss_reduce(IntLattice L);

// squared length of a shortest nonzero vector
Int shortest_vector_sq(const IntLattice &L);

// membership of an integer point, any basis
bool lattice_member(const IntLattice &L, IntPoint p);
// equality as point sets
bool same_lattice(const IntLattice &a, const IntLattice &b);

// rational coordinates (a, b) with p = a*u + b*v
void basis_coords(const IntLattice &L, const QPoint &p, Rat &a, Rat &b);

// unique representative of p + L inside the half-open fundamental
// parallelogram {a*u + b*v : 0 <= a < 1, 0 <= b < 1} of a reduced basis
IntPoint canonical_residue(const IntLattice &reduced, IntPoint p);

// all |det| canonical residues, lex sorted; reduces internally
std::vector<IntPoint> all_residues(const IntLattice &L);

// canonical residue -> multiplicity
std::map<IntPoint, long long> coset_decompose(const std::vector<IntPoint> &points,
                                              const IntLattice &L);

// integer points z with |z - center|^2 <= radius_sq, lex sorted
std::vector<IntPoint> points_in_disk(const QPoint &center, const Rat &radius_sq);

// min over lambda in L of |delta + lambda|^2 (zero when delta is in L).
// The finite search is complete: see the bound derivation in the source.
Rat min_norm_in_coset(const QPoint &delta, const IntLattice &L);

std::string to_string(const IntLattice &L);

}  // namespace latcover
