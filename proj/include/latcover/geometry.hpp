#pragma once

#include "latcover/lattice.hpp"
#include "latcover/point.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latcover {

struct Circle {
  QPoint center;
  Rat radius_sq;  // -1 marks the empty circle (contains nothing)
};

bool circle_contains(const Circle &c, const QPoint &p);

// exact rational circumcenter; nullopt iff collinear
std::optional<QPoint> circumcenter(const QPoint &p, const QPoint &q, const QPoint &r);

// smallest enclosing circle, exact (Welzl recursion over rationals,
// at most 3 support points). Throws std::invalid_argument on empty input.
Circle sec(std::vector<QPoint> points);

// optimal center witness for max_points_in_disk:
// center = (ax + bx*sqrt(D), ay + by*sqrt(D)); D = 0 for rational centers
struct DiskWitness {
  Rat ax, bx, ay, by;
  Int D;
  std::string describe() const;
};

struct MaxPointsResult {
  long long count = 0;
  DiskWitness witness;
};

// exact maximum number of integer points in a closed disk of squared
// radius radius_sq, over all center placements. Candidates: lattice and
// half-integer centers, plus every center with two lattice points on the
// boundary; those live in a quadratic extension and the containment
// predicate is decided exactly there. Witness ties break in favor of the
// earliest candidate in the canonical enumeration order.
MaxPointsResult max_points_in_disk(const Rat &radius_sq);

}  // namespace latcover
