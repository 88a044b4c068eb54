#pragma once

#include "latcover/sqrtval.hpp"

#include <string>
#include <vector>

namespace latcover {

// closed interval [lo, hi]; hi may be infinite
struct SqrtInterval {
  SqrtVal lo, hi;
};

// throws std::invalid_argument when lo > hi
SqrtInterval make_interval(const SqrtVal &lo, const SqrtVal &hi);

bool interval_contains(const SqrtInterval &iv, const SqrtVal &x);
bool interval_contains(const SqrtInterval &outer, const SqrtInterval &inner);

struct IntervalUnion {
  std::vector<SqrtInterval> components;  // disjoint, non-adjacent, sorted
  std::vector<SqrtInterval> gaps;        // open intervals between components
};

// touching closed intervals merge; gaps are the open holes between components
IntervalUnion interval_union(std::vector<SqrtInterval> intervals);

std::string to_string(const SqrtInterval &iv);

}  // namespace latcover
