#include "latcover/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace latcover {

SqrtInterval make_interval(const SqrtVal &lo, const SqrtVal &hi) {
  if (lo > hi) throw std::invalid_argument("interval with lo > hi");
  return {lo, hi};
}

bool interval_contains(const SqrtInterval &iv, const SqrtVal &x) {
  return iv.lo <= x && x <= iv.hi;
}

bool interval_contains(const SqrtInterval &outer, const SqrtInterval &inner) {
  return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

IntervalUnion interval_union(std::vector<SqrtInterval> intervals) {
  IntervalUnion out;
  if (intervals.empty()) return out;
  std::sort(intervals.begin(), intervals.end(),
            [](const SqrtInterval &a, const SqrtInterval &b) {
              int c = sqrt_cmp(a.lo, b.lo);
              if (c != 0) return c < 0;
              return sqrt_cmp(a.hi, b.hi) < 0;
            });
  SqrtInterval cur = intervals.front();
  for (size_t i = 1; i < intervals.size(); ++i) {
    const auto &next = intervals[i];
    if (next.lo <= cur.hi) {
      if (next.hi > cur.hi) cur.hi = next.hi;
    } else {
      out.components.push_back(cur);
      cur = next;
    }
  }
  out.components.push_back(cur);
  for (size_t i = 1; i < out.components.size(); ++i)
    out.gaps.push_back({out.components[i - 1].hi, out.components[i].lo});
  return out;
}

std::string to_string(const SqrtInterval &iv) {
  return "[" + iv.lo.to_human_string() + ", " + iv.hi.to_human_string() +
         (iv.hi.is_infinite() ? ")" : "]");
}

}  // namespace latcover
