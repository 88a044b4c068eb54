#include "latcover/point.hpp"

namespace latcover {

std::string to_string(IntPoint p) {
  return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

bool lex_less(const QPoint &a, const QPoint &b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

std::string to_string(const QPoint &p) {
  return "(" + rat_to_string(p.x) + ", " + rat_to_string(p.y) + ")";
}

}  // namespace latcover
