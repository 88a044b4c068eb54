#pragma once

#include "latcover/rational.hpp"

#include <compare>
#include <string>

namespace latcover {

// integer lattice point; coordinates are bounded (|x| <= 1e8) at every
// input boundary, so products of two coordinates stay well inside int64,
// and anything beyond that is computed in Int
struct IntPoint {
  long long x = 0, y = 0;
  friend auto operator<=>(const IntPoint &, const IntPoint &) = default;
};

inline IntPoint operator+(IntPoint a, IntPoint b) { return {a.x + b.x, a.y + b.y}; }
inline IntPoint operator-(IntPoint a, IntPoint b) { return {a.x - b.x, a.y - b.y}; }
inline IntPoint operator-(IntPoint a) { return {-a.x, -a.y}; }
inline IntPoint operator*(long long k, IntPoint a) { return {k * a.x, k * a.y}; }

inline Int dot(IntPoint a, IntPoint b) { return Int(a.x) * b.x + Int(a.y) * b.y; }
inline Int cross(IntPoint a, IntPoint b) { return Int(a.x) * b.y - Int(a.y) * b.x; }
inline Int norm_sq(IntPoint a) { return dot(a, a); }

std::string to_string(IntPoint p);

struct QPoint {
  Rat x, y;
};

inline QPoint operator+(const QPoint &a, const QPoint &b) { return {a.x + b.x, a.y + b.y}; }
inline QPoint operator-(const QPoint &a, const QPoint &b) { return {a.x - b.x, a.y - b.y}; }
inline bool operator==(const QPoint &a, const QPoint &b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const QPoint &a, const QPoint &b) { return !(a == b); }

inline QPoint to_qpoint(IntPoint p) { return {Rat(p.x), Rat(p.y)}; }
inline Rat norm_sq(const QPoint &a) { return a.x * a.x + a.y * a.y; }
inline Rat dist_sq(const QPoint &a, const QPoint &b) { return norm_sq(a - b); }

// x first, then y
bool lex_less(const QPoint &a, const QPoint &b);

std::string to_string(const QPoint &p);

}  // namespace latcover
