#include "latcover/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace latcover {

bool operator==(const IntLattice &a, const IntLattice &b) {
  return a.u == b.u && a.v == b.v;
}

static Int abs_int(Int x) { return x < 0 ? -x : x; }

// floor division for any nonzero divisor
static Int fdiv(const Int &n, const Int &d) {
  Int q = n / d;
  if (q * d != n && ((n < 0) != (d < 0))) --q;
  return q;
}

static bool lex_positive(IntPoint p) {
  return p.x > 0 || (p.x == 0 && p.y > 0);
}

// nearest integer to t/d, ties toward zero (keeps the reduction stable)
static Int round_div(const Int &t, const Int &d) {
  Int q = t / d;
  Int best = q;
  Int berr = abs_int(t - q * d);
  for (Int cand : {Int(q - 1), Int(q + 1)}) {
    Int err = abs_int(t - cand * d);
    if (err < berr || (err == berr && abs_int(cand) < abs_int(best))) {
      best = cand;
      berr = err;
    }
  }
  return best;
}

IntLattice gauss_reduce(IntLattice L) {
  if (!is_full_rank(L)) throw std::invalid_argument("rank-deficient basis");
  IntPoint u = L.u, v = L.v;
  for (;;) {
    if (norm_sq(v) < norm_sq(u)) std::swap(u, v);
    Int m = round_div(dot(u, v), norm_sq(u));
    if (m == 0) break;
    long long mm = to_ll(m);
    v = v - mm * u;
  }
  // Any reduced basis confines all vectors of norm <= |v|^2 to
  // +-{u, v, u+v, u-v}, so choosing canonically from that set makes the
  // output intrinsic to the lattice (the loop alone is ambiguous when
  // 2|u.v| equals |u|^2, where v and v-u tie in norm).
  IntPoint cand[4] = {u, v, u + v, u - v};
  for (IntPoint &w : cand)
    if (!lex_positive(w)) w = -w;
  auto better = [](IntPoint a, IntPoint b) {
    Int na = norm_sq(a), nb = norm_sq(b);
    return na != nb ? na < nb : b < a;  // shortest first, then lex-greatest
  };
  IntPoint su = cand[0];
  for (IntPoint w : cand)
    if (better(w, su)) su = w;
  IntPoint sv{0, 0};
  bool have = false;
  for (IntPoint w : cand)
    if (cross(su, w) != 0 && (!have || better(w, sv))) {
      sv = w;
      have = true;
    }
  return {su, sv};
}

Int shortest_vector_sq(const IntLattice &L) {
  return norm_sq(gauss_reduce(L).u);
}

bool lattice_member(const IntLattice &L, IntPoint p) {
  Int d = lat_det(L);
  if (d == 0) throw std::invalid_argument("rank-deficient basis");
  return cross(p, L.v) % d == 0 && cross(L.u, p) % d == 0;
}

bool same_lattice(const IntLattice &a, const IntLattice &b) {
  return lattice_member(a, b.u) && lattice_member(a, b.v) &&
         lattice_member(b, a.u) && lattice_member(b, a.v);
}

void basis_coords(const IntLattice &L, const QPoint &p, Rat &a, Rat &b) {
  Int d = lat_det(L);
  if (d == 0) throw std::invalid_argument("rank-deficient basis");
  Rat cx = p.x * L.v.y - p.y * L.v.x;
  Rat cy = Rat(L.u.x) * p.y - Rat(L.u.y) * p.x;
  a = cx / Rat(d);
  b = cy / Rat(d);
}

IntPoint canonical_residue(const IntLattice &reduced, IntPoint p) {
  Int d = lat_det(reduced);
  // coordinates of p are (cross(p, v)/d, cross(u, p)/d); shifting by the
  // floors lands both in [0, 1)
  Int k = fdiv(cross(p, reduced.v), d);
  Int l = fdiv(cross(reduced.u, p), d);
  return p - to_ll(k) * reduced.u - to_ll(l) * reduced.v;
}

std::vector<IntPoint> all_residues(const IntLattice &L) {
  IntLattice R = gauss_reduce(L);
  Int d = lat_det(R);
  Int s = d < 0 ? -1 : 1;
  Int absd = abs_int(d);
  long long xs[] = {0, R.u.x, R.v.x, R.u.x + R.v.x};
  long long ys[] = {0, R.u.y, R.v.y, R.u.y + R.v.y};
  long long x0 = *std::min_element(xs, xs + 4), x1 = *std::max_element(xs, xs + 4);
  long long y0 = *std::min_element(ys, ys + 4), y1 = *std::max_element(ys, ys + 4);
  std::vector<IntPoint> out;
  for (long long x = x0; x <= x1; ++x)
    for (long long y = y0; y <= y1; ++y) {
      IntPoint z{x, y};
      Int a = cross(z, R.v) * s, b = cross(R.u, z) * s;
      if (a >= 0 && a < absd && b >= 0 && b < absd) out.push_back(z);
    }
  std::sort(out.begin(), out.end());
  assert(Int((long long)out.size()) == absd);
  return out;
}

std::map<IntPoint, long long> coset_decompose(const std::vector<IntPoint> &points,
                                              const IntLattice &L) {
  IntLattice R = gauss_reduce(L);
  std::map<IntPoint, long long> out;
  for (const auto &p : points) ++out[canonical_residue(R, p)];
  return out;
}

std::vector<IntPoint> points_in_disk(const QPoint &center, const Rat &radius_sq) {
  std::vector<IntPoint> out;
  if (radius_sq < 0) return out;
  Int x0 = ceil_c_minus_sqrt(center.x, radius_sq);
  Int x1 = floor_c_plus_sqrt(center.x, radius_sq);
  for (Int x = x0; x <= x1; ++x) {
    Rat dx = Rat(x) - center.x;
    Rat remy = radius_sq - dx * dx;
    if (remy < 0) continue;
    Int y0 = ceil_c_minus_sqrt(center.y, remy);
    Int y1 = floor_c_plus_sqrt(center.y, remy);
    for (Int y = y0; y <= y1; ++y) out.push_back({to_ll(x), to_ll(y)});
  }
  return out;
}

Rat min_norm_in_coset(const QPoint &delta, const IntLattice &L) {
  IntLattice R = gauss_reduce(L);
  Rat a, b;
  basis_coords(R, delta, a, b);
  auto nearest = [](const Rat &x) {
    return rat_floor(x + make_rat(Int(1), Int(2)));
  };
  long long i0 = -to_ll(nearest(a)), j0 = -to_ll(nearest(b));
  auto value = [&](long long i, long long j) {
    QPoint lam{Rat(i * R.u.x + j * R.v.x), Rat(i * R.u.y + j * R.v.y)};
    return norm_sq(delta + lam);
  };
  Rat best = value(i0, j0);
  if (best == 0) return best;
  // any minimizer lambda satisfies |delta + lambda|^2 <= best, so
  // |lambda|^2 <= (|delta| + sqrt(best))^2 <= 2(|delta|^2 + best) =: B,
  // and its coefficients obey i^2 <= B |v|^2 / det^2, j^2 <= B |u|^2 / det^2
  Rat B = 2 * (norm_sq(delta) + best);
  Rat det2 = Rat(lat_det(R)) * Rat(lat_det(R));
  long long I = to_ll(isqrt_floor(rat_ceil(B * Rat(norm_sq(R.v)) / det2)));
  long long J = to_ll(isqrt_floor(rat_ceil(B * Rat(norm_sq(R.u)) / det2)));
  assert(-I <= i0 && i0 <= I && -J <= j0 && j0 <= J);
  for (long long i = -I; i <= I; ++i)
    for (long long j = -J; j <= J; ++j) {
      Rat n = value(i, j);
      if (n < best) best = n;
    }
  return best;
}

std::string to_string(const IntLattice &L) {
  return "[" + to_string(L.u) + ", " + to_string(L.v) + "]";
}

}  // namespace latcover
