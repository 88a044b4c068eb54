#include "latcover/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace latcover {

bool circle_contains(const Circle &c, const QPoint &p) {
  if (c.radius_sq < 0) return false;
  return dist_sq(c.center, p) <= c.radius_sq;
}

std::optional<QPoint> circumcenter(const QPoint &p, const QPoint &q, const QPoint &r) {
  Rat ax = 2 * (q.x - p.x), ay = 2 * (q.y - p.y);
  Rat bx = 2 * (r.x - p.x), by = 2 * (r.y - p.y);
  Rat r1 = norm_sq(q) - norm_sq(p);
  Rat r2 = norm_sq(r) - norm_sq(p);
  Rat det = ax * by - ay * bx;
  if (det == 0) return std::nullopt;
  return QPoint{(r1 * by - ay * r2) / det, (ax * r2 - r1 * bx) / det};
}

static Circle diametral(const QPoint &a, const QPoint &b) {
  QPoint c{(a.x + b.x) / 2, (a.y + b.y) / 2};
  return {c, dist_sq(c, a)};
}

static Circle trivial_circle(const std::vector<QPoint> &R) {
  switch (R.size()) {
    case 0:
      return {{Rat(0), Rat(0)}, Rat(-1)};
    case 1:
      return {R[0], Rat(0)};
    case 2:
      return diametral(R[0], R[1]);
    default: {
      if (auto c = circumcenter(R[0], R[1], R[2]))
        return {*c, dist_sq(*c, R[0])};
      // collinear support: the widest diametral pair already encloses all
      Circle best{{Rat(0), Rat(0)}, Rat(-1)};
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          Circle d = diametral(R[i], R[j]);
          bool all = true;
          for (int k = 0; k < 3; ++k) all = all && circle_contains(d, R[k]);
          if (all && (best.radius_sq < 0 || d.radius_sq < best.radius_sq)) best = d;
        }
      return best;
    }
  }
}

static Circle welzl(const std::vector<QPoint> &P, size_t n, std::vector<QPoint> R) {
  if (n == 0 || R.size() == 3) return trivial_circle(R);
  Circle c = welzl(P, n - 1, R);
  const QPoint &p = P[n - 1];
  if (circle_contains(c, p)) return c;
  R.push_back(p);
  return welzl(P, n - 1, std::move(R));
}

Circle sec(std::vector<QPoint> points) {
  if (points.empty()) throw std::invalid_argument("sec of an empty set");
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return welzl(points, points.size(), {});
}

static std::string quad_term(const Rat &a, const Rat &b, const Int &D) {
  if (b == 0 || D == 0) return rat_to_string(a);
  std::string s = rat_to_string(a);
  s += (b > 0) ? " + " : " - ";
  Rat ab = b > 0 ? b : Rat(-b);
  if (ab != 1) s += rat_to_string(ab) + "*";
  s += "sqrt(" + D.str() + ")";
  return s;
}

std::string DiskWitness::describe() const {
  return "(" + quad_term(ax, bx, D) + ", " + quad_term(ay, by, D) + ")";
}

// sign-analysis decision of u + v*sqrt(D) <= 0 with D >= 0
static bool quad_le_zero(const Rat &u, const Rat &v, const Int &D) {
  if (v == 0 || D == 0) return u <= 0;
  if (u <= 0 && v <= 0) return true;
  if (u >= 0 && v >= 0) return false;
  if (v > 0) return v * v * Rat(D) <= u * u;  // u < 0
  return v * v * Rat(D) >= u * u;             // u > 0, v < 0
}

// integer points z with |z - C|^2 <= rsq where C = (ax + bx sqrt(D), ay + by sqrt(D))
// lies on the circle through the origin, so the predicate reduces to
// |z|^2 - 2 z . C <= 0
static long long count_quad_disk(const Rat &ax, const Rat &bx, const Rat &ay,
                                 const Rat &by, const Int &D, const Rat &rsq) {
  Rat sd = sqrt_upper_bound(Rat(D), 32);
  Rat r_up = sqrt_upper_bound(rsq, 32);
  Rat cx_lo = ax - (bx < 0 ? -bx : bx) * sd, cx_hi = ax + (bx < 0 ? -bx : bx) * sd;
  Rat cy_lo = ay - (by < 0 ? -by : by) * sd, cy_hi = ay + (by < 0 ? -by : by) * sd;
  Int x0 = rat_ceil(cx_lo - r_up), x1 = rat_floor(cx_hi + r_up);
  Int y0 = rat_ceil(cy_lo - r_up), y1 = rat_floor(cy_hi + r_up);
  long long count = 0;
  for (Int x = x0; x <= x1; ++x)
    for (Int y = y0; y <= y1; ++y) {
      Rat zx(x), zy(y);
      Rat u = zx * zx + zy * zy - 2 * (zx * ax + zy * ay);
      Rat v = -2 * (zx * bx + zy * by);
      if (quad_le_zero(u, v, D)) ++count;
    }
  return count;
}

MaxPointsResult max_points_in_disk(const Rat &radius_sq) {
  if (radius_sq < 0) throw std::invalid_argument("negative squared radius");
  MaxPointsResult best;
  best.count = -1;
  auto offer_rational = [&](const QPoint &c) {
    long long n = (long long)points_in_disk(c, radius_sq).size();
    if (n > best.count) {
      best.count = n;
      best.witness = {c.x, Rat(0), c.y, Rat(0), Int(0)};
    }
  };
  Rat half = make_rat(Int(1), Int(2));
  offer_rational({Rat(0), Rat(0)});
  offer_rational({half, Rat(0)});
  offer_rational({Rat(0), half});
  offer_rational({half, half});

  // centers with two lattice points on the boundary; by the square
  // symmetries one may sit at the origin and the other at Q with
  // 1 <= qx, 0 <= qy <= qx
  Rat four_r = 4 * radius_sq;
  long long qmax = to_ll(rat_floor(sqrt_upper_bound(four_r, 8)) + 1);
  for (long long qx = 1; qx <= qmax; ++qx)
    for (long long qy = 0; qy <= qx; ++qy) {
      Rat w2 = Rat(qx * qx + qy * qy);
      if (w2 > four_r) continue;
      Rat s2 = (four_r - w2) / (4 * w2);  // squared offset along the bisector
      QPoint mid{Rat(qx) / 2, Rat(qy) / 2};
      if (auto t = rat_sqrt_exact(s2)) {
        for (int eps : {1, -1}) {
          Rat tt = eps * *t;
          offer_rational({mid.x - tt * qy, mid.y + tt * qx});
          if (*t == 0) break;
        }
        continue;
      }
      // t = eps * (1/den) * sqrt(num*den) for s2 = num/den
      Int num = rat_num(s2), den = rat_den(s2);
      Int D = num * den;
      for (int eps : {1, -1}) {
        Rat f = make_rat(Int(eps), den);
        Rat bx = -f * qy, by = f * qx;
        long long n = count_quad_disk(mid.x, bx, mid.y, by, D, radius_sq);
        if (n > best.count) {
          best.count = n;
          best.witness = {mid.x, bx, mid.y, by, D};
        }
      }
    }
  return best;
}

}  // namespace latcover
