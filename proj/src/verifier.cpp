#include "latcover/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace latcover {

CoverageResult check_coverage(const CoveringCertificate &cert) {
  CoverageResult out;
  IntLattice R = gauss_reduce(cert.lattice);
  Int det = lat_det(cert.lattice);
  Int absdet = det < 0 ? -det : det;
  std::map<IntPoint, long long> hit;
  long long total = 0;
  for (const auto &cl : cert.clusters)
    for (const auto &p : cl.points) {
      ++hit[canonical_residue(R, p)];
      ++total;
    }
  if (Int((long long)hit.size()) != absdet) {
    for (const auto &r : all_residues(cert.lattice))
      if (!hit.count(r)) {
        out.witness = r;
        break;
      }
    out.covered = false;
  } else {
    out.covered = true;
  }
  out.overlap = total - (long long)hit.size();
  out.multiplicity = out.overlap == 0 ? Multiplicity::partition : Multiplicity::cover;
  return out;
}

Rat compute_beta_sq(const CoveringCertificate &cert) {
  Rat best = 0;
  for (const auto &cl : cert.clusters)
    for (const auto &p : cl.points) {
      Rat d = dist_sq(to_qpoint(p), cl.center);
      if (d > best) best = d;
    }
  return best;
}

Rat compute_alpha_sq(const CoveringCertificate &cert) {
  Rat best = Rat(shortest_vector_sq(cert.lattice));
  for (size_t j = 0; j < cert.clusters.size(); ++j)
    for (size_t k = j + 1; k < cert.clusters.size(); ++k) {
      Rat m = min_norm_in_coset(cert.clusters[j].center - cert.clusters[k].center,
                                cert.lattice);
      if (m < best) best = m;
    }
  return best;
}

VerificationReport verify(const CoveringCertificate &cert) {
  VerificationReport rep;
  rep.coverage = check_coverage(cert);
  rep.alpha_sq = compute_alpha_sq(cert);
  rep.beta_sq = compute_beta_sq(cert);
  rep.admissible = rep.alpha_sq > 0 && 4 * rep.beta_sq <= rep.alpha_sq;
  if (rep.coverage.covered && rep.admissible) {
    SqrtVal lo = SqrtVal::sqrt_of(4 / rep.alpha_sq);
    SqrtVal hi = rep.beta_sq == 0 ? SqrtVal::infinity()
                                  : SqrtVal::sqrt_of(1 / rep.beta_sq);
    rep.interval = make_interval(lo, hi);
  }
  return rep;
}

std::vector<Instance> window_instances(const CoveringCertificate &cert,
                                       long long window) {
  std::vector<Instance> out;
  const IntPoint u = cert.lattice.u, v = cert.lattice.v;
  Rat w(window);
  for (size_t j = 0; j < cert.clusters.size(); ++j) {
    const QPoint &c = cert.clusters[j].center;
    // |lambda| <= |c| + w*sqrt(2), so bound the coefficients through the norms
    Rat reach = 2 * (norm_sq(c) + 2 * w * w);
    Rat det2 = Rat(lat_det(cert.lattice)) * Rat(lat_det(cert.lattice));
    long long I = to_ll(isqrt_floor(rat_ceil(reach * Rat(norm_sq(v)) / det2))) + 1;
    long long K = to_ll(isqrt_floor(rat_ceil(reach * Rat(norm_sq(u)) / det2))) + 1;
    for (long long i = -I; i <= I; ++i)
      for (long long k = -K; k <= K; ++k) {
        IntPoint lam = i * u + k * v;
        QPoint center = c + to_qpoint(lam);
        if (center.x < -w || center.x > w || center.y < -w || center.y > w) continue;
        out.push_back({center, (int)j, lam});
      }
  }
  std::sort(out.begin(), out.end(), [](const Instance &a, const Instance &b) {
    if (a.center != b.center) return lex_less(a.center, b.center);
    return a.cluster < b.cluster;
  });
  return out;
}

std::string WindowCheckResult::describe() const {
  switch (kind) {
    case Kind::none:
      return "pass";
    case Kind::coverage:
      return "uncovered lattice point " + to_string(point);
    default:
      return "centers " + to_string(center_a) + " and " + to_string(center_b) +
             " closer than the disk diameter";
  }
}

WindowCheckResult window_check(const CoveringCertificate &cert, const Rat &d,
                               long long window) {
  if (d <= 0) throw std::invalid_argument("dilation must be positive");
  Rat beta = compute_beta_sq(cert);
  Int diam_sq = rat_ceil(
      Rat(std::max(norm_sq(cert.lattice.u), std::max(norm_sq(cert.lattice.v), rat_ceil(4 * beta)))));
  Int period = isqrt_floor(diam_sq);
  if (period * period < diam_sq) ++period;
  if (Int(window) < 2 * period)
    throw std::invalid_argument("window smaller than twice the period diameter");

  WindowCheckResult res;

  // coverage first: every lattice point of the window lies in the unit
  // disk of its own instance after dilation by d
  IntLattice R = gauss_reduce(cert.lattice);
  std::map<IntPoint, std::vector<std::pair<int, int>>> by_residue;
  for (size_t j = 0; j < cert.clusters.size(); ++j)
    for (size_t i = 0; i < cert.clusters[j].points.size(); ++i)
      by_residue[canonical_residue(R, cert.clusters[j].points[i])].push_back(
          {(int)j, (int)i});
  Rat d2 = d * d;
  for (long long x = -window; x <= window; ++x)
    for (long long y = -window; y <= window; ++y) {
      IntPoint z{x, y};
      auto it = by_residue.find(canonical_residue(R, z));
      bool ok = false;
      if (it != by_residue.end())
        for (auto [j, i] : it->second) {
          const auto &cl = cert.clusters[j];
          QPoint inst = cl.center + (to_qpoint(z) - to_qpoint(cl.points[i]));
          if (d2 * dist_sq(to_qpoint(z), inst) <= 1) {
            ok = true;
            break;
          }
        }
      if (!ok) {
        res.pass = false;
        res.kind = WindowCheckResult::Kind::coverage;
        res.point = z;
        return res;
      }
    }

  // disjointness: all window instance centers at least 2/d apart, after
  // clearing denominators so the sweep runs on integers
  auto inst = window_instances(cert, window);
  Int dcm = 1;
  for (const auto &cl : cert.clusters) {
    Int a = rat_den(cl.center.x), b = rat_den(cl.center.y);
    dcm = lcm(dcm, lcm(a, b));
  }
  struct ScaledInst {
    Int x, y;
    size_t idx;
  };
  std::vector<ScaledInst> sc;
  sc.reserve(inst.size());
  for (size_t i = 0; i < inst.size(); ++i)
    sc.push_back({rat_num(inst[i].center.x * Rat(dcm)),
                  rat_num(inst[i].center.y * Rat(dcm)), i});
  Int p = rat_num(d), q = rat_den(d);
  Int rhs = 4 * q * q * dcm * dcm;  // |dC|^2 p^2 >= 4 q^2 dcm^2
  Int p2 = p * p;
  for (size_t a = 0; a < sc.size(); ++a) {
    for (size_t b = a + 1; b < sc.size(); ++b) {
      Int dx = sc[b].x - sc[a].x;
      if (dx * dx * p2 >= rhs) break;  // x-sorted: later b only grows dx
      Int dy = sc[b].y - sc[a].y;
      if ((dx * dx + dy * dy) * p2 < rhs) {
        res.pass = false;
        res.kind = WindowCheckResult::Kind::disjointness;
        res.center_a = inst[sc[a].idx].center;
        res.center_b = inst[sc[b].idx].center;
        return res;
      }
    }
  }
  return res;
}

QPoint Isometry::apply(const QPoint &p) const {
  return {r[0] * p.x + r[1] * p.y + tx, r[2] * p.x + r[3] * p.y + ty};
}

namespace {

// orthogonal maps sending offset a to offset b, |a| = |b| != 0:
// one rotation and one reflection
std::vector<std::array<Rat, 4>> maps_a_to_b(const QPoint &a, const QPoint &b) {
  Rat n = norm_sq(a);
  std::vector<std::array<Rat, 4>> out;
  {
    Rat c = (a.x * b.x + a.y * b.y) / n;
    Rat s = (a.x * b.y - a.y * b.x) / n;
    out.push_back({c, -s, s, c});
  }
  {
    QPoint am{a.x, -a.y};  // mirror first, then rotate
    Rat c = (am.x * b.x + am.y * b.y) / n;
    Rat s = (am.x * b.y - am.y * b.x) / n;
    out.push_back({c, s, s, -c});
  }
  return out;
}

std::vector<QPoint> sorted_offsets(const Cluster &cl) {
  std::vector<QPoint> out;
  for (const auto &p : cl.points) out.push_back(to_qpoint(p) - cl.center);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

bool maps_offsets(const std::array<Rat, 4> &r, const std::vector<QPoint> &A,
                  const std::vector<QPoint> &B) {
  std::vector<QPoint> img;
  img.reserve(A.size());
  for (const auto &a : A)
    img.push_back({r[0] * a.x + r[1] * a.y, r[2] * a.x + r[3] * a.y});
  std::sort(img.begin(), img.end(), lex_less);
  return img == B;
}

const std::array<std::array<Rat, 4>, 8> &square_symmetries() {
  static const std::array<std::array<Rat, 4>, 8> g = {{
      {Rat(1), Rat(0), Rat(0), Rat(1)},
      {Rat(0), Rat(-1), Rat(1), Rat(0)},
      {Rat(-1), Rat(0), Rat(0), Rat(-1)},
      {Rat(0), Rat(1), Rat(-1), Rat(0)},
      {Rat(1), Rat(0), Rat(0), Rat(-1)},
      {Rat(-1), Rat(0), Rat(0), Rat(1)},
      {Rat(0), Rat(1), Rat(1), Rat(0)},
      {Rat(0), Rat(-1), Rat(-1), Rat(0)},
  }};
  return g;
}

// candidate orthogonal maps sending cluster j's offset shape to cluster k's
std::vector<std::array<Rat, 4>> shape_candidates(const std::vector<QPoint> &A,
                                                 const std::vector<QPoint> &B) {
  std::vector<std::array<Rat, 4>> out;
  const QPoint *a = nullptr;
  for (const auto &p : A)
    if (!(p == QPoint{Rat(0), Rat(0)})) {
      a = &p;
      break;
    }
  if (!a) {
    // every point sits on the center; any symmetry works, use the full group
    for (const auto &g : square_symmetries()) out.push_back(g);
    return out;
  }
  for (const auto &b : B) {
    if (norm_sq(b) != norm_sq(*a)) continue;
    for (auto &r : maps_a_to_b(*a, b)) out.push_back(r);
  }
  return out;
}

}  // namespace

CongruenceResult strict_congruence(const CoveringCertificate &cert) {
  CongruenceResult res;
  res.maps.push_back({{Rat(1), Rat(0), Rat(0), Rat(1)}, Rat(0), Rat(0)});
  auto A = sorted_offsets(cert.clusters[0]);
  for (size_t k = 1; k < cert.clusters.size(); ++k) {
    if (cert.clusters[k].points.size() != cert.clusters[0].points.size()) {
      res.fail_pair = {0, (int)k};
      return res;
    }
    auto B = sorted_offsets(cert.clusters[k]);
    bool found = false;
    for (const auto &r : shape_candidates(A, B)) {
      if (!maps_offsets(r, A, B)) continue;
      Isometry g;
      g.r = r;
      const QPoint &c0 = cert.clusters[0].center, &ck = cert.clusters[k].center;
      g.tx = ck.x - (r[0] * c0.x + r[1] * c0.y);
      g.ty = ck.y - (r[2] * c0.x + r[3] * c0.y);
      res.maps.push_back(g);
      found = true;
      break;
    }
    if (!found) {
      res.fail_pair = {0, (int)k};
      return res;
    }
  }
  res.pass = true;
  return res;
}

namespace {

// does z -> R z + t map the periodic family onto itself?
bool maps_family(const CoveringCertificate &cert, const std::array<Rat, 4> &r,
                 const Rat &tx, const Rat &ty) {
  Isometry g{r, tx, ty};
  for (const auto &cl : cert.clusters) {
    QPoint gc = g.apply(cl.center);
    bool matched = false;
    for (const auto &other : cert.clusters) {
      QPoint diff = gc - other.center;
      if (rat_den(diff.x) != 1 || rat_den(diff.y) != 1) continue;
      IntPoint lam{to_ll(rat_num(diff.x)), to_ll(rat_num(diff.y))};
      if (!lattice_member(cert.lattice, lam)) continue;
      // points must translate along
      std::vector<QPoint> img;
      for (const auto &p : cl.points) img.push_back(g.apply(to_qpoint(p)));
      std::sort(img.begin(), img.end(), lex_less);
      std::vector<QPoint> want;
      for (const auto &p : other.points) want.push_back(to_qpoint(p + lam));
      std::sort(want.begin(), want.end(), lex_less);
      if (img == want) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

bool lattice_image_ok(const IntLattice &L, const std::array<Rat, 4> &r) {
  auto img = [&](IntPoint p) -> std::optional<IntPoint> {
    Rat x = r[0] * p.x + r[1] * p.y, y = r[2] * p.x + r[3] * p.y;
    if (rat_den(x) != 1 || rat_den(y) != 1) return std::nullopt;
    return IntPoint{to_ll(rat_num(x)), to_ll(rat_num(y))};
  };
  auto iu = img(L.u), iv = img(L.v);
  return iu && iv && lattice_member(L, *iu) && lattice_member(L, *iv);
}

}  // namespace

TransitivityResult strict_transitivity(const CoveringCertificate &cert) {
  TransitivityResult res;
  auto cong = strict_congruence(cert);
  if (!cong.pass) {
    res.fail_pair = cong.fail_pair;
    return res;
  }

  // orbit partition: clusters identified when a lattice translation carries
  // one exactly onto the other
  size_t n = cert.clusters.size();
  std::vector<int> orbit(n, -1);
  std::vector<size_t> reps;
  for (size_t j = 0; j < n; ++j) {
    for (size_t r = 0; r < reps.size(); ++r) {
      const auto &a = cert.clusters[reps[r]], &b = cert.clusters[j];
      QPoint diff = b.center - a.center;
      if (rat_den(diff.x) != 1 || rat_den(diff.y) != 1) continue;
      IntPoint lam{to_ll(rat_num(diff.x)), to_ll(rat_num(diff.y))};
      if (!lattice_member(cert.lattice, lam)) continue;
      std::vector<IntPoint> moved;
      for (const auto &p : a.points) moved.push_back(p + lam);
      std::sort(moved.begin(), moved.end());
      std::vector<IntPoint> tgt = b.points;
      std::sort(tgt.begin(), tgt.end());
      if (moved == tgt) {
        orbit[j] = (int)r;
        break;
      }
    }
    if (orbit[j] < 0) {
      orbit[j] = (int)reps.size();
      reps.push_back(j);
    }
  }
  if (reps.size() <= 1) {
    res.pass = true;
    return res;
  }

  for (size_t a = 0; a < reps.size(); ++a)
    for (size_t b = 0; b < reps.size(); ++b) {
      if (a == b) continue;
      const auto &cj = cert.clusters[reps[a]];
      const auto &ck = cert.clusters[reps[b]];
      auto A = sorted_offsets(cj), B = sorted_offsets(ck);
      bool linked = false;
      for (const auto &r : shape_candidates(A, B)) {
        if (!maps_offsets(r, A, B)) continue;
        if (!lattice_image_ok(cert.lattice, r)) continue;
        Rat tx = ck.center.x - (r[0] * cj.center.x + r[1] * cj.center.y);
        Rat ty = ck.center.y - (r[2] * cj.center.x + r[3] * cj.center.y);
        if (maps_family(cert, r, tx, ty)) {
          linked = true;
          break;
        }
      }
      if (!linked) {
        res.fail_pair = {(int)reps[a], (int)reps[b]};
        return res;
      }
    }
  res.pass = true;
  return res;
}

}  // namespace latcover
