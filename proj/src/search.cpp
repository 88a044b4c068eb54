#include "latcover/search.hpp"

#include "latcover/geometry.hpp"
#include "latcover/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace latcover {

Feasibility density_precheck(const SearchTarget &target, long long *k_max_out) {
  long long k = max_points_in_disk(target.beta_sq_max).count;
  if (k_max_out) *k_max_out = k;
  // hexagonal bound: centers >= alpha apart have density <= 2/(sqrt(3) alpha^2),
  // so covering (one lattice point per unit cell) needs sqrt(3) alpha^2 <= 2 k
  Rat a = target.alpha_sq_min;
  return 3 * a * a > Rat(4 * k * k) ? Feasibility::infeasible : Feasibility::feasible;
}

namespace {

struct PerLattice {
  bool explored = false;
  bool root_pruned = false;
  bool budget_aborted = false;
  bool counted = true;  // false when skipped after someone already won
  std::uint64_t nodes = 0;
};

struct Found {
  CoveringCertificate cert;
  Rat alpha_sq, beta_sq;
};

// largest m with 3 m^2 a2^2 <= 4 det^2 (the packing bound on cluster count)
Int packing_cap(const Rat &a2, const Int &det) {
  Rat q = Rat(4 * det * det) / (3 * a2 * a2);
  return isqrt_floor(rat_floor(q));
}

struct ClusterState {
  std::vector<IntPoint> points;
  Circle sec_circle;
  // disk of radius 2*sqrt(beta_sq_max) around the anchor, split by residue;
  // owned by the per-lattice cache, clusters only borrow
  const std::map<IntPoint, std::vector<IntPoint>> *reachable = nullptr;
};

Int floor_div(const Int &p, const Int &q) {  // q > 0
  Int d = p / q;
  if (p % q != 0 && p < 0) --d;
  return d;
}

// nearest integer to p/q, ties toward +inf (floor(p/q + 1/2))
Int round_half_up(Int p, Int q) {
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return floor_div(2 * p + q, 2 * q);
}

struct Dfs {
  const SearchTarget *target;
  Rat four_beta;
  Int fb_num, fb_den;        // four_beta in lowest terms
  Int sep_c1, sep_c2, sep_afd;  // separation prune constants, see below
  Int det_r;
  long long k_max;
  long long m_cap;
  IntLattice L;
  IntLattice R;  // reduced
  std::vector<IntPoint> residues;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool aborted = false;
  bool stopped = false;
  const std::atomic<long long> *best_found = nullptr;
  long long my_index = 0;
  std::vector<ClusterState> clusters;
  std::optional<Found> solution;
  // both caches are keyed on translation-invariant data, so hits are common
  std::map<std::vector<IntPoint>, Circle> sec_memo;
  std::map<IntPoint, std::map<IntPoint, std::vector<IntPoint>>> reach_memo;

  void init_constants() {
    det_r = cross(R.u, R.v);
    fb_num = rat_num(four_beta);
    fb_den = rat_den(four_beta);
    Int an = rat_num(target->alpha_sq_min), ad = rat_den(target->alpha_sq_min);
    // rhs = alpha_sq_min - m - four_beta = (c1 - m*afd) / afd, and the prune
    // condition 4*four_beta*m < rhs^2 clears denominators to c2*m < P^2
    sep_afd = ad * fb_den;
    sep_c1 = an * fb_den - fb_num * ad;
    sep_c2 = 4 * fb_num * ad * ad * fb_den;
  }

  const std::map<IntPoint, std::vector<IntPoint>> &reachable_for(IntPoint anchor) {
    auto it = reach_memo.find(anchor);
    if (it == reach_memo.end()) {
      std::map<IntPoint, std::vector<IntPoint>> m;
      for (const auto &p : points_in_disk(to_qpoint(anchor), four_beta))
        m[canonical_residue(R, p)].push_back(p);
      it = reach_memo.emplace(anchor, std::move(m)).first;
    }
    return it->second;
  }

  bool check_stop() {
    if (best_found && (nodes & 1023) == 0 &&
        best_found->load(std::memory_order_relaxed) < my_index)
      stopped = true;
    return stopped;
  }

  // soundness-only separation prune: if even the farthest possible pair of
  // eventual centers stays below alpha, the branch is dead. Uses a rounding
  // neighborhood as an upper bound on the least coset norm.
  bool separation_violated(IntPoint z, const ClusterState &other) const {
    for (const auto &q : other.points) {
      IntPoint d = z - q;
      // coordinates of d are (cross(d,v)/det, cross(u,d)/det)
      Int i0 = -round_half_up(cross(d, R.v), det_r);
      Int j0 = -round_half_up(cross(R.u, d), det_r);
      for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          Int i = i0 + di, j = j0 + dj;
          Int lx = d.x + i * R.u.x + j * R.v.x;
          Int ly = d.y + i * R.u.y + j * R.v.y;
          Int m = lx * lx + ly * ly;
          // sqrt(m) + 2 sqrt(beta) < sqrt(a2min), squared out exactly
          Int p = sep_c1 - m * sep_afd;
          if (p > 0 && sep_c2 * m < p * p) return true;
        }
    }
    return false;
  }

  bool cluster_accepts(const ClusterState &cl, IntPoint z, Circle *new_sec) {
    if ((long long)cl.points.size() >= k_max) return false;
    for (const auto &p : cl.points)
      if (norm_sq(z - p) * fb_den > fb_num) return false;
    if (circle_contains(cl.sec_circle, to_qpoint(z))) {
      *new_sec = cl.sec_circle;
      return true;
    }
    // memoize the smallest enclosing circle by bbox-normalized shape
    std::vector<IntPoint> key = cl.points;
    key.push_back(z);
    long long mx = key[0].x, my = key[0].y;
    for (const auto &p : key) {
      mx = std::min(mx, p.x);
      my = std::min(my, p.y);
    }
    for (auto &p : key) {
      p.x -= mx;
      p.y -= my;
    }
    std::sort(key.begin(), key.end());
    auto it = sec_memo.find(key);
    if (it == sec_memo.end()) {
      std::vector<QPoint> pts;
      pts.reserve(key.size());
      for (const auto &p : key) pts.push_back(to_qpoint(p));
      it = sec_memo.emplace(std::move(key), sec(std::move(pts))).first;
    }
    const Circle &c = it->second;
    if (c.radius_sq > target->beta_sq_max) return false;
    *new_sec = {{c.center.x + mx, c.center.y + my}, c.radius_sq};
    return true;
  }

  bool place_and_recurse(size_t next, size_t cluster_idx, IntPoint z, Circle sec_after) {
    if (nodes >= budget) {
      aborted = true;
      return false;
    }
    ++nodes;
    // index, not reference: recursion may grow the clusters vector
    Circle saved = clusters[cluster_idx].sec_circle;
    clusters[cluster_idx].points.push_back(z);
    clusters[cluster_idx].sec_circle = sec_after;
    bool done = run(next + 1);
    clusters[cluster_idx].points.pop_back();
    clusters[cluster_idx].sec_circle = saved;
    return done;
  }

  bool open_and_recurse(size_t next, IntPoint z) {
    if (nodes >= budget) {
      aborted = true;
      return false;
    }
    ++nodes;
    ClusterState cl;
    cl.points.push_back(z);
    cl.sec_circle = {to_qpoint(z), Rat(0)};
    cl.reachable = &reachable_for(z);
    clusters.push_back(std::move(cl));
    bool done = run(next + 1);
    clusters.pop_back();
    return done;
  }

  bool leaf() {
    CoveringCertificate cert;
    cert.name = "searched";
    cert.lattice = L;
    for (const auto &cl : clusters) {
      std::vector<QPoint> pts;
      for (const auto &p : cl.points) pts.push_back(to_qpoint(p));
      Circle c = sec(pts);
      cert.clusters.push_back({cl.points, c.center});
    }
    auto rep = verify(cert);
    if (!rep.verified()) return false;
    if (rep.alpha_sq < target->alpha_sq_min) return false;
    if (rep.beta_sq > target->beta_sq_max) return false;
    solution = Found{std::move(cert), rep.alpha_sq, rep.beta_sq};
    return true;
  }

  bool run(size_t next) {
    if (aborted || check_stop()) return false;
    if (next == residues.size()) return leaf();

    // capacity: the rest must still fit into current plus future clusters
    long long remaining = (long long)(residues.size() - next);
    long long room = (m_cap - (long long)clusters.size()) * k_max;
    for (const auto &cl : clusters) room += k_max - (long long)cl.points.size();
    if (remaining > room) return false;

    IntPoint r = residues[next];
    for (size_t j = 0; j < clusters.size(); ++j) {
      auto it = clusters[j].reachable->find(r);
      if (it == clusters[j].reachable->end()) continue;
      for (const auto &z : it->second) {
        Circle sec_after;
        if (!cluster_accepts(clusters[j], z, &sec_after)) continue;
        bool bad = false;
        for (size_t k = 0; k < clusters.size() && !bad; ++k)
          if (k != j && separation_violated(z, clusters[k])) bad = true;
        if (bad) continue;
        if (place_and_recurse(next, j, z, sec_after)) return true;
        if (aborted || stopped) return false;
      }
    }
    if ((long long)clusters.size() < m_cap) {
      // a fresh cluster may anchor at the canonical representative: the whole
      // cluster can be translated by a lattice vector without changing the family
      bool bad = false;
      for (const auto &cl : clusters)
        if (separation_violated(r, cl)) {
          bad = true;
          break;
        }
      if (!bad && open_and_recurse(next, r)) return true;
    }
    return false;
  }
};

std::vector<IntLattice> enumerate_hnf(int max_index) {
  std::vector<IntLattice> out;
  for (long long det = 1; det <= max_index; ++det)
    for (long long a = 1; a <= det; ++a) {
      if (det % a != 0) continue;
      long long c = det / a;
      for (long long b = 0; b < a; ++b)
        out.push_back({{a, 0}, {b, c}});
    }
  return out;
}

}  // namespace

std::string SearchOutcome::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::found:
      os << "found: lattice index " << winner_index << " (det "
         << lat_det(certificate->lattice) << "), alpha_sq " << rat_to_string(alpha_sq)
         << ", beta_sq " << rat_to_string(beta_sq);
      break;
    case Kind::exhausted:
      os << "exhausted: no certificate within max_index " << target.max_index
         << ", max_orbits " << target.max_orbits << " (cluster size cap " << k_max
         << ")";
      break;
    case Kind::budget_exceeded:
      os << "budget exceeded: " << stats.lattices_budget_aborted
         << " lattice(s) hit the per-lattice node budget " << node_budget
         << " before the space was closed";
      break;
    case Kind::infeasible:
      os << "infeasible: separation sqrt(" << rat_to_string(target.alpha_sq_min)
         << ") needs more than the " << k_max
         << " points a cluster disk can hold";
      break;
  }
  return os.str();
}

SearchOutcome search_certificate(const SearchParams &params) {
  SearchOutcome out;
  out.target = params.target;
  out.node_budget = params.node_budget;

  long long k_max = 0;
  Feasibility feas = density_precheck(params.target, &k_max);
  out.k_max = k_max;
  if (feas == Feasibility::infeasible) {
    out.kind = SearchOutcome::Kind::infeasible;
    return out;
  }

  std::vector<IntLattice> cand = params.lattice_candidates.empty()
                                     ? enumerate_hnf(params.target.max_index)
                                     : params.lattice_candidates;
  size_t n = cand.size();
  std::vector<PerLattice> per(n);
  std::atomic<long long> best_found{(long long)n};
  std::atomic<size_t> cursor{0};
  std::mutex found_mu;
  std::map<long long, Found> found;

  auto worker = [&]() {
    for (;;) {
      size_t i = cursor.fetch_add(1);
      if (i >= n) return;
      if (best_found.load() < (long long)i) {
        per[i].counted = false;
        continue;
      }
      const IntLattice &L = cand[i];
      Int det = lat_det(L);
      if (det < 0) det = -det;
      Int lam1 = shortest_vector_sq(L);
      Int cap = packing_cap(params.target.alpha_sq_min, det);
      long long m_cap = cap < params.target.max_orbits ? to_ll(cap)
                                                       : params.target.max_orbits;
      if (Rat(lam1) < params.target.alpha_sq_min || det > Int(m_cap) * k_max) {
        per[i].root_pruned = true;
        continue;
      }
      per[i].explored = true;
      Dfs dfs;
      dfs.target = &params.target;
      dfs.four_beta = 4 * params.target.beta_sq_max;
      dfs.k_max = k_max;
      dfs.m_cap = m_cap;
      dfs.L = L;
      dfs.R = gauss_reduce(L);
      dfs.residues = all_residues(L);
      dfs.budget = params.node_budget;
      dfs.best_found = &best_found;
      dfs.my_index = (long long)i;
      dfs.clusters.reserve(m_cap);
      dfs.init_constants();
      dfs.run(0);
      per[i].nodes = dfs.nodes;
      per[i].budget_aborted = dfs.aborted;
      if (dfs.solution) {
        long long mine = (long long)i;
        long long cur = best_found.load();
        while (mine < cur && !best_found.compare_exchange_weak(cur, mine)) {
        }
        std::lock_guard<std::mutex> lk(found_mu);
        found[mine] = std::move(*dfs.solution);
      }
    }
  };

  int threads = std::max(1, std::min(params.threads, 64));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto &t : pool) t.join();
  }

  long long winner = best_found.load();
  bool have = winner < (long long)n;
  long long limit = have ? winner : (long long)n - 1;
  for (long long i = 0; i <= limit && i < (long long)n; ++i) {
    if (!per[i].counted) continue;
    ++out.stats.lattices_enumerated;
    if (per[i].explored) ++out.stats.lattices_explored;
    if (per[i].root_pruned) ++out.stats.lattices_root_pruned;
    if (per[i].budget_aborted) ++out.stats.lattices_budget_aborted;
    out.stats.nodes += per[i].nodes;
  }

  if (have) {
    out.kind = SearchOutcome::Kind::found;
    Found &f = found.at(winner);
    out.certificate = std::move(f.cert);
    out.alpha_sq = f.alpha_sq;
    out.beta_sq = f.beta_sq;
    out.winner_index = winner;
  } else if (out.stats.lattices_budget_aborted > 0) {
    out.kind = SearchOutcome::Kind::budget_exceeded;
  } else {
    out.kind = SearchOutcome::Kind::exhausted;
  }
  return out;
}

}  // namespace latcover
