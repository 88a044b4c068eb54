#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latcover/lattice.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace latcover;

static IntLattice rand_lattice(std::mt19937_64 &rng) {
  std::uniform_int_distribution<long long> c(-6, 6);
  for (;;) {
    IntLattice L{{c(rng), c(rng)}, {c(rng), c(rng)}};
    if (lat_det(L) != 0) return L;
  }
}

TEST_CASE("determinant and rank") {
  CHECK(lat_det(IntLattice{{1, 0}, {0, 1}}) == 1);
  CHECK(lat_det(IntLattice{{3, 2}, {0, 4}}) == 12);
  CHECK(lat_det(IntLattice{{2, 1}, {-1, 2}}) == 5);
  CHECK_FALSE(is_full_rank(IntLattice{{2, 0}, {4, 0}}));
  CHECK_THROWS(gauss_reduce(IntLattice{{2, 0}, {4, 0}}));
}

TEST_CASE("reduction fixed points and named bases") {
  IntLattice id{{1, 0}, {0, 1}};
  IntLattice r = gauss_reduce(id);
  CHECK(r.u == IntPoint{1, 0});
  CHECK(r.v == IntPoint{0, 1});

  IntLattice b6 = gauss_reduce(IntLattice{{3, 2}, {0, 4}});
  CHECK(norm_sq(b6.u) == 13);
  CHECK(norm_sq(b6.v) == 13);
  CHECK(same_lattice(b6, IntLattice{{3, 2}, {0, 4}}));

  IntLattice s = gauss_reduce(IntLattice{{5, 0}, {4, 1}});
  CHECK(norm_sq(s.u) <= 5);
  CHECK(same_lattice(s, IntLattice{{5, 0}, {4, 1}}));
}

TEST_CASE("reduction postconditions and lattice preservation") {
  std::mt19937_64 rng(20240818);
  for (int t = 0; t < 300; ++t) {
    IntLattice L = rand_lattice(rng);
    IntLattice R = gauss_reduce(L);
    Int nu = norm_sq(R.u), nv = norm_sq(R.v);
    CHECK(nu <= nv);
    CHECK(2 * abs(dot(R.u, R.v)) <= nu);
    CHECK(same_lattice(L, R));
    // canonical output: reducing any sign/order variant gives the same basis
    IntLattice variants[] = {{L.v, L.u}, {-L.u, L.v}, {L.u, -L.v}, {-L.v, -L.u}};
    for (const auto &V : variants) {
      IntLattice RV = gauss_reduce(V);
      CHECK(RV.u == R.u);
      CHECK(RV.v == R.v);
    }
  }
}

TEST_CASE("shortest vector matches a box oracle") {
  CHECK(shortest_vector_sq(IntLattice{{1, 0}, {0, 1}}) == 1);
  CHECK(shortest_vector_sq(IntLattice{{2, 0}, {1, 1}}) == 2);
  CHECK(shortest_vector_sq(IntLattice{{3, 2}, {0, 4}}) == 13);
  std::mt19937_64 rng(555);
  for (int t = 0; t < 200; ++t) {
    IntLattice L = rand_lattice(rng);
    CHECK(shortest_vector_sq(L) == testoracle::shortest_vec_sq_box(L));
    CHECK(shortest_vector_sq(L) == shortest_vector_sq(gauss_reduce(L)));
  }
}

TEST_CASE("lattice membership and basis coordinates") {
  IntLattice L{{3, 2}, {0, 4}};
  CHECK(lattice_member(L, {3, 2}));
  CHECK(lattice_member(L, {0, 0}));
  CHECK(lattice_member(L, {6, 0}));
  CHECK_FALSE(lattice_member(L, {1, 0}));
  CHECK_FALSE(lattice_member(L, {3, 3}));
  Rat a, b;
  basis_coords(L, {6, 0}, a, b);
  CHECK(a == 2);
  CHECK(b == -1);
  basis_coords(L, {1, 1}, a, b);
  CHECK(a * 3 == 1);
}

TEST_CASE("residue systems") {
  IntLattice L{{3, 2}, {0, 4}};
  auto rs = all_residues(L);
  CHECK(rs.size() == 12);
  CHECK(std::is_sorted(rs.begin(), rs.end()));
  for (size_t i = 0; i < rs.size(); ++i)
    for (size_t j = i + 1; j < rs.size(); ++j)
      CHECK_FALSE(lattice_member(L, rs[i] - rs[j]));
  // every nearby point reduces to a listed residue, consistently
  for (long long x = -5; x <= 5; ++x)
    for (long long y = -5; y <= 5; ++y) {
      IntPoint c = canonical_residue(gauss_reduce(L), {x, y});
      CHECK(std::binary_search(rs.begin(), rs.end(), c));
      CHECK(lattice_member(L, IntPoint{x, y} - c));
    }

  std::mt19937_64 rng(808);
  for (int t = 0; t < 60; ++t) {
    IntLattice M = rand_lattice(rng);
    Int det = lat_det(M);
    if (det < 0) det = -det;
    CHECK(Int((long long)all_residues(M).size()) == det);
  }
}

TEST_CASE("coset decomposition examples") {
  IntLattice L2{{2, 0}, {0, 2}};
  auto m = coset_decompose({{0, 0}, {1, 1}}, L2);
  CHECK(m.size() == 2);
  for (const auto &[r, cnt] : m) CHECK(cnt == 1);

  IntLattice L6{{3, 2}, {0, 4}};
  std::vector<IntPoint> twelve = {{0, -1}, {0, 0}, {0, 1}, {0, 2},
                                  {1, -1}, {1, 0}, {1, 1}, {1, 2},
                                  {-1, 0}, {-1, 1}, {2, 0}, {2, 1}};
  auto m6 = coset_decompose(twelve, L6);
  CHECK(m6.size() == 12);

  auto m1 = coset_decompose({{0, 0}, {3, 2}}, L6);
  REQUIRE(m1.size() == 1);
  CHECK(m1.begin()->second == 2);
}

TEST_CASE("disk point enumeration, fixed cases") {
  auto p1 = points_in_disk(QPoint{Rat(0), Rat(0)}, Rat(1));
  std::vector<IntPoint> want1 = {{-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}};
  CHECK(p1 == want1);

  QPoint half{make_rat(Int(1), Int(2)), make_rat(Int(1), Int(2))};
  auto p2 = points_in_disk(half, make_rat(Int(1), Int(2)));
  std::vector<IntPoint> want2 = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  CHECK(p2 == want2);

  auto p3 = points_in_disk(half, make_rat(Int(5), Int(2)));
  CHECK(p3.size() == 12);

  CHECK(points_in_disk(QPoint{Rat(7), Rat(-3)}, Rat(0)).size() == 1);
  CHECK(points_in_disk(half, Rat(0)).empty());
}

TEST_CASE("disk point enumeration agrees with box oracle") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<long long> num(-40, 40), den(1, 8), rr(0, 900);
  for (int t = 0; t < 150; ++t) {
    QPoint c{make_rat(Int(num(rng)), Int(den(rng))),
             make_rat(Int(num(rng)), Int(den(rng)))};
    Rat rsq = make_rat(Int(rr(rng)), Int(den(rng)));
    auto got = points_in_disk(c, rsq);
    auto want = testoracle::points_in_disk_box(c, rsq);
    CHECK(got == want);
    CHECK(std::is_sorted(got.begin(), got.end()));
  }
}

TEST_CASE("disk point enumeration respects the square symmetries") {
  QPoint c{make_rat(Int(3), Int(4)), make_rat(Int(-2), Int(5))};
  Rat rsq = make_rat(Int(17), Int(3));
  auto base = points_in_disk(c, rsq);
  // (x, y) -> (y, x) and (x, y) -> (-x, y) generate all eight symmetries
  auto swap_xy = [](const QPoint &p) { return QPoint{p.y, p.x}; };
  auto neg_x = [](const QPoint &p) { return QPoint{-p.x, p.y}; };
  {
    auto got = points_in_disk(swap_xy(c), rsq);
    std::vector<IntPoint> want;
    for (auto &p : base) want.push_back({p.y, p.x});
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
  {
    auto got = points_in_disk(neg_x(c), rsq);
    std::vector<IntPoint> want;
    for (auto &p : base) want.push_back({-p.x, p.y});
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("minimum norm over a coset") {
  IntLattice L{{3, 2}, {0, 4}};
  QPoint zero{Rat(0), Rat(0)};
  CHECK(min_norm_in_coset(zero, L) == 0);
  // delta = (1,0): nearest lattice vector to -delta decides
  QPoint one{Rat(1), Rat(0)};
  Rat direct = min_norm_in_coset(one, L);
  CHECK(direct == 1);

  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<long long> num(-8, 8), den(1, 4);
  for (int t = 0; t < 120; ++t) {
    IntLattice M = rand_lattice(rng);
    QPoint d{make_rat(Int(num(rng)), Int(den(rng))),
             make_rat(Int(num(rng)), Int(den(rng)))};
    // oracle: box scan over a reduced basis; any minimizer has
    // |lambda| <= 2|d| <= 23, and reduced coefficients then stay
    // below 2/sqrt(3) * 23 < 27, so the box of 40 is ample
    IntLattice R = gauss_reduce(M);
    Rat best = -1;
    for (int i = -40; i <= 40; ++i)
      for (int j = -40; j <= 40; ++j) {
        QPoint lam{Rat((long long)i * R.u.x + (long long)j * R.v.x),
                   Rat((long long)i * R.u.y + (long long)j * R.v.y)};
        Rat n = norm_sq(d + lam);
        if (best < 0 || n < best) best = n;
      }
    CHECK(min_norm_in_coset(d, M) == best);
  }
}
