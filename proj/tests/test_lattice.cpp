#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "motivic/lattice.hpp"

using namespace motivic;

namespace {

// Brute-force ellipsoid points from a generous integer box. Only valid when
// boxr truly bounds the solution set; the forms below are checked by hand.
std::vector<Vec> box_scan(const Mat& n, const Vec& offset, const Rat& qmax, long long boxr) {
  std::vector<Vec> out;
  const size_t dim = offset.size();
  std::vector<long long> idx(dim, -boxr);
  while (true) {
    Vec x(dim);
    for (size_t i = 0; i < dim; ++i) x[i] = offset[i] + Rat(idx[i]);
    if (pair_with(n, x, x) <= qmax) out.push_back(x);
    size_t i = 0;
    for (; i < dim; ++i) {
      if (idx[i] < boxr) {
        ++idx[i];
        break;
      }
      idx[i] = -boxr;
    }
    if (i == dim) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

LatticeSpec p1xp1_lattice() { return lattice_of_surface(surface_preset("p1xp1")); }

}  // namespace

TEST_CASE("lattice presets and embeddings") {
  const LatticeSpec hyp = lattice_preset("hyperbolic");
  CHECK(hyp.rank() == 2);
  CHECK(hyp.dot({Rat(1), Rat(0)}, {Rat(0), Rat(1)}) == Rat(1));
  CHECK(hyp.K == Vec({Rat(0), Rat(0)}));

  const LatticeSpec half = lattice_preset("hyperbolic-half");
  CHECK(half.dot({Rat(1), Rat(0)}, {Rat(0), Rat(1)}) == Rat(1, 2));
  CHECK_NOTHROW(half.validate());

  CHECK_THROWS_AS(lattice_preset("euclidean"), std::invalid_argument);

  const LatticeSpec emb = p1xp1_lattice();
  CHECK(emb.gram == surface_preset("p1xp1").ns_gram);
  CHECK(emb.K == surface_preset("p1xp1").K);

  LatticeSpec bad = hyp;
  bad.gram = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};  // wrong signature
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  const LatticeSpec rt = lattice_from_json_text(lattice_to_json_text(half));
  CHECK(rt.gram == half.gram);
  CHECK(rt.K == half.K);
}

TEST_CASE("ellipsoid enumeration matches a box scan") {
  const Mat n = {{Rat(1), Rat(1, 2)}, {Rat(1, 2), Rat(1)}};
  for (const Vec& off : {Vec{Rat(0), Rat(0)}, Vec{Rat(1, 2), Rat(0)}, Vec{Rat(1, 3), Rat(-1, 2)}}) {
    for (long long q = 0; q <= 12; q += 3) {
      auto got = enumerate_ellipsoid(n, off, Rat(q));
      auto want = box_scan(n, off, Rat(q), 8);
      std::sort(got.begin(), got.end());
      CHECK(got == want);
    }
  }

  // norm strictly between reachable values: boundary exactness
  const Mat diag = {{Rat(1)}};
  CHECK(enumerate_ellipsoid(diag, {Rat(0)}, Rat(4)).size() == 5);
  CHECK(enumerate_ellipsoid(diag, {Rat(0)}, Rat(35, 9)).size() == 3);
  CHECK(enumerate_ellipsoid(diag, {Rat(1, 2)}, Rat(1, 4)).size() == 2);

  CHECK(enumerate_ellipsoid(n, {Rat(0), Rat(0)}, Rat(-1)).empty());
}

TEST_CASE("ellipsoid enumeration order is deterministic") {
  const Mat n = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  const auto pts = enumerate_ellipsoid(n, {Rat(0), Rat(0)}, Rat(1));
  REQUIRE(pts.size() == 5);
  // last coordinate outermost, ascending
  CHECK(pts[0] == Vec({Rat(0), Rat(-1)}));
  CHECK(pts[4] == Vec({Rat(0), Rat(1)}));
}

TEST_CASE("target pair analysis") {
  const LatticeSpec lat = p1xp1_lattice();

  // both squares positive
  const TargetPair tp = analyze_targets(lat, {Rat(1), Rat(0)}, {Rat(1), Rat(3)}, {Rat(3), Rat(1)});
  CHECK(tp.ff == Rat(6));
  CHECK(tp.gg == Rat(6));
  CHECK(tp.fg == Rat(10));
  CHECK(tp.cf == Rat(3));
  CHECK(tp.cg == Rat(1));
  CHECK(tp.delta == Rat(64));

  // mixed or negative squares are rejected
  CHECK_THROWS_AS(analyze_targets(lat, {Rat(1), Rat(0)}, {Rat(1), Rat(3)}, {Rat(-3), Rat(-1)}),
                  DomainError);
  // f.g <= 0 is rejected even with null targets
  CHECK_THROWS_AS(analyze_targets(lat, {Rat(1), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(0)}),
                  DomainError);

  // null targets pass only when the coset keeps both pairings away from zero
  const TargetPair np =
      analyze_targets(lat, {Rat(1), Rat(1)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)});
  CHECK(np.ff == Rat(0));
  CHECK(np.gg == Rat(0));
  CHECK(np.strict_f);
  CHECK(np.strict_g);

  // same targets, integral coset: xi.f hits zero on the coset
  CHECK_THROWS_AS(analyze_targets(lat, {Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}),
                  DomainError);

  // half-pairing lattice: the value grid is offset by 1/4, never zero
  const LatticeSpec half = lattice_preset("hyperbolic-half");
  const TargetPair hp =
      analyze_targets(half, {Rat(1), Rat(1)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)});
  CHECK(hp.strict_f);
  CHECK(hp.strict_g);
  CHECK(hp.cf == Rat(1, 2));
}

TEST_CASE("indefinite support points on the hyperbolic plane") {
  const LatticeSpec lat = lattice_preset("hyperbolic");
  const Vec c = {Rat(1), Rat(0)};
  const Vec f = {Rat(1), Rat(3)};
  const Vec g = {Rat(3), Rat(1)};

  const auto sup = theta_support(lat, c, f, g, Rat(1));
  REQUIRE(sup.size() == 2);
  CHECK(sup[0].xi == Vec({Rat(-1, 2), Rat(1)}));
  CHECK(sup[0].weight == 1);
  CHECK(sup[0].norm == Rat(1));
  CHECK(sup[1].xi == Vec({Rat(1, 2), Rat(-1)}));
  CHECK(sup[1].weight == -1);

  // weights are antisymmetric under xi -> -xi
  const auto big = theta_support(lat, c, f, g, Rat(6));
  CHECK(big.size() > 2);
  for (const auto& p : big) {
    Vec neg = {-p.xi[0], -p.xi[1]};
    auto it = std::find_if(big.begin(), big.end(),
                           [&](const SupportPoint& q) { return q.xi == neg; });
    REQUIRE(it != big.end());
    CHECK(it->weight == -p.weight);
  }

  // norms never exceed the cap and come out sorted
  for (size_t i = 0; i + 1 < big.size(); ++i) CHECK(big[i].norm <= big[i + 1].norm);
  for (const auto& p : big) CHECK(p.norm <= Rat(6));

  // on the integral coset the point (-1, 3) pairs to zero with f while its
  // pairing with g is positive: nonzero weight on the sign boundary
  CHECK_THROWS_AS(theta_support(lat, {Rat(0), Rat(0)}, f, g, Rat(6)), DomainError);
  // the scan window is wider than the cap, so a boundary point of norm 6 is
  // already reported at cap 3; at cap 2 the window stays clear of it and the
  // two norm-2 points come through
  CHECK_THROWS_AS(theta_support(lat, {Rat(0), Rat(0)}, f, g, Rat(3)), DomainError);
  const auto low = theta_support(lat, {Rat(0), Rat(0)}, f, g, Rat(2));
  CHECK(low.size() == 2);
}

TEST_CASE("shifted support sums") {
  const LatticeSpec lat = lattice_preset("hyperbolic");
  const Vec c = {Rat(1), Rat(0)};
  const Vec f = {Rat(1), Rat(3)};
  const Vec g = {Rat(3), Rat(1)};

  // zero shift reproduces the plain sum
  const Vec zero = {Rat(0), Rat(0)};
  const auto plain = theta_support(lat, c, f, g, Rat(4));
  const auto shifted0 = theta_support(lat, c, f, g, Rat(4), &zero);
  REQUIRE(plain.size() == shifted0.size());
  for (size_t i = 0; i < plain.size(); ++i) {
    CHECK(plain[i].xi == shifted0[i].xi);
    CHECK(plain[i].weight == shifted0[i].weight);
  }

  // integral shift: same weights read off at translated points
  const Vec v = {Rat(1), Rat(0)};
  const auto sh = theta_support(lat, c, f, g, Rat(2), &v);
  CHECK(!sh.empty());
  for (const auto& p : sh) {
    Vec back = {p.xi[0] - v[0], p.xi[1] - v[1]};
    CHECK(p.norm == -lat.dot(p.xi, p.xi));
    CHECK(p.norm <= Rat(2));
    // the weight was evaluated at the untranslated point: mu(-x) = [x <= 0]
    CHECK(p.pf == lat.dot(back, f));
    CHECK(p.pg == lat.dot(back, g));
    const int mu_f = p.pf <= Rat(0) ? 1 : 0;
    const int mu_g = p.pg <= Rat(0) ? 1 : 0;
    CHECK(p.weight == mu_f - mu_g);
  }

  // shifted sums need strictly positive target squares
  CHECK_THROWS_AS(theta_support(lat, c, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, Rat(2), &v),
                  DomainError);
}

TEST_CASE("wall enumeration on the quadric surface") {
  const LatticeSpec lat = p1xp1_lattice();
  const Vec c = {Rat(1), Rat(0)};
  const Vec h = {Rat(1), Rat(3)};
  const Vec l = {Rat(3), Rat(1)};

  const WallSet w1 = enumerate_walls(lat, c, Rat(1), h, l);
  REQUIRE(w1.walls.size() == 1);
  CHECK(w1.walls[0].xi == Vec({Rat(-1, 2), Rat(1)}));
  CHECK(w1.walls[0].norm == Rat(1));
  CHECK(w1.walls[0].xih == Rat(-1, 2));
  CHECK(w1.walls[0].xil == Rat(5, 2));
  CHECK(w1.walls[0].xik == Rat(-1));
  CHECK(w1.walls[0].good_proved);
  CHECK(w1.all_good_proved);

  const WallSet w2 = enumerate_walls(lat, c, Rat(2), h, l);
  CHECK(w2.walls.size() >= 1);
  for (size_t i = 0; i + 1 < w2.walls.size(); ++i)
    CHECK(w2.walls[i].norm <= w2.walls[i + 1].norm);
  for (const auto& w : w2.walls) {
    CHECK(w.norm > Rat(0));
    CHECK(w.norm <= Rat(2));
    CHECK(w.xil > Rat(0));
    CHECK(w.xih < Rat(0));
    CHECK(-lat.dot(w.xi, w.xi) == w.norm);
  }

  // d <= 0: nothing strictly between the chambers
  CHECK(enumerate_walls(lat, c, Rat(0), h, l).walls.empty());

  // proportional targets cut out no walls at all
  CHECK(enumerate_walls(lat, c, Rat(2), h, h).walls.empty());

  // the grid test: d + c^2/4 must be integral
  CHECK_THROWS_AS(enumerate_walls(lat, c, Rat(1, 2), h, l), DomainError);

  // a candidate pairing to zero with a target stops the computation
  CHECK_THROWS_AS(enumerate_walls(lat, c, Rat(1), {Rat(1), Rat(2)}, l), DomainError);

  // degenerate targets are rejected up front
  CHECK_THROWS_AS(enumerate_walls(lat, c, Rat(1), h, {Rat(-3), Rat(-1)}), DomainError);
}

TEST_CASE("wall goodness witnesses") {
  const LatticeSpec lat = p1xp1_lattice();
  const Vec c = {Rat(1), Rat(0)};
  const Vec h = {Rat(1), Rat(3)};
  const Vec l = {Rat(3), Rat(1)};

  // every wall for small d on this surface is witnessed by h, l or h+l
  for (long long d = 1; d <= 4; ++d) {
    const WallSet ws = enumerate_walls(lat, c, Rat(d), h, l);
    CHECK(ws.all_good_proved);
    for (const auto& w : ws.walls) {
      const Vec two_xi_k = {w.xi[0] * 2 + lat.K[0], w.xi[1] * 2 + lat.K[1]};
      bool witnessed = lat.dot(two_xi_k, h) < Rat(0) || lat.dot(two_xi_k, l) < Rat(0) ||
                       lat.dot(two_xi_k, {h[0] + l[0], h[1] + l[1]}) < Rat(0);
      CHECK(witnessed == w.good_proved);
    }
  }

  // an abstract lattice with no canonical class still proves goodness
  const LatticeSpec hyp = lattice_preset("hyperbolic");
  const WallSet ws = enumerate_walls(hyp, c, Rat(1), h, l);
  REQUIRE(ws.walls.size() == 1);
  CHECK(ws.walls[0].xik == Rat(0));
  CHECK(ws.walls[0].good_proved);
}
