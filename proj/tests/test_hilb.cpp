#include <doctest.h>

#include <vector>

#include "motivic/colored.hpp"
#include "motivic/hilb.hpp"

using namespace motivic;

namespace {

// Coefficients of prod_{k>=1} (1 - t^k)^(-E) up to t^order, by repeated
// exact polynomial multiplication. Works for negative E as well.
std::vector<mpz_class> product_power_oracle(long long E, long long order) {
  std::vector<mpz_class> c(static_cast<size_t>(order) + 1, 0);
  c[0] = 1;
  for (long long k = 1; k <= order; ++k) {
    for (long long rep = 0; rep < (E >= 0 ? E : -E); ++rep) {
      if (E >= 0) {
        for (long long n = k; n <= order; ++n) c[n] += c[n - k];
      } else {
        for (long long n = order; n >= k; --n) c[n] -= c[n - k];
      }
    }
  }
  return c;
}

LPoly sym2(const LPoly& x) {
  const LPolyQ w = widen(x);
  return narrow((w * w + w.adams(2)).scaled(mpq_class(1, 2)));
}

}  // namespace

TEST_CASE("punctual classes count partitions by colength") {
  CHECK(punctual_class(0) == LPoly::one());
  CHECK(punctual_class(1) == LPoly::one());
  CHECK(punctual_class(2) == LPoly::one() + LPoly::lef());
  CHECK(punctual_class(4) == LPoly::one() + LPoly::lef() + LPoly::lef(Rat(2)).scaled(2) +
                                 LPoly::lef(Rat(3)));
  for (long long n = 0; n <= 12; ++n)
    CHECK(punctual_class(n).eval_ones() == partition_count(n));
}

TEST_CASE("symmetric power classes agree with the Adams formulas") {
  for (const char* name : {"p2", "ruled:1"}) {
    const SurfaceData S = surface_preset(name);
    const auto sp = sym_power_classes(S, 3);
    REQUIRE(sp.size() == 4);
    const LPoly e = S.e_class();
    CHECK(sp[0] == LPoly::one());
    CHECK(sp[1] == e);
    CHECK(sp[2] == sym2(e));
    const LPolyQ w = widen(e);
    const LPolyQ s3 = (w * w * w + (w * w.adams(2)).scaled(mpq_class(3)) +
                       w.adams(3).scaled(mpq_class(2)))
                          .scaled(mpq_class(1, 6));
    CHECK(sp[3] == narrow(s3));
  }
}

TEST_CASE("point Hilbert scheme classes on the projective plane") {
  const SurfaceData S = surface_preset("p2");
  CHECK(hilb_class(S, 0) == LPoly::one());
  CHECK(hilb_class(S, 1) == LPoly::one() + LPoly::lef() + LPoly::lef(Rat(2)));

  LPoly h2 = LPoly::one();
  h2 += LPoly::lef().scaled(2);
  h2 += LPoly::lef(Rat(2)).scaled(3);
  h2 += LPoly::lef(Rat(3)).scaled(2);
  h2 += LPoly::lef(Rat(4));
  CHECK(hilb_class(S, 2) == h2);

  const long long c3[7] = {1, 2, 5, 6, 5, 2, 1};
  LPoly h3 = LPoly::zero();
  for (int j = 0; j <= 6; ++j) h3 += LPoly::lef(Rat(j)).scaled(mpz_of(c3[j]));
  CHECK(hilb_class(S, 3) == h3);

  CHECK(hilb_class(S, 1).eval_ones() == 3);
  CHECK(hilb_class(S, 2).eval_ones() == 9);
  CHECK(hilb_class(S, 3).eval_ones() == 22);
}

TEST_CASE("euler numbers follow the product generating series") {
  for (const char* name : {"p2", "p1xp1", "k3", "ruled:2", "abelian"}) {
    const SurfaceData S = surface_preset(name);
    const auto want = product_power_oracle(S.euler(), 8);
    for (long long n = 0; n <= 8; ++n)
      CHECK(hilb_class(S, n).eval_ones() == want[static_cast<size_t>(n)]);
  }
}

TEST_CASE("serial and parallel modes agree") {
  for (const char* name : {"p2", "ruled:1", "abelian"}) {
    const SurfaceData S = surface_preset(name);
    for (long long n = 0; n <= 6; ++n)
      CHECK(hilb_class(S, n, ComputeMode::Serial) == hilb_class(S, n, ComputeMode::Parallel));
  }
}

TEST_CASE("poincare duality of the point Hilbert scheme classes") {
  for (const char* name : {"p2", "ruled:1", "k3"}) {
    const SurfaceData S = surface_preset(name);
    for (long long n = 1; n <= 4; ++n) {
      const LPoly h = hilb_class(S, n);
      LPoly dual = LPoly::zero();
      for (const auto& [pq, c] : h.terms)
        dual += LPoly::mono(Rat(2 * n) - pq.first, Rat(2 * n) - pq.second, c);
      CHECK(dual == h);
    }
  }
}

TEST_CASE("series methods expand the same coefficients") {
  for (const char* name : {"p2", "p1xp1", "f1", "ruled:1", "k3", "abelian", "elliptic-ruled"}) {
    const SurfaceData S = surface_preset(name);
    const TSeries direct = hilb_series(S, 5, SeriesMethod::Direct);
    CHECK(direct == hilb_series(S, 5, SeriesMethod::Product));
    for (long long n = 0; n <= 5; ++n) CHECK(direct.coeff(Rat(n)) == hilb_class(S, n));
  }
}

TEST_CASE("blowing up multiplies the series by the universal factor") {
  const TSeries fac = blowup_factor(5);
  CHECK(fac.coeff(Rat(0)) == LPoly::one());
  CHECK(fac.coeff(Rat(1)) == LPoly::lef());
  CHECK(fac.coeff(Rat(2)) == LPoly::lef(Rat(2)).scaled(2));

  const TSeries base = hilb_series(surface_preset("p2"), 5, SeriesMethod::Direct);
  CHECK(base * fac == hilb_series(surface_preset("f1"), 5, SeriesMethod::Direct));

  const TSeries rbase = hilb_series(surface_preset("ruled:1"), 4, SeriesMethod::Direct);
  CHECK(rbase * blowup_factor(4) ==
        hilb_series(surface_preset("blowup:ruled:1"), 4, SeriesMethod::Direct));
}

TEST_CASE("strata classes glue back to the full Hilbert class") {
  for (const char* name : {"p2", "ruled:1"}) {
    const SurfaceData S = surface_preset(name);
    for (long long n = 1; n <= 5; ++n) {
      LPoly total = LPoly::zero();
      for (const auto& beta : enumerate_partitions(n)) total += stratum_class(S, beta);
      CHECK(total == hilb_class(S, n));
    }
  }
}

TEST_CASE("stratum endpoints have closed forms") {
  for (const char* name : {"p2", "p1xp1"}) {
    const SurfaceData S = surface_preset(name);
    const LPoly e = S.e_class();
    const ColoredEngine eng(e, 5);
    for (long long n = 1; n <= 5; ++n) {
      CHECK(stratum_class(S, Partition({n})) == e * punctual_class(n));
      CHECK(stratum_class(S, Partition(std::vector<long long>(static_cast<size_t>(n), 1))) ==
            eng.config_class({n}));
    }
  }
}

TEST_CASE("fiber decomposition recovers each stratum") {
  const SurfaceData S = surface_preset("p2");
  for (long long n = 1; n <= 5; ++n) {
    for (const auto& beta : enumerate_partitions(n)) {
      const auto pieces = fiber_strata(S, beta);
      LPoly total = LPoly::zero();
      for (const auto& [alpha, cls] : pieces) {
        CHECK(alpha.size() == n);
        total += cls * LPoly::lef(Rat(n - alpha.length()));
      }
      CHECK(total == stratum_class(S, beta));
    }
  }

  // single point of full multiplicity: every local type contributes the
  // surface class itself
  const auto one_point = fiber_strata(S, Partition({3}));
  CHECK(one_point.size() == 3);
  for (const auto& [alpha, cls] : one_point) CHECK(cls == S.e_class());

  CHECK(fiber_stratum_class(S, Partition({2, 1}), Partition({2, 1})) ==
        fiber_strata(S, Partition({2, 1})).at(Partition({2, 1})));
  CHECK(fiber_stratum_class(S, Partition({3}), Partition({2, 1})).is_zero());
  CHECK_THROWS_AS(fiber_stratum_class(S, Partition({2}), Partition({3})), DomainError);
}

TEST_CASE("orbifold sum over symmetric group classes matches the Hilbert class") {
  for (const char* name : {"p2", "ruled:1"}) {
    const SurfaceData S = surface_preset(name);
    for (long long n = 0; n <= 6; ++n) CHECK(mckay_sum(S, n) == hilb_class(S, n));
  }
}

TEST_CASE("incidence classes") {
  const SurfaceData S = surface_preset("p2");
  const LPoly e = S.e_class();
  CHECK(incidence_class(S, 1) == e * e + e * LPoly::lef());
  CHECK(incidence_class(S, 1).eval_ones() == 12);
  CHECK(incidence_class(S, 2).eval_ones() == 39);
  CHECK(incidence_class(S, 3).eval_ones() == 105);

  // the n = 1 incidence variety is the diagonal blowup of S x S
  for (const char* name : {"p1xp1", "ruled:1"}) {
    const SurfaceData T = surface_preset(name);
    const LPoly f = T.e_class();
    CHECK(incidence_class(T, 1) == f * f + f * LPoly::lef());
  }
}

TEST_CASE("disjoint unions convolve the two series") {
  const SurfaceData S = surface_preset("p2");
  const TSeries hs = hilb_series(S, 3, SeriesMethod::Direct);
  const TSeries sq = hs * hs;
  for (long long n = 0; n <= 3; ++n) CHECK(disjoint_hilb_class(S, n) == sq.coeff(Rat(n)));
  CHECK(disjoint_hilb_class(S, 2).eval_ones() == 27);
}
