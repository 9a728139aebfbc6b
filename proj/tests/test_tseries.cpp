#include <doctest.h>

#include "motivic/tseries.hpp"

using namespace motivic;

namespace {

TSeries geom_series(const Rat& order) {
  // 1/(1-t)
  return (TSeries::one(order) - TSeries::mono(order, Rat(1), LPoly::one())).inverted();
}

}  // namespace

TEST_CASE("series arithmetic respects truncation orders") {
  TSeries a = TSeries::one(Rat(5));
  a.add_term(Rat(2), LPoly::lef());
  TSeries b = TSeries::mono(Rat(3), Rat(1), LPoly::one());
  const TSeries p = a * b;
  CHECK(p.order == Rat(3));
  CHECK(p.coeff(Rat(1)) == LPoly::one());
  CHECK(p.coeff(Rat(3)) == LPoly::lef());
  // exponents beyond the order are dropped on entry
  TSeries c(Rat(2));
  c.add_term(Rat(3), LPoly::one());
  CHECK(c.is_zero());
}

TEST_CASE("equality distinguishes truncation orders") {
  CHECK(TSeries::one(Rat(2)) != TSeries::one(Rat(3)));
  CHECK(TSeries::one(Rat(2)) == TSeries::one(Rat(2)));
}

TEST_CASE("inversion of a unit-leading series") {
  const TSeries g = geom_series(Rat(6));
  for (long long k = 0; k <= 6; ++k) CHECK(g.coeff(Rat(k)) == LPoly::one());

  // inverting a shifted monomial lead keeps exactness bookkeeping
  TSeries f = TSeries::mono(Rat(4), Rat(1), LPoly::lef());
  f.add_term(Rat(2), LPoly::one());
  const TSeries inv = f.inverted();
  CHECK(inv.order == Rat(2));
  CHECK((f * inv).coeff(Rat(0)) == LPoly::one());

  TSeries bad = TSeries::mono(Rat(3), Rat(0), LPoly::constant(2));
  CHECK_THROWS_AS(bad.inverted(), DomainError);
  CHECK_THROWS_AS(TSeries::zero(Rat(3)).inverted(), DomainError);
  TSeries two_terms = TSeries::mono(Rat(3), Rat(0), LPoly::one() + LPoly::lef());
  CHECK_THROWS_AS(two_terms.inverted(), DomainError);
}

TEST_CASE("substitution stretches exponents and twists coefficients") {
  TSeries f = TSeries::one(Rat(3));
  f.add_term(Rat(1), LPoly::constant(2));
  f.add_term(Rat(3), LPoly::lef());
  const TSeries s = f.substituted(2, 0);
  CHECK(s.order == Rat(6));
  CHECK(s.coeff(Rat(2)) == LPoly::constant(2));
  CHECK(s.coeff(Rat(6)) == LPoly::lef());

  const TSeries tw = f.substituted(1, 2);
  CHECK(tw.coeff(Rat(1)) == LPoly::lef(Rat(2)).scaled(2));
  CHECK(tw.coeff(Rat(3)) == LPoly::lef(Rat(7)));

  TSeries half = TSeries::mono(Rat(2), Rat(1, 2), LPoly::one());
  CHECK_NOTHROW(half.substituted(2, 0));
  CHECK_THROWS_AS(half.substituted(1, 1), std::logic_error);
}

TEST_CASE("shifting is exact multiplication by a monomial") {
  TSeries f = TSeries::one(Rat(2));
  f.add_term(Rat(2), LPoly::one());
  const TSeries s = f.shifted(Rat(3), LPoly::lef());
  CHECK(s.order == Rat(5));
  CHECK(s.coeff(Rat(3)) == LPoly::lef());
  CHECK(s.coeff(Rat(5)) == LPoly::lef());
  const TSeries back = s.shifted(Rat(-3), LPoly::one());
  CHECK(back.coeff(Rat(0)) == LPoly::lef());
}

TEST_CASE("adams rescales series and coefficient exponents together") {
  TSeries f = TSeries::mono(Rat(2), Rat(1), LPoly::lef());
  const TSeries a = f.adams(3);
  CHECK(a.order == Rat(6));
  CHECK(a.coeff(Rat(3)) == LPoly::lef(Rat(3)));
}

TEST_CASE("exp and log invert each other") {
  TSeriesQ h = TSeriesQ::zero(Rat(5));
  h.add_term(Rat(1), LPolyQ::constant(2));
  h.add_term(Rat(2), -LPolyQ::lef());
  const TSeriesQ g = series_exp(h);
  CHECK(g.coeff(Rat(0)) == LPolyQ::one());
  CHECK(series_log(g) == h);

  TSeriesQ bad = TSeriesQ::one(Rat(3));
  CHECK_THROWS_AS(series_exp(bad), DomainError);
  TSeriesQ not_one = TSeriesQ::mono(Rat(3), Rat(0), LPolyQ::constant(2));
  CHECK_THROWS_AS(series_log(not_one), DomainError);
}

TEST_CASE("plethystic exponential of a curve class term") {
  // PE[(u+v) t]: the t^2 coefficient is sym^2 of u+v
  TSeries f = TSeries::zero(Rat(3));
  f.add_term(Rat(1), LPoly::mono(Rat(1), Rat(0), 1) + LPoly::mono(Rat(0), Rat(1), 1));
  const TSeries g = pleth_exp(f);
  LPoly want = LPoly::mono(Rat(2), Rat(0), 1) + LPoly::lef() + LPoly::mono(Rat(0), Rat(2), 1);
  CHECK(g.coeff(Rat(0)) == LPoly::one());
  CHECK(g.coeff(Rat(2)) == want);
}

TEST_CASE("plethystic log of one plus t") {
  TSeries g = TSeries::one(Rat(3));
  g.add_term(Rat(1), LPoly::one());
  const TSeriesQ pl = pleth_log(g);
  CHECK(pl.coeff(Rat(1)) == LPolyQ::one());
  CHECK(pl.coeff(Rat(2)) == -LPolyQ::one());
  CHECK(pl.coeff(Rat(3)) == LPolyQ::zero());
}

TEST_CASE("plethystic exp and log are mutually inverse") {
  TSeries f = TSeries::zero(Rat(4));
  f.add_term(Rat(1), LPoly::one() + LPoly::lef());
  f.add_term(Rat(2), LPoly::lef(Rat(2)).scaled(-1));
  const TSeries g = pleth_exp(f);
  CHECK(narrow(pleth_log(g)) == f);
}

TEST_CASE("series rendering styles") {
  TSeries f = TSeries::one(Rat(2));
  f.add_term(Rat(1), LPoly::one() + LPoly::lef());
  f.add_term(Rat(2), LPoly::lef().scaled(-2));
  CHECK(render_tseries(f, VarStyle::Lefschetz) == "1 + (1 + L) t + (-2 L) t^2");
  CHECK(render_tseries(TSeries::zero(Rat(1)), VarStyle::Lefschetz) == "0");
  CHECK(render_tseries(TSeries::mono(Rat(2), Rat(1, 2), LPoly::one()), VarStyle::Lefschetz,
                       "q") == "q^1/2");
}
