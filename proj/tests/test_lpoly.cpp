#include <doctest.h>

#include "motivic/lpoly.hpp"

using namespace motivic;

namespace {

LPoly sample_a() {
  LPoly x = LPoly::one();
  x.add_term(Rat(1), Rat(0), -2);
  x.add_term(Rat(1), Rat(1), 3);
  return x;
}

LPoly sample_b() {
  LPoly x = LPoly::mono(Rat(0), Rat(1), 1);
  x.add_term(Rat(2), Rat(2), -1);
  return x;
}

}  // namespace

TEST_CASE("ring operations are associative, commutative and distributive") {
  const LPoly a = sample_a();
  const LPoly b = sample_b();
  const LPoly c = LPoly::lef(Rat(2)) - LPoly::constant(5);
  CHECK(a + b == b + a);
  CHECK(a * b == b * a);
  CHECK((a + b) + c == a + (b + c));
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a - a == LPoly::zero());
  CHECK(a * LPoly::one() == a);
  CHECK(a * LPoly::zero() == LPoly::zero());
  CHECK(-(-a) == a);
}

TEST_CASE("cancellation removes stored terms entirely") {
  LPoly x = LPoly::mono(Rat(1), Rat(1), 4);
  x.add_term(Rat(1), Rat(1), -4);
  CHECK(x.is_zero());
  CHECK(x == LPoly::zero());
  CHECK(x.terms.empty());
}

TEST_CASE("exponent denominators beyond 2 are rejected") {
  LPoly x;
  CHECK_NOTHROW(x.add_term(Rat(1, 2), Rat(-3, 2), 1));
  CHECK_THROWS_AS(x.add_term(Rat(1, 3), Rat(0), 1), std::logic_error);
  CHECK_THROWS_AS(x.add_term(Rat(0), Rat(1, 4), 1), std::logic_error);
}

TEST_CASE("adams multiplies both exponents") {
  const LPoly a = sample_a();
  CHECK(a.adams(1) == a);
  LPoly want = LPoly::one();
  want.add_term(Rat(2), Rat(0), -2);
  want.add_term(Rat(2), Rat(2), 3);
  CHECK(a.adams(2) == want);
  const LPoly b = sample_b();
  CHECK((a * b).adams(3) == a.adams(3) * b.adams(3));
}

TEST_CASE("euler evaluation sums coefficients") {
  CHECK(sample_a().eval_ones() == 2);
  CHECK(LPoly::zero().eval_ones() == 0);
  const LPoly p2 = LPoly::one() + LPoly::lef() + LPoly::lef(Rat(2));
  CHECK(p2.eval_ones() == 3);
}

TEST_CASE("diagonal and L-polynomial predicates") {
  const LPoly p2 = LPoly::one() + LPoly::lef() + LPoly::lef(Rat(2));
  CHECK(p2.is_diagonal());
  CHECK(p2.is_L_polynomial());
  CHECK(p2.coeff_L(Rat(1)) == 1);
  CHECK(p2.coeff_L(Rat(3)) == 0);
  CHECK(p2.max_diag_exp() == Rat(2));

  const LPoly half = LPoly::mono(Rat(1, 2), Rat(1, 2), 1);
  CHECK(half.is_diagonal());
  CHECK_FALSE(half.is_L_polynomial());

  CHECK_FALSE(sample_a().is_diagonal());
  CHECK_FALSE(sample_a().is_L_polynomial());
}

TEST_CASE("poincare specialization flips sign by total degree") {
  // (1 - 2u + 3uv) at u = v = -z: 1 + 2z + 3z^2, stored on half-diagonals
  const LPoly p = sample_a().poincare();
  LPoly want = LPoly::one();
  want.add_term(Rat(1, 2), Rat(1, 2), 2);
  want.add_term(Rat(1), Rat(1), 3);
  CHECK(p == want);
  CHECK_THROWS_AS(LPoly::mono(Rat(1, 2), Rat(0), 1).poincare(), DomainError);
}

TEST_CASE("point counting evaluates L at an integer") {
  const LPoly p2 = LPoly::one() + LPoly::lef() + LPoly::lef(Rat(2));
  CHECK(p2.point_count(2) == 7);
  CHECK(p2.point_count(4) == 21);
  CHECK_THROWS_AS(sample_a().point_count(2), DomainError);
  CHECK_THROWS_AS(LPoly::lef(Rat(-1)).point_count(2), DomainError);
}

TEST_CASE("positive part division matches multiplication by L minus one") {
  // (L - 1) * ppd(x) == x - (value of x at L = 1), for polynomials in L
  const LPoly lm1 = LPoly::lef() - LPoly::one();
  LPoly x = LPoly::lef(Rat(4)).scaled(3) + LPoly::lef(Rat(1)).scaled(-2) + LPoly::constant(7);
  CHECK(lm1 * x.positive_part_div() == x - LPoly::constant(x.eval_ones()));

  // [P^m] = ppd(L^{m+1})
  CHECK(LPoly::lef(Rat(3)).positive_part_div() ==
        LPoly::one() + LPoly::lef() + LPoly::lef(Rat(2)));
  CHECK(LPoly::constant(5).positive_part_div() == LPoly::zero());
  CHECK_THROWS_AS(sample_a().positive_part_div(), DomainError);
}

TEST_CASE("widening and narrowing between coefficient rings") {
  const LPoly a = sample_a();
  CHECK(narrow(widen(a)) == a);
  LPolyQ q = LPolyQ::constant(mpq_class(1, 2));
  CHECK_THROWS_AS(narrow(q), std::logic_error);
  CHECK(narrow(q + q) == LPoly::one());
}

TEST_CASE("rendering is ascending with unit coefficients elided") {
  const LPoly p2 = LPoly::one() + LPoly::lef() + LPoly::lef(Rat(2));
  CHECK(render_lpoly(p2, VarStyle::Lefschetz) == "1 + L + L^2");
  CHECK(render_lpoly(p2, VarStyle::UV) == "1 + u v + u^2 v^2");
  CHECK(render_lpoly(LPoly::zero(), VarStyle::Lefschetz) == "0");
  CHECK(render_lpoly(-(LPoly::one() + LPoly::lef()), VarStyle::Lefschetz) == "-1 - L");
  CHECK(render_lpoly(LPoly::lef().scaled(2) + LPoly::lef(Rat(2)).scaled(-3),
                     VarStyle::Lefschetz) == "2 L - 3 L^2");
  CHECK(render_lpoly(sample_a(), VarStyle::UV) == "1 - 2 u + 3 u v");

  // z-style doubles the stored diagonal exponent
  LPoly z = LPoly::one();
  z.add_term(Rat(1, 2), Rat(1, 2), 2);
  z.add_term(Rat(4), Rat(4), 1);
  CHECK(render_lpoly(z, VarStyle::Z) == "1 + 2 z + z^8");

  LPoly y = LPoly::mono(Rat(-1, 2), Rat(-1, 2), 1) + LPoly::mono(Rat(1, 2), Rat(1, 2), -1);
  CHECK(render_lpoly(y, VarStyle::Y) == "y^-1/2 - y^1/2");

  CHECK_THROWS_AS(render_lpoly(sample_a(), VarStyle::Lefschetz), std::logic_error);
}
