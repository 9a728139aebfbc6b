#include "motivic/moduli.hpp"

#include <map>
#include <stdexcept>

#include "motivic/errors.hpp"
#include "motivic/hilb.hpp"
#include "motivic/theta.hpp"

namespace motivic {

// [P^m] as a class; empty for negative m.
static LPoly projective_space(const Rat& m) {
  if (!rat_is_int(m))
    throw DomainError(ErrCode::NonIntegralExponent,
                      "projective space of dimension " + rat_to_string(m));
  if (m < Rat(0)) return LPoly::zero();
  return LPoly::lef(m + 1).positive_part_div();
}

WallcrossResult wallcross_diff(const SurfaceData& s, const Vec& c, const Rat& d, const Vec& h,
                               const Vec& l, WallRoute route, const std::vector<Vec>& extra_nef) {
  s.validate();
  const LatticeSpec lat = lattice_of_surface(s);
  const long long chi = s.chi_O();

  // Both routes share the wall enumeration: it carries the grid check, the
  // on-wall detection and the goodness witnesses.
  const WallSet walls = enumerate_walls(lat, c, d, h, l, extra_nef);
  WallcrossResult res;
  res.wall_count = static_cast<long long>(walls.walls.size());
  res.all_walls_proved_good = walls.all_good_proved;
  if (walls.walls.empty()) return res;

  // disjoint-pair classes indexed by d + xi^2 = d - norm
  std::map<long long, LPoly> pair_classes;
  auto pair_class = [&](const Rat& index) -> const LPoly& {
    if (!rat_is_int(index))
      throw DomainError(ErrCode::NonIntegralExponent,
                        "pair index " + rat_to_string(index) + " is not an integer");
    const long long n = rat_floor(index);
    auto it = pair_classes.find(n);
    if (it == pair_classes.end()) it = pair_classes.emplace(n, disjoint_hilb_class(s, n)).first;
    return it->second;
  };

  LPoly sum;
  if (route == WallRoute::Direct) {
    for (const auto& w : walls.walls) {
      const LPoly& a = pair_class(d - w.norm);
      const Rat m_pos = d + w.norm + w.xik - Rat(chi) - 1;
      const Rat m_neg = d + w.norm - w.xik - Rat(chi) - 1;
      sum += a * (projective_space(m_pos) - projective_space(m_neg));
    }
  } else {
    // Indefinite theta support for the slot pair (h, l): weight +1 exactly on
    // the walls, -1 on their mirrors. Each norm shell contributes
    // ppd(L^{d - delta - chi} * sum w L^{2 delta + xi.K}), which reproduces
    // the direct wall terms pairwise (wall and mirror give the two
    // projective-space classes).
    const auto support = theta_support(lat, c, h, l, d);
    std::map<Rat, LPoly> shells;
    for (const auto& sp : support) {
      if (!(sp.norm > Rat(0))) continue;
      const Rat lexp = 2 * sp.norm + lat.dot(sp.xi, lat.K);
      if (!rat_is_int(lexp))
        throw DomainError(ErrCode::NonIntegralExponent,
                          "shell exponent " + rat_to_string(lexp) + " is not an integer");
      shells[sp.norm] += LPoly::mono(lexp, lexp, mpz_class(sp.weight));
    }
    for (const auto& [delta, shell] : shells) {
      if (shell.is_zero()) continue;
      const LPoly& a = pair_class(d - delta);
      const Rat twist = d - delta - Rat(chi);
      if (!rat_is_int(twist))
        throw DomainError(ErrCode::NonIntegralExponent,
                          "twist exponent " + rat_to_string(twist) + " is not an integer");
      const LPoly shifted = LPoly::mono(twist, twist, 1) * shell;
      sum += a * shifted.positive_part_div();
    }
  }
  res.value = s.pic0_class() * sum;
  return res;
}

TSeries wallcross_series(const SurfaceData& s, const Vec& c, const Rat& dmax, const Vec& h,
                         const Vec& l, WallRoute route, bool* all_proved) {
  s.validate();
  const LatticeSpec lat = lattice_of_surface(s);
  const Rat cc = lat.dot(c, c);
  TSeries out(dmax);
  if (all_proved) *all_proved = true;
  // d-grid: the integer translates of -c^2/4
  Rat d = -cc / 4;
  d -= Rat(rat_floor(d));  // smallest nonnegative representative
  if (d == Rat(0)) d = Rat(1);
  for (; d <= dmax; d += Rat(1)) {
    const WallcrossResult r = wallcross_diff(s, c, d, h, l, route);
    if (all_proved && !r.all_walls_proved_good) *all_proved = false;
    if (!r.value.is_zero()) out.add_term(d, r.value);
  }
  return out;
}

TSeries blowup_ratio(long long a, const Rat& order) {
  if (a != 0 && a != 1) throw std::invalid_argument("blowup ratio: characteristic must be 0 or 1");
  if (order < Rat(0)) return TSeries(order);
  // theta_{a,0} on doubled tau: compute to half the order, stretch, restore
  const QYSeries th = jacobi_theta_sum(a, 0, order / 2);
  const TSeries num = star_specialize(th.substituted(2, 0)).truncated(order);
  TSeries den = TSeries::one(order);
  for (long long n = 1; Rat(n) <= order; ++n)
    den *= TSeries::one(order) - TSeries::mono(order, Rat(n), LPoly::lef(Rat(2 * n)));
  return num * den.inverted();
}

WallcrossResult elliptic_moduli_class(const Rat& d, WallRoute route) {
  const SurfaceData s = surface_preset("elliptic-ruled");
  const Rat frac = d - Rat(rat_floor(d));
  Vec c;
  if (frac == Rat(1, 4))
    c = {Rat(1), Rat(-1)};  // section - fiber, square -1
  else if (frac == Rat(3, 4))
    c = {Rat(1), Rat(0)};  // section, square 1
  else
    throw DomainError(ErrCode::ExponentOffGrid,
                      "d = " + rat_to_string(d) + " is not in Z + 1/4 or Z + 3/4");
  const Vec fiber = {Rat(0), Rat(1)};
  const Vec gpol = {Rat(2), Rat(-1)};  // 2 section - fiber
  // Chamber walk anchored at the empty fiber chamber: the absolute class is
  // the difference taken towards the fiber side.
  return wallcross_diff(s, c, d, gpol, fiber, route);
}

TSeries elliptic_moduli_product(long long order) {
  if (order < 0) throw std::invalid_argument("product order must be nonnegative");
  const SurfaceData s = surface_preset("elliptic-ruled");
  const LPoly e = s.pic0_class();  // the elliptic curve class (1-u)(1-v)
  const Rat ord(order);
  TSeries acc = TSeries::mono(ord, Rat(0), e);
  for (long long m = 1; 2 * m <= order; ++m) {
    for (long long i = 0; i <= 1; ++i) {
      TSeries j = TSeries::zero(ord);
      for (long long lv = 1; 2 * lv * m <= order; ++lv) {
        const LPoly coeff = e * LPoly::lef(Rat(lv)).positive_part_div() *
                            LPoly::lef(Rat(m * (2 * lv - i)));
        j.add_term(Rat(2 * lv * m), coeff);
      }
      const TSeries factor = TSeries::one(ord) + j;
      acc *= factor;
      acc *= factor;
    }
  }
  for (long long n = 1; n <= order; ++n) {
    TSeries fn = TSeries::one(ord) - TSeries::mono(ord, Rat(n), LPoly::lef(Rat(n - 1)));
    fn *= TSeries::one(ord) - TSeries::mono(ord, Rat(n), LPoly::lef(Rat(n)));
    fn *= TSeries::one(ord) - TSeries::mono(ord, Rat(n), LPoly::lef(Rat(n)));
    fn *= TSeries::one(ord) - TSeries::mono(ord, Rat(n), LPoly::lef(Rat(n + 1)));
    acc *= (n % 2 != 0) ? fn.inverted() : fn;
  }
  return acc;
}

}  // namespace motivic
