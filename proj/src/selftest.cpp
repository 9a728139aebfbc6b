#include "motivic/selftest.hpp"

#include <functional>

#include "motivic/hilb.hpp"
#include "motivic/moduli.hpp"
#include "motivic/partitions.hpp"
#include "motivic/theta.hpp"

namespace motivic {

namespace {

struct Case {
  std::string name;
  std::function<std::string()> run;  // empty string on pass
};

std::string check(bool ok, const std::string& detail) { return ok ? "" : detail; }

LPoly lef_poly(std::initializer_list<std::pair<long long, long long>> terms) {
  LPoly p;
  for (auto& [e, c] : terms) p.add_term(Rat(e), Rat(e), mpz_of(c));
  return p;
}

std::vector<Case> quick_cases() {
  std::vector<Case> cases;
  cases.push_back({"partition-count-10", [] {
                     const auto parts = enumerate_partitions(10);
                     return check(mpz_of(static_cast<long long>(parts.size())) == partition_count(10) &&
                                      parts.size() == 42,
                                  "expected 42 partitions of 10");
                   }});
  cases.push_back({"pleth-log-two-term", [] {
                     TSeriesQ g = TSeriesQ::one(Rat(4));
                     g.add_term(Rat(1), LPolyQ::one());
                     TSeriesQ expect = TSeriesQ::zero(Rat(4));
                     expect.add_term(Rat(1), LPolyQ::one());
                     expect.add_term(Rat(2), -LPolyQ::one());
                     return check(pleth_log_q(g) == expect, "log of 1 + t is not t - t^2");
                   }});
  cases.push_back({"hilb-p2-values", [] {
                     const SurfaceData s = surface_preset("p2");
                     const LPoly h2 = hilb_class(s, 2);
                     const LPoly want =
                         lef_poly({{0, 1}, {1, 2}, {2, 3}, {3, 2}, {4, 1}});
                     if (h2 != want) return std::string("second point class is off");
                     return check(hilb_class(s, 3).eval_ones() == 22, "third Euler number is not 22");
                   }});
  cases.push_back({"hilb-series-methods", [] {
                     const SurfaceData s = surface_preset("p2");
                     return check(hilb_series(s, 4, SeriesMethod::Direct) ==
                                      hilb_series(s, 4, SeriesMethod::Product),
                                  "direct and product series disagree");
                   }});
  cases.push_back({"positive-part-identity", [] {
                     const LPoly x = lef_poly({{1, 2}, {3, -1}, {4, 5}});
                     const LPoly recon = (LPoly::lef() - LPoly::one()) * x.positive_part_div() +
                                         LPoly::constant(x.eval_ones());
                     return check(recon == x, "division identity failed");
                   }});
  cases.push_back({"theta-sum-vs-product", [] {
                     return check(jacobi_theta_sum(1, 1, Rat(3)) ==
                                          jacobi_theta_product(1, 1, Rat(3)) &&
                                      jacobi_theta_sum(0, 1, Rat(3)) ==
                                          jacobi_theta_product(0, 1, Rat(3)),
                                  "triple product mismatch");
                   }});
  cases.push_back({"walls-ruled-basic", [] {
                     const SurfaceData s = surface_preset("p1xp1");
                     const auto ws = enumerate_walls(lattice_of_surface(s), {Rat(1), Rat(0)},
                                                     Rat(1), {Rat(1), Rat(3)}, {Rat(3), Rat(1)});
                     if (ws.walls.size() != 1) return std::string("expected a single wall");
                     return check(ws.walls[0].xi == Vec{Rat(-1, 2), Rat(1)} && ws.all_good_proved,
                                  "wall data is off");
                   }});
  cases.push_back({"wallcross-ruled-first", [] {
                     const SurfaceData s = surface_preset("p1xp1");
                     const auto r = wallcross_diff(s, {Rat(1), Rat(0)}, Rat(1), {Rat(1), Rat(3)},
                                                   {Rat(3), Rat(1)}, WallRoute::Direct);
                     return check(r.value == -lef_poly({{0, 1}, {1, 1}}),
                                  "first wall difference is not -(1+L)");
                   }});
  cases.push_back({"blowup-ratio-linear-term", [] {
                     const TSeries r = blowup_ratio(0, Rat(2));
                     return check(r.coeff(Rat(1)) == lef_poly({{1, 1}, {2, 1}, {3, 1}}),
                                  "t coefficient is not L + L^2 + L^3");
                   }});
  return cases;
}

std::vector<Case> full_cases() {
  std::vector<Case> cases;
  cases.push_back({"hilb-series-k3", [] {
                     const SurfaceData s = surface_preset("k3");
                     return check(hilb_series(s, 5, SeriesMethod::Direct) ==
                                      hilb_series(s, 5, SeriesMethod::Product),
                                  "direct and product series disagree");
                   }});
  cases.push_back({"strata-complete-p2", [] {
                     const SurfaceData s = surface_preset("p2");
                     for (long long n = 1; n <= 4; ++n) {
                       LPoly total;
                       for (const auto& beta : enumerate_partitions(n))
                         total += stratum_class(s, beta);
                       if (total != hilb_class(s, n))
                         return "strata of " + std::to_string(n) + " points do not sum up";
                     }
                     return std::string();
                   }});
  cases.push_back({"mckay-matches-hilb", [] {
                     const SurfaceData s = surface_preset("p1xp1");
                     for (long long n = 1; n <= 6; ++n)
                       if (mckay_sum(s, n) != hilb_class(s, n))
                         return "orbifold sum differs at n = " + std::to_string(n);
                     return std::string();
                   }});
  cases.push_back({"incidence-euler-numbers", [] {
                     const SurfaceData s = surface_preset("p2");
                     const long long want[] = {12, 39, 105};
                     for (long long n = 1; n <= 3; ++n)
                       if (incidence_class(s, n).eval_ones() != mpz_of(want[n - 1]))
                         return "incidence Euler number differs at n = " + std::to_string(n);
                     return std::string();
                   }});
  cases.push_back({"wallcross-route-equality", [] {
                     const SurfaceData s = surface_preset("p1xp1");
                     const Vec c = {Rat(1), Rat(0)};
                     const Vec h = {Rat(1), Rat(3)};
                     const Vec l = {Rat(3), Rat(1)};
                     for (long long d = 1; d <= 3; ++d) {
                       const auto a = wallcross_diff(s, c, Rat(d), h, l, WallRoute::Direct);
                       const auto b = wallcross_diff(s, c, Rat(d), h, l, WallRoute::Theta);
                       if (a.value != b.value) return "routes differ at d = " + std::to_string(d);
                     }
                     return std::string();
                   }});
  cases.push_back({"elliptic-product-match", [] {
                     const TSeries prod = elliptic_moduli_product(2);
                     for (long long k = 0; k <= 2; ++k) {
                       const Rat d = Rat(2 * k + 1, 4);
                       const auto r = elliptic_moduli_class(d, WallRoute::Theta);
                       if (prod.coeff(Rat(k)) != r.value)
                         return "product coefficient differs at t^" + std::to_string(k);
                     }
                     return std::string();
                   }});
  return cases;
}

}  // namespace

std::vector<SelftestCheck> run_selftest(bool full) {
  std::vector<Case> cases = quick_cases();
  if (full)
    for (auto& c : full_cases()) cases.push_back(std::move(c));
  std::vector<SelftestCheck> out;
  for (auto& c : cases) {
    SelftestCheck r;
    r.name = c.name;
    try {
      r.detail = c.run();
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace motivic
