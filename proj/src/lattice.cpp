#include "motivic/lattice.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "motivic/errors.hpp"

namespace motivic {

using json = nlohmann::ordered_json;

void LatticeSpec::validate() const {
  if (name.empty()) throw std::invalid_argument("lattice: empty name");
  const std::size_t n = gram.size();
  if (n == 0) throw std::invalid_argument("lattice: empty gram matrix");
  for (auto& row : gram)
    if (row.size() != n) throw std::invalid_argument("lattice: gram matrix not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram[i][j] != gram[j][i]) throw std::invalid_argument("lattice: gram matrix not symmetric");
  const Signature sig = quadratic_signature(gram);
  if (sig.pos != 1 || sig.zero != 0 || sig.neg != static_cast<int>(n) - 1)
    throw std::invalid_argument("lattice: gram matrix must have signature (1, rank-1)");
  if (K.size() != n) throw std::invalid_argument("lattice: distinguished class has wrong length");
}

LatticeSpec lattice_preset(const std::string& name) {
  if (name == "hyperbolic") {
    LatticeSpec lat;
    lat.name = "hyperbolic";
    lat.gram = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    lat.K = {Rat(0), Rat(0)};
    lat.validate();
    return lat;
  }
  if (name == "hyperbolic-half") {
    LatticeSpec lat;
    lat.name = "hyperbolic-half";
    lat.gram = {{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(0)}};
    lat.K = {Rat(0), Rat(0)};
    lat.validate();
    return lat;
  }
  throw std::invalid_argument("unknown lattice preset: " + name);
}

std::vector<std::string> lattice_preset_names() { return {"hyperbolic", "hyperbolic-half"}; }

static Rat rat_from_json(const json& x) {
  if (x.is_number_integer()) return Rat(x.get<long long>());
  if (x.is_string()) return parse_rat(x.get<std::string>());
  throw std::invalid_argument("expected integer or rational string");
}

LatticeSpec lattice_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("lattice json: ") + e.what());
  }
  LatticeSpec lat;
  try {
    lat.name = j.at("name").get<std::string>();
    for (auto& row : j.at("gram")) {
      Vec r;
      for (auto& x : row) r.push_back(rat_from_json(x));
      lat.gram.push_back(std::move(r));
    }
    if (j.contains("K"))
      for (auto& x : j.at("K")) lat.K.push_back(rat_from_json(x));
    else
      lat.K.assign(lat.gram.size(), Rat(0));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("lattice json: ") + e.what());
  }
  lat.validate();
  return lat;
}

std::string lattice_to_json_text(const LatticeSpec& lat) {
  json j;
  j["name"] = lat.name;
  j["gram"] = json::array();
  for (auto& row : lat.gram) {
    json r = json::array();
    for (auto& x : row) r.push_back(rat_to_string(x));
    j["gram"].push_back(r);
  }
  json k = json::array();
  for (auto& x : lat.K) k.push_back(rat_to_string(x));
  j["K"] = k;
  return j.dump();
}

LatticeSpec lattice_of_surface(const SurfaceData& s) {
  LatticeSpec lat;
  lat.name = s.name;
  lat.gram = s.ns_gram;
  lat.K = s.K;
  lat.validate();
  return lat;
}

static double rat_to_double(const Rat& x) {
  return static_cast<double>(x.numerator()) / static_cast<double>(x.denominator());
}

// Largest integer k with k <= a + sqrt(q); q >= 0. The float guess is
// corrected by exact rational comparisons, so the result is exact.
static long long floor_plus_sqrt(const Rat& a, const Rat& q) {
  double guess = rat_to_double(a) + std::sqrt(std::max(0.0, rat_to_double(q)));
  long long k = static_cast<long long>(std::floor(guess));
  auto ok = [&](long long v) {
    const Rat diff = Rat(v) - a;
    return diff <= Rat(0) || diff * diff <= q;
  };
  while (ok(k + 1)) ++k;
  while (!ok(k)) --k;
  return k;
}

// Smallest integer k with k >= a - sqrt(q); q >= 0.
static long long ceil_minus_sqrt(const Rat& a, const Rat& q) {
  double guess = rat_to_double(a) - std::sqrt(std::max(0.0, rat_to_double(q)));
  long long k = static_cast<long long>(std::ceil(guess));
  auto ok = [&](long long v) {
    const Rat diff = a - Rat(v);
    return diff <= Rat(0) || diff * diff <= q;
  };
  while (ok(k - 1)) --k;
  while (!ok(k)) ++k;
  return k;
}

std::vector<Vec> enumerate_ellipsoid(const Mat& n, const Vec& offset, const Rat& qmax) {
  const std::size_t r = n.size();
  for (auto& row : n)
    if (row.size() != r) throw std::invalid_argument("ellipsoid: matrix not square");
  if (offset.size() != r) throw std::invalid_argument("ellipsoid: offset has wrong length");
  std::vector<Vec> out;
  if (qmax < Rat(0)) return out;

  // Decompose Q(x) = sum_i d[i] * (x_i + sum_{j>i} u[i][j] x_j)^2.
  Mat a = n;
  std::vector<Rat> d(r);
  Mat u(r, Vec(r, Rat(0)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j)
      if (a[i][j] != a[j][i]) throw std::invalid_argument("ellipsoid: matrix not symmetric");
    d[i] = a[i][i];
    if (d[i] <= Rat(0)) throw std::invalid_argument("ellipsoid: matrix not positive definite");
    for (std::size_t j = i + 1; j < r; ++j) u[i][j] = a[i][j] / d[i];
    for (std::size_t j = i + 1; j < r; ++j)
      for (std::size_t k = i + 1; k < r; ++k) a[j][k] -= u[i][j] * a[i][k];
  }

  Vec x(r, Rat(0));
  auto rec = [&](auto&& self, std::size_t lvl, const Rat& budget) -> void {
    const std::size_t i = lvl - 1;
    Rat shift = 0;
    for (std::size_t j = i + 1; j < r; ++j) shift += u[i][j] * x[j];
    const Rat center = -offset[i] - shift;
    const Rat q = budget / d[i];
    const long long lo = ceil_minus_sqrt(center, q);
    const long long hi = floor_plus_sqrt(center, q);
    for (long long m = lo; m <= hi; ++m) {
      x[i] = offset[i] + Rat(m);
      const Rat t = x[i] + shift;
      const Rat rem = budget - d[i] * t * t;
      if (rem < Rat(0)) continue;
      if (i == 0)
        out.push_back(x);
      else
        self(self, i, rem);
    }
  };
  rec(rec, r, qmax);
  return out;
}

// Generator of the value group { lambda.a : lambda in Z^n }; zero only when
// a is degenerate for the pairing. Defined before analyze_targets, which uses
// it to decide whether a pairing can vanish on the coset.
static Rat pairing_step(const LatticeSpec& lat, const Vec& a) {
  Rat g(0);
  const std::size_t n = lat.gram.size();
  for (std::size_t i = 0; i < n; ++i) {
    Rat p = 0;
    for (std::size_t j = 0; j < n; ++j) p += lat.gram[i][j] * a[j];
    g = rat_gcd(g, p);
  }
  return g;
}

static bool grid_contains_zero(const Rat& off, const Rat& step) {
  if (step == Rat(0)) return off == Rat(0);
  return rat_is_int(off / step);
}

// Minimal positive element of off + step*Z; step > 0.
static Rat grid_min_positive(const Rat& off, const Rat& step) {
  const Rat m = off - step * Rat(rat_floor(off / step));
  return m == Rat(0) ? step : m;
}

TargetPair analyze_targets(const LatticeSpec& lat, const Vec& c, const Vec& f, const Vec& g) {
  TargetPair tp;
  tp.f = f;
  tp.g = g;
  tp.ff = lat.dot(f, f);
  tp.gg = lat.dot(g, g);
  tp.fg = lat.dot(f, g);
  tp.cf = lat.dot(c, f);
  tp.cg = lat.dot(c, g);
  tp.delta = tp.fg * tp.fg - tp.ff * tp.gg;

  // xi.f ranges over cf/2 + step*Z on the coset; strict means 0 is missed.
  tp.strict_f = !grid_contains_zero(tp.cf / 2, pairing_step(lat, f));
  tp.strict_g = !grid_contains_zero(tp.cg / 2, pairing_step(lat, g));

  if (tp.fg <= Rat(0))
    throw DomainError(ErrCode::DegeneratePair,
                      "targets must pair positively, got f.g = " + rat_to_string(tp.fg));
  const bool branch_pos = tp.ff > Rat(0) && tp.gg > Rat(0);
  const bool branch_null = tp.ff >= Rat(0) && tp.gg >= Rat(0) && tp.strict_f && tp.strict_g;
  if (!branch_pos && !branch_null) {
    std::string detail = "f^2 = " + rat_to_string(tp.ff) + ", g^2 = " + rat_to_string(tp.gg);
    if (tp.ff >= Rat(0) && tp.gg >= Rat(0))
      detail += "; a null target needs coset pairings bounded away from zero, got c.f = " +
                rat_to_string(tp.cf) + ", c.g = " + rat_to_string(tp.cg);
    throw DomainError(ErrCode::DegeneratePair, detail);
  }
  return tp;
}

// Upper bounds for |xi.f| and |xi.g| over the opposite-sign regions with
// -xi^2 <= hi, as rationals. Requires analyze_targets to have passed and
// delta > 0.
struct RegionBounds {
  Rat smax, rmax;
};

static RegionBounds opposite_sign_bounds(const LatticeSpec& lat, const TargetPair& tp,
                                         const Rat& hi) {
  const Rat stepf = pairing_step(lat, tp.f);
  const Rat stepg = pairing_step(lat, tp.g);
  const Rat offf = tp.cf / 2;
  const Rat offg = tp.cg / 2;

  // On the region where the named pairing keeps a strict sign its magnitude
  // is at least the grid quantum, which turns the cross term of
  // -xi^2 >= (g^2 s^2 - 2 f.g s r + f^2 r^2)/delta into a bound for the
  // other pairing. The square terms give the direct bound when available.
  auto side_bound = [&](const Rat& other_sq, const Rat& off, const Rat& step, bool strict_ok) {
    bool have = false;
    Rat best = 0;
    if (other_sq > Rat(0)) {
      best = Rat(rat_sqrt_ceil(hi * tp.delta / other_sq));
      have = true;
    }
    if (strict_ok && step > Rat(0)) {
      const Rat cross = hi * tp.delta / (2 * tp.fg * grid_min_positive(off, step));
      if (!have || cross < best) best = cross;
      have = true;
    }
    if (!have) throw std::logic_error("unbounded opposite-sign region");
    return best;
  };

  // |s| bound: region {s <= 0 < r} has r >= min positive of the g-grid;
  // region {s > 0 >= r} has -r >= that of the negated g-grid only when the
  // g-parity is strict (otherwise r = 0 is allowed and only g^2 > 0 helps).
  const Rat s1 = side_bound(tp.gg, offg, stepg, true);
  const Rat s2 = side_bound(tp.gg, -offg, stepg, tp.strict_g);
  const Rat r1 = side_bound(tp.ff, -offf, stepf, tp.strict_f);
  const Rat r2 = side_bound(tp.ff, offf, stepf, true);
  RegionBounds rb;
  rb.smax = std::max(s1, s2);
  rb.rmax = std::max(r1, r2);
  return rb;
}

// Positive definite majorant attached to p with p^2 > 0:
// Q(xi) = -xi^2 + 2 (xi.p)^2 / p^2.
static Mat majorant_matrix(const LatticeSpec& lat, const Vec& p, const Rat& pp) {
  const std::size_t n = lat.gram.size();
  Vec mp(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mp[i] += lat.gram[i][j] * p[j];
  Mat out(n, Vec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = -lat.gram[i][j] + 2 * mp[i] * mp[j] / pp;
  return out;
}

static Vec half_vector(const Vec& c) {
  Vec out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] / 2;
  return out;
}

static std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_to_string(v[i]);
  }
  return s + ")";
}

// Candidates xi in offset + Z^n with -xi^2 <= hi lying in the closed
// opposite-sign regions of (f, g). The returned list is a superset filter
// base: every point satisfies the ellipsoid bound, callers re-check signs.
static std::vector<Vec> opposite_sign_candidates(const LatticeSpec& lat, const TargetPair& tp,
                                                 const Vec& offset, const Rat& hi) {
  if (hi < Rat(0)) return {};
  if (tp.delta == Rat(0)) return {};  // proportional targets: the regions are empty
  const RegionBounds rb = opposite_sign_bounds(lat, tp, hi);
  Vec p(tp.f.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = tp.f[i] + tp.g[i];
  const Rat pp = tp.ff + 2 * tp.fg + tp.gg;
  const Rat bp = rb.smax + rb.rmax;
  const Rat qmax = hi + 2 * bp * bp / pp;
  return enumerate_ellipsoid(majorant_matrix(lat, p, pp), offset, qmax);
}

std::vector<SupportPoint> theta_support(const LatticeSpec& lat, const Vec& c, const Vec& f,
                                        const Vec& g, const Rat& norm_max, const Vec* shift) {
  lat.validate();
  const std::size_t n = lat.gram.size();
  if (c.size() != n) throw std::invalid_argument("support: coset vector has wrong length");
  const TargetPair tp = analyze_targets(lat, c, f, g);

  Rat hi = norm_max;
  Vec offset = half_vector(c);
  if (shift != nullptr) {
    if (shift->size() != n) throw std::invalid_argument("support: shift has wrong length");
    if (!(tp.ff > Rat(0) && tp.gg > Rat(0)))
      throw DomainError(ErrCode::DegeneratePair,
                        "shifted sums need targets of positive square, got f^2 = " +
                            rat_to_string(tp.ff) + ", g^2 = " + rat_to_string(tp.gg));
    if (tp.delta == Rat(0)) return {};
    // The weight is evaluated at eta = xi - v, which runs over the original
    // coset. On the weight support -eta^2 >= (g^2 a^2 + f^2 b^2)/delta with
    // a = eta.f, b = eta.g, and |eta.v| <= c3 sqrt(-eta^2) for a constant c3
    // from the decomposition of v along span(f, g) and its complement. Then
    // -xi^2 <= hi turns into t^2 <= K1 + K2 t for t = sqrt(-eta^2).
    const Vec& v = *shift;
    const Rat vf = lat.dot(v, f);
    const Rat vg = lat.dot(v, g);
    const Rat vv = lat.dot(v, v);
    // span(f, g) component of v: alpha f + beta g with the same pairings
    const Rat alpha = (tp.gg * vf - tp.fg * vg) / (-tp.delta);
    const Rat beta = (tp.ff * vg - tp.fg * vf) / (-tp.delta);
    Vec vperp(n);
    for (std::size_t i = 0; i < n; ++i) vperp[i] = v[i] - alpha * f[i] - beta * g[i];
    const Rat c1 = -lat.dot(vperp, vperp);  // >= 0: the complement is negative definite
    // the span component of eta.v is alpha*(eta.f) + beta*(eta.g), and the
    // region gives |eta.f| <= sqrt(-eta^2) sqrt(delta/g^2) and symmetrically
    const Rat c2 = Rat(rat_sqrt_ceil(tp.delta / tp.gg)) * rat_abs(alpha) +
                   Rat(rat_sqrt_ceil(tp.delta / tp.ff)) * rat_abs(beta);
    const Rat c3 = c2 + Rat(rat_sqrt_ceil(c1));
    const Rat k1 = norm_max + vv;
    const Rat k2 = 2 * c3;
    // t <= (k2 + sqrt(k2^2 + 4 k1))/2 when k2^2 + 4 k1 >= 0; otherwise empty
    const Rat disc = k2 * k2 + 4 * k1;
    if (disc < Rat(0)) return {};
    const Rat tmax = (k2 + Rat(rat_sqrt_ceil(disc))) / 2;
    hi = tmax * tmax;
  }

  std::vector<Vec> cand = opposite_sign_candidates(lat, tp, offset, hi);

  std::vector<SupportPoint> out;
  for (auto& eta : cand) {
    const Rat pf = lat.dot(eta, f);
    const Rat pg = lat.dot(eta, g);
    // mu(-pf) - mu(-pg) with mu(t) = 1 iff t >= 0
    const int mf = (-pf >= Rat(0)) ? 1 : 0;
    const int mg = (-pg >= Rat(0)) ? 1 : 0;
    const int w = mf - mg;
    if (w == 0) continue;
    if (pf == Rat(0) || pg == Rat(0))
      throw DomainError(ErrCode::BoundaryContact,
                        "weighted point " + vec_to_string(eta) + " pairs to zero with a target");
    SupportPoint sp;
    sp.weight = w;
    sp.pf = pf;
    sp.pg = pg;
    if (shift != nullptr) {
      Vec xi(n);
      for (std::size_t i = 0; i < n; ++i) xi[i] = eta[i] + (*shift)[i];
      sp.norm = -lat.dot(xi, xi);
      if (sp.norm > norm_max) continue;
      sp.xi = std::move(xi);
    } else {
      sp.norm = -lat.dot(eta, eta);
      if (sp.norm > norm_max) continue;
      sp.xi = eta;
    }
    out.push_back(std::move(sp));
  }
  std::sort(out.begin(), out.end(), [](const SupportPoint& a, const SupportPoint& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.xi < b.xi;
  });
  return out;
}

// Existence scan: some xi in c/2 + Z^n with xi.a = 0 and 0 < -xi^2 <= d.
static bool zero_pairing_candidate(const LatticeSpec& lat, const Vec& c, const Vec& a,
                                   const Rat& aa, const Rat& d, Vec* found) {
  const Rat step = pairing_step(lat, a);
  const Rat off = lat.dot(c, a) / 2;
  if (!grid_contains_zero(off, step)) return false;
  if (aa <= Rat(0)) {
    // With a^2 = 0 in rank 2 the orthogonal complement is the span of a
    // itself, where -xi^2 = 0 never lands in (0, d].
    if (lat.rank() == 2) return false;
    throw std::logic_error("on-wall scan needs a positive-square target in rank > 2");
  }
  // On the hyperplane xi.a = 0 the majorant of a equals -xi^2, so the scan
  // radius d is exact.
  const auto pts = enumerate_ellipsoid(majorant_matrix(lat, a, aa), half_vector(c), d);
  for (auto& xi : pts) {
    if (lat.dot(xi, a) != Rat(0)) continue;
    const Rat norm = -lat.dot(xi, xi);
    if (norm > Rat(0) && norm <= d) {
      if (found != nullptr) *found = xi;
      return true;
    }
  }
  return false;
}

WallSet enumerate_walls(const LatticeSpec& lat, const Vec& c, const Rat& d, const Vec& h,
                        const Vec& l, const std::vector<Vec>& extra_nef) {
  lat.validate();
  const std::size_t n = lat.gram.size();
  if (c.size() != n) throw std::invalid_argument("walls: coset vector has wrong length");
  const Rat cc = lat.dot(c, c);
  if (!rat_is_int(d + cc / 4))
    throw DomainError(ErrCode::ExponentOffGrid,
                      "d + c^2/4 = " + rat_to_string(d + cc / 4) + " is not an integer");
  const TargetPair tp = analyze_targets(lat, c, h, l);

  WallSet ws;
  if (d <= Rat(0)) return ws;

  Vec found;
  if (zero_pairing_candidate(lat, c, h, tp.ff, d, &found))
    throw DomainError(ErrCode::OnWall,
                      "candidate " + vec_to_string(found) + " pairs to zero with h");
  if (zero_pairing_candidate(lat, c, l, tp.gg, d, &found))
    throw DomainError(ErrCode::OnWall,
                      "candidate " + vec_to_string(found) + " pairs to zero with l");

  std::vector<Vec> nef = {h, l};
  {
    Vec sum(n);
    for (std::size_t i = 0; i < n; ++i) sum[i] = h[i] + l[i];
    nef.push_back(std::move(sum));
  }
  for (auto& a : extra_nef) nef.push_back(a);

  const std::vector<Vec> cand = opposite_sign_candidates(lat, tp, half_vector(c), d);
  for (auto& xi : cand) {
    const Rat xih = lat.dot(xi, h);
    const Rat xil = lat.dot(xi, l);
    if (!(xil > Rat(0) && xih < Rat(0))) continue;
    const Rat norm = -lat.dot(xi, xi);
    if (!(norm > Rat(0) && norm <= d)) continue;
    WallClass w;
    w.xi = xi;
    w.norm = norm;
    w.xih = xih;
    w.xil = xil;
    w.xik = lat.dot(xi, lat.K);
    w.good_proved = false;
    Vec t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = 2 * xi[i] + lat.K[i];
    for (auto& a : nef) {
      if (lat.dot(t, a) < Rat(0)) {
        w.good_proved = true;
        break;
      }
    }
    if (!w.good_proved) ws.all_good_proved = false;
    ws.walls.push_back(std::move(w));
  }
  std::sort(ws.walls.begin(), ws.walls.end(), [](const WallClass& a, const WallClass& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.xi < b.xi;
  });
  return ws;
}

}  // namespace motivic
