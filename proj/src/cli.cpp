#include "motivic/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "motivic/errors.hpp"
#include "motivic/hilb.hpp"
#include "motivic/lattice.hpp"
#include "motivic/moduli.hpp"
#include "motivic/selftest.hpp"
#include "motivic/theta.hpp"

namespace motivic {

namespace {

using njson = nlohmann::ordered_json;

// Raised when --route both finds the two pipelines disagreeing; maps to
// exit code 1, distinct from validation (2) and domain errors (3).
struct RouteMismatch {
  std::string detail;
};

enum class Fmt { Text, Json, Csv };

Fmt parse_format(const std::string& f) {
  if (f == "text") return Fmt::Text;
  if (f == "json") return Fmt::Json;
  if (f == "csv") return Fmt::Csv;
  throw std::invalid_argument("unknown format: " + f);
}

Vec parse_vec(const std::string& text) {
  Vec v;
  std::string cur;
  auto flush = [&] {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty vector component");
    v.push_back(parse_rat(cur.substr(b, e - b + 1)));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',')
      flush();
    else
      cur += ch;
  }
  flush();
  return v;
}

Partition parse_partition(const std::string& text) {
  const Vec raw = parse_vec(text);
  std::vector<long long> parts;
  for (const Rat& r : raw) {
    if (!rat_is_int(r) || r < Rat(1))
      throw std::invalid_argument("partition parts must be positive integers: " + text);
    parts.push_back(rat_floor(r));
  }
  return Partition(std::move(parts));
}

SurfaceData resolve_surface(const std::string& text) {
  if (!text.empty() && text[0] == '{') return surface_from_json_text(text);
  return surface_preset(text);
}

// Lattice context for walls/theta: exactly one of a surface (whose
// Neron-Severi lattice is taken) or a raw lattice spec.
LatticeSpec resolve_lattice(const std::string& surface, const std::string& lattice) {
  if (!surface.empty() && !lattice.empty())
    throw std::invalid_argument("pass either --surface or --lattice, not both");
  if (!surface.empty()) return lattice_of_surface(resolve_surface(surface));
  if (!lattice.empty()) {
    if (lattice[0] == '{') return lattice_from_json_text(lattice);
    return lattice_preset(lattice);
  }
  throw std::invalid_argument("one of --surface or --lattice is required");
}

void check_dim(const LatticeSpec& lat, const Vec& v, const char* name) {
  if (static_cast<long long>(v.size()) != lat.rank())
    throw std::invalid_argument(std::string(name) + ": expected " + std::to_string(lat.rank()) +
                                " comma-separated coordinates");
}

std::string vec_text(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_to_string(v[i]);
  }
  return s + ")";
}

njson vec_json(const Vec& v) {
  njson arr = njson::array();
  for (const Rat& r : v) arr.push_back(rat_to_string(r));
  return arr;
}

njson lpoly_terms(const LPoly& x) {
  njson arr = njson::array();
  for (const auto& [k, c] : x.terms) {
    njson t;
    t["p"] = rat_to_string(k.first);
    t["q"] = rat_to_string(k.second);
    t["c"] = c.get_str();
    arr.push_back(std::move(t));
  }
  return arr;
}

void csv_class_rows(std::ostringstream& os, const LPoly& x, const std::string& prefix) {
  for (const auto& [k, c] : x.terms)
    os << prefix << rat_to_string(k.first) << ',' << rat_to_string(k.second) << ',' << c.get_str()
       << '\n';
}

void merge_meta(njson& j, const njson& meta) {
  for (const auto& [k, v] : meta.items()) j[k] = v;
}

void emit_class_styled(std::ostringstream& os, Fmt fmt, const char* verb, const LPoly& x,
                       VarStyle style, const njson& meta) {
  if (fmt == Fmt::Text) {
    os << render_lpoly(x, style) << '\n';
  } else if (fmt == Fmt::Json) {
    njson j;
    j["verb"] = verb;
    merge_meta(j, meta);
    j["value"] = render_lpoly(x, style);
    j["terms"] = lpoly_terms(x);
    os << j.dump(2) << '\n';
  } else {
    os << "p,q,c\n";
    csv_class_rows(os, x, "");
  }
}

void emit_class(std::ostringstream& os, Fmt fmt, const char* verb, const MeasureSpec& m,
                const LPoly& raw, njson meta) {
  const LPoly shown = measure_transform(raw, m);
  meta["measure"] = measure_name(m);
  emit_class_styled(os, fmt, verb, shown, measure_style(shown, m), meta);
}

void emit_series_styled(std::ostringstream& os, Fmt fmt, const char* verb, const TSeries& x,
                        VarStyle style, const std::string& var, const njson& meta) {
  if (fmt == Fmt::Text) {
    os << render_tseries(x, style, var) << '\n';
  } else if (fmt == Fmt::Json) {
    njson j;
    j["verb"] = verb;
    merge_meta(j, meta);
    j["order"] = rat_to_string(x.order);
    j["value"] = render_tseries(x, style, var);
    njson arr = njson::array();
    for (const auto& [e, c] : x.terms) {
      njson t;
      t[var] = rat_to_string(e);
      t["value"] = render_lpoly(c, style);
      t["terms"] = lpoly_terms(c);
      arr.push_back(std::move(t));
    }
    j["terms"] = std::move(arr);
    os << j.dump(2) << '\n';
  } else {
    os << var << ",p,q,c\n";
    for (const auto& [e, c] : x.terms) csv_class_rows(os, c, rat_to_string(e) + ",");
  }
}

void emit_series(std::ostringstream& os, Fmt fmt, const char* verb, const MeasureSpec& m,
                 const TSeries& raw, njson meta, const std::string& var = "t") {
  const TSeries shown = measure_transform(raw, m);
  meta["measure"] = measure_name(m);
  emit_series_styled(os, fmt, verb, shown, measure_style(shown, m), var, meta);
}

std::string wall_line(const WallClass& w) {
  return "xi = " + vec_text(w.xi) + "  xi^2 = " + rat_to_string(-w.norm) +
         "  xi.H = " + rat_to_string(w.xih) + "  xi.L = " + rat_to_string(w.xil) +
         "  xi.K = " + rat_to_string(w.xik) + "  " +
         (w.good_proved ? "PROVED-GOOD" : "ASSUMED-GOOD");
}

njson wall_json(const WallClass& w) {
  njson j;
  j["xi"] = vec_json(w.xi);
  j["norm"] = rat_to_string(w.norm);
  j["h"] = rat_to_string(w.xih);
  j["l"] = rat_to_string(w.xil);
  j["k"] = rat_to_string(w.xik);
  j["proved"] = w.good_proved;
  return j;
}

njson walls_json(const WallSet& ws) {
  njson arr = njson::array();
  for (const auto& w : ws.walls) arr.push_back(wall_json(w));
  return arr;
}

// Holds every flag of every subcommand; only the active verb reads from it.
struct Opts {
  std::string surface;
  std::string lattice;
  std::string measure = "epoly";
  std::string format = "text";
  std::string route = "direct";
  std::string method = "direct";
  std::string kind = "jacobi";
  std::string form = "sum";
  std::string mode = "parallel";
  std::string level = "quick";
  std::string order;
  std::string d;
  std::string C, H, L, F, G, xdir, shift, alpha, beta;
  std::vector<std::string> nef;
  long long n = 1;
  long long mu = 1;
  long long nu = 1;
  long long power = 1;
  long long a = 0;
  bool star = false;
};

Rat order_or(const Opts& o, long long dflt) {
  return o.order.empty() ? Rat(dflt) : parse_rat(o.order);
}

std::vector<Vec> parse_nef(const Opts& o) {
  std::vector<Vec> out;
  for (const auto& s : o.nef) out.push_back(parse_vec(s));
  return out;
}

WallRoute parse_single_route(const std::string& r) {
  if (r == "direct") return WallRoute::Direct;
  if (r == "theta") return WallRoute::Theta;
  throw std::invalid_argument("unknown route: " + r);
}

ComputeMode parse_mode(const std::string& m) {
  if (m == "parallel") return ComputeMode::Parallel;
  if (m == "serial") return ComputeMode::Serial;
  throw std::invalid_argument("unknown mode: " + m);
}

SeriesMethod parse_method(const std::string& m) {
  if (m == "direct") return SeriesMethod::Direct;
  if (m == "product") return SeriesMethod::Product;
  throw std::invalid_argument("unknown method: " + m);
}

njson surface_meta(const SurfaceData& s) { return njson::parse(surface_to_json_text(s)); }

njson lattice_meta(const LatticeSpec& lat) { return njson::parse(lattice_to_json_text(lat)); }

void require_nonneg(long long n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

int do_class_verb(const char* verb, const Opts& o, std::ostringstream& out) {
  const Fmt fmt = parse_format(o.format);
  const MeasureSpec m = parse_measure(o.measure);
  require_nonneg(o.n, "--n");
  njson meta;
  LPoly value;
  if (std::string(verb) == "punctual") {
    meta["n"] = o.n;
    value = punctual_class(o.n);
  } else {
    const SurfaceData s = resolve_surface(o.surface.empty() ? "p2" : o.surface);
    meta["surface"] = surface_meta(s);
    meta["n"] = o.n;
    if (std::string(verb) == "hilb")
      value = hilb_class(s, o.n, parse_mode(o.mode));
    else if (std::string(verb) == "incidence")
      value = incidence_class(s, o.n);
    else
      value = mckay_sum(s, o.n);
  }
  emit_class(out, fmt, verb, m, value, std::move(meta));
  return 0;
}

int do_hilb_series(const Opts& o, std::ostringstream& out) {
  const Fmt fmt = parse_format(o.format);
  const MeasureSpec m = parse_measure(o.measure);
  const SurfaceData s = resolve_surface(o.surface.empty() ? "p2" : o.surface);
  const Rat ord = order_or(o, 6);
  if (!rat_is_int(ord) || ord < Rat(0))
    throw std::invalid_argument("--order must be a nonnegative integer");
  njson meta;
  meta["surface"] = surface_meta(s);
  meta["method"] = o.method;
  const TSeries series = hilb_series(s, rat_floor(ord), parse_method(o.method));
  emit_series(out, fmt, "hilb-series", m, series, std::move(meta));
  return 0;
}

int do_strata(const Opts& o, std::ostringstream& out) {
  const Fmt fmt = parse_format(o.format);
  const MeasureSpec m = parse_measure(o.measure);
  const SurfaceData s = resolve_surface(o.surface.empty() ? "p2" : o.surface);
  const Partition beta = parse_partition(o.beta);
  njson meta;
  meta["surface"] = surface_meta(s);
  meta["beta"] = beta.text();
  LPoly value;
  const char* verb = "strata";
  if (!o.alpha.empty()) {
    const Partition alpha = parse_partition(o.alpha);
    meta["alpha"] = alpha.text();
    value = fiber_stratum_class(s, alpha, beta);
  } else {
    value = stratum_class(s, beta);
  }
  emit_class(out, fmt, verb, m, value, std::move(meta));
  return 0;
}

int do_walls(const Opts& o, std::ostringstream& out) {
  const Fmt fmt = parse_format(o.format);
  const LatticeSpec lat = resolve_lattice(o.surface, o.lattice);
  const Vec c = parse_vec(o.C);
  const Vec h = parse_vec(o.H);
  const Vec l = parse_vec(o.L);
  check_dim(lat, c, "--C");
  check_dim(lat, h, "--H");
  check_dim(lat, l, "--L");
  const Rat d = parse_rat(o.d.empty() ? "1" : o.d);
  std::vector<Vec> extra = parse_nef(o);
  for (const auto& v : extra) check_dim(lat, v, "--nef");
  const WallSet ws = enumerate_walls(lat, c, d, h, l, extra);
  if (fmt == Fmt::Text) {
    out << "walls: " << ws.walls.size()
        << (ws.all_good_proved ? "" : "  CONDITIONAL: unproved walls present") << '\n';
    for (const auto& w : ws.walls) out << wall_line(w) << '\n';
  } else if (fmt == Fmt::Json) {
    njson j;
    j["verb"] = "walls";
    j["lattice"] = lattice_meta(lat);
    j["C"] = vec_json(c);
    j["d"] = rat_to_string(d);
    j["H"] = vec_json(h);
    j["L"] = vec_json(l);
    j["count"] = ws.walls.size();
    j["all_proved"] = ws.all_good_proved;
    j["walls"] = walls_json(ws);
    out << j.dump(2) << '\n';
  } else {
    out << "xi,norm,h,l,k,proved\n";
    for (const auto& w : ws.walls) {
      std::string xi;
      for (std::size_t i = 0; i < w.xi.size(); ++i) {
        if (i) xi += ' ';
        xi += rat_to_string(w.xi[i]);
      }
      out << xi << ',' << rat_to_string(w.norm) << ',' << rat_to_string(w.xih) << ','
          << rat_to_string(w.xil) << ',' << rat_to_string(w.xik) << ','
          << (w.good_proved ? 1 : 0) << '\n';
    }
  }
  return 0;
}

int do_theta(const Opts& o, std::ostringstream& out) {
  const Fmt fmt = parse_format(o.format);
  njson meta;
  meta["kind"] = o.kind;
  QYSeries series;
  if (o.kind == "jacobi") {
    const Rat ord = order_or(o, 4);
    meta["mu"] = o.mu;
    meta["nu"] = o.nu;
    meta["form"] = o.form;
    if (o.form == "sum")
      series = jacobi_theta_sum(o.mu, o.nu, ord);
    else if (o.form == "product")
      series = jacobi_theta_product(o.mu, o.nu, ord);
    else
      throw std::invalid_argument("unknown form: " + o.form);
  } else if (o.kind == "eta") {
    const Rat ord = order_or(o, 4);
    meta["power"] = o.power;
    series = eta_power_series(o.power, ord);
  } else if (o.kind == "indefinite") {
    const Rat ord = order_or(o, 3);
    const LatticeSpec lat = resolve_lattice(o.surface, o.lattice);
    if (o.C.empty() || o.F.empty() || o.G.empty())
      throw std::invalid_argument("indefinite theta needs --C, --F and --G");
    const Vec c = parse_vec(o.C);
    const Vec f = parse_vec(o.F);
    const Vec g = parse_vec(o.G);
    check_dim(lat, c, "--C");
    check_dim(lat, f, "--F");
    check_dim(lat, g, "--G");
    Vec xdir = o.xdir.empty() ? lat.K : parse_vec(o.xdir);
    check_dim(lat, xdir, "--xdir");
    meta["lattice"] = lattice_meta(lat);
    meta["C"] = vec_json(c);
    meta["F"] = vec_json(f);
    meta["G"] = vec_json(g);
    meta["xdir"] = vec_json(xdir);
    if (!o.shift.empty()) {
      const Vec v = parse_vec(o.shift);
      check_dim(lat, v, "--shift");
      meta["shift"] = vec_json(v);
      series = indefinite_theta(lat, c, f, g, xdir, ord, &v);
    } else {
      series = indefinite_theta(lat, c, f, g, xdir, ord);
    }
  } else {
    throw std::invalid_argument("unknown kind: " + o.kind);
  }
  meta["star"] = o.star;
  if (o.star) {
    emit_series_styled(out, fmt, "theta", star_specialize(series), VarStyle::Lefschetz, "t", meta);
  } else {
    emit_series_styled(out, fmt, "theta", series, VarStyle::Y, "q", meta);
  }
  return 0;
}

int do_wallcross(const Opts& o, std::ostringstream& out) {
  const Fmt fmt = parse_format(o.format);
  const MeasureSpec m = parse_measure(o.measure);
  const SurfaceData s = resolve_surface(o.surface.empty() ? "p2" : o.surface);
  const LatticeSpec lat = lattice_of_surface(s);
  if (o.C.empty() || o.H.empty() || o.L.empty())
    throw std::invalid_argument("wallcross needs --C, --H and --L");
  const Vec c = parse_vec(o.C);
  const Vec h = parse_vec(o.H);
  const Vec l = parse_vec(o.L);
  check_dim(lat, c, "--C");
  check_dim(lat, h, "--H");
  check_dim(lat, l, "--L");
  const Rat d = parse_rat(o.d.empty() ? "1" : o.d);
  std::vector<Vec> extra = parse_nef(o);
  for (const auto& v : extra) check_dim(lat, v, "--nef");

  WallcrossResult r;
  if (o.route == "both") {
    const WallcrossResult a = wallcross_diff(s, c, d, h, l, WallRoute::Direct, extra);
    const WallcrossResult b = wallcross_diff(s, c, d, h, l, WallRoute::Theta, extra);
    if (a.value != b.value)
      throw RouteMismatch{"direct: " + render_lpoly(a.value, VarStyle::UV) +
                          "  theta: " + render_lpoly(b.value, VarStyle::UV)};
    r = a;
  } else {
    r = wallcross_diff(s, c, d, h, l, parse_single_route(o.route), extra);
  }
  const WallSet ws = enumerate_walls(lat, c, d, h, l, extra);

  njson meta;
  meta["surface"] = surface_meta(s);
  meta["C"] = vec_json(c);
  meta["d"] = rat_to_string(d);
  meta["H"] = vec_json(h);
  meta["L"] = vec_json(l);
  meta["route"] = o.route;
  meta["wall_count"] = r.wall_count;
  meta["conditional"] = !r.all_walls_proved_good;
  meta["walls"] = walls_json(ws);
  if (fmt == Fmt::Text) {
    const LPoly shown = measure_transform(r.value, m);
    out << render_lpoly(shown, measure_style(shown, m)) << '\n';
    for (const auto& w : ws.walls) out << wall_line(w) << '\n';
    if (!r.all_walls_proved_good) out << "CONDITIONAL: unproved walls present\n";
    if (o.route == "both") out << "routes agree\n";
  } else {
    emit_class(out, fmt, "wallcross", m, r.value, std::move(meta));
  }
  return 0;
}

int do_wallcross_series(const Opts& o, std::ostringstream& out) {
  const Fmt fmt = parse_format(o.format);
  const MeasureSpec m = parse_measure(o.measure);
  const SurfaceData s = resolve_surface(o.surface.empty() ? "p2" : o.surface);
  const LatticeSpec lat = lattice_of_surface(s);
  if (o.C.empty() || o.H.empty() || o.L.empty())
    throw std::invalid_argument("wallcross-series needs --C, --H and --L");
  const Vec c = parse_vec(o.C);
  const Vec h = parse_vec(o.H);
  const Vec l = parse_vec(o.L);
  check_dim(lat, c, "--C");
  check_dim(lat, h, "--H");
  check_dim(lat, l, "--L");
  const Rat dmax = order_or(o, 2);

  bool all_proved = true;
  TSeries series;
  if (o.route == "both") {
    bool proved_b = true;
    const TSeries a = wallcross_series(s, c, dmax, h, l, WallRoute::Direct, &all_proved);
    const TSeries b = wallcross_series(s, c, dmax, h, l, WallRoute::Theta, &proved_b);
    if (a != b)
      throw RouteMismatch{"direct: " + render_tseries(a, VarStyle::UV) +
                          "  theta: " + render_tseries(b, VarStyle::UV)};
    series = a;
  } else {
    series = wallcross_series(s, c, dmax, h, l, parse_single_route(o.route), &all_proved);
  }

  njson meta;
  meta["surface"] = surface_meta(s);
  meta["C"] = vec_json(c);
  meta["H"] = vec_json(h);
  meta["L"] = vec_json(l);
  meta["route"] = o.route;
  meta["conditional"] = !all_proved;
  emit_series(out, fmt, "wallcross-series", m, series, std::move(meta));
  if (fmt == Fmt::Text && !all_proved) out << "CONDITIONAL: unproved walls present\n";
  return 0;
}

int do_blowup_ratio(const Opts& o, std::ostringstream& out) {
  const Fmt fmt = parse_format(o.format);
  const MeasureSpec m = parse_measure(o.measure);
  const Rat ord = order_or(o, 4);
  njson meta;
  meta["a"] = o.a;
  emit_series(out, fmt, "blowup-ratio", m, blowup_ratio(o.a, ord), std::move(meta));
  return 0;
}

int do_elliptic(const Opts& o, std::ostringstream& out) {
  const Fmt fmt = parse_format(o.format);
  const MeasureSpec m = parse_measure(o.measure);
  const bool has_d = !o.d.empty();
  const bool has_order = !o.order.empty();
  if (has_d == has_order)
    throw std::invalid_argument("pass exactly one of --d (single class) or --order (product)");
  if (has_order) {
    const Rat ord = parse_rat(o.order);
    if (!rat_is_int(ord) || ord < Rat(0))
      throw std::invalid_argument("--order must be a nonnegative integer");
    njson meta;
    meta["form"] = "product";
    emit_series(out, fmt, "elliptic-moduli", m, elliptic_moduli_product(rat_floor(ord)),
                std::move(meta));
    return 0;
  }
  const Rat d = parse_rat(o.d);
  WallcrossResult r;
  if (o.route == "both") {
    const WallcrossResult a = elliptic_moduli_class(d, WallRoute::Direct);
    const WallcrossResult b = elliptic_moduli_class(d, WallRoute::Theta);
    if (a.value != b.value)
      throw RouteMismatch{"direct: " + render_lpoly(a.value, VarStyle::UV) +
                          "  theta: " + render_lpoly(b.value, VarStyle::UV)};
    r = a;
  } else {
    r = elliptic_moduli_class(d, parse_single_route(o.route));
  }
  njson meta;
  meta["d"] = rat_to_string(d);
  meta["route"] = o.route;
  meta["wall_count"] = r.wall_count;
  meta["conditional"] = !r.all_walls_proved_good;
  emit_class(out, fmt, "elliptic-moduli", m, r.value, std::move(meta));
  if (fmt == Fmt::Text && !r.all_walls_proved_good) out << "CONDITIONAL: unproved walls present\n";
  return 0;
}

int do_selftest(const Opts& o, std::ostringstream& out) {
  const Fmt fmt = parse_format(o.format);
  bool full = false;
  if (o.level == "full")
    full = true;
  else if (o.level != "quick")
    throw std::invalid_argument("unknown level: " + o.level);
  const auto checks = run_selftest(full);
  long long fails = 0;
  for (const auto& c : checks)
    if (!c.pass) ++fails;
  if (fmt == Fmt::Text) {
    for (const auto& c : checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.pass) out << ": " << c.detail;
      out << '\n';
    }
    out << "passed " << (checks.size() - fails) << " of " << checks.size() << '\n';
  } else if (fmt == Fmt::Json) {
    njson j;
    j["verb"] = "selftest";
    j["level"] = o.level;
    njson arr = njson::array();
    for (const auto& c : checks) {
      njson e;
      e["name"] = c.name;
      e["pass"] = c.pass;
      e["detail"] = c.detail;
      arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    j["failures"] = fails;
    out << j.dump(2) << '\n';
  } else {
    out << "name,pass,detail\n";
    for (const auto& c : checks) out << c.name << ',' << (c.pass ? 1 : 0) << ',' << c.detail << '\n';
  }
  return fails == 0 ? 0 : 1;
}

int run_parsed(const std::string& verb, const Opts& o, std::ostringstream& out) {
  if (verb == "hilb" || verb == "punctual" || verb == "incidence" || verb == "mckay")
    return do_class_verb(verb.c_str(), o, out);
  if (verb == "hilb-series") return do_hilb_series(o, out);
  if (verb == "strata") return do_strata(o, out);
  if (verb == "walls") return do_walls(o, out);
  if (verb == "theta") return do_theta(o, out);
  if (verb == "wallcross") return do_wallcross(o, out);
  if (verb == "wallcross-series") return do_wallcross_series(o, out);
  if (verb == "blowup-ratio") return do_blowup_ratio(o, out);
  if (verb == "elliptic-moduli") return do_elliptic(o, out);
  return do_selftest(o, out);
}

void add_format(CLI::App* sub, Opts& o) {
  sub->add_option("--format", o.format, "output format: text, json or csv");
}

void add_measure(CLI::App* sub, Opts& o) {
  sub->add_option("--measure", o.measure, "epoly, poincare, euler or count:<q>");
  add_format(sub, o);
}

void add_surface(CLI::App* sub, Opts& o) {
  sub->add_option("--surface", o.surface, "surface preset name or inline JSON");
}

int run_impl(const std::vector<std::string>& args, std::ostringstream& out,
             std::ostringstream& err) {
  Opts o;
  CLI::App app{"Exact Grothendieck-ring calculator for Hilbert schemes of surface points"};
  app.require_subcommand(1);

  auto* hilb = app.add_subcommand("hilb", "class of the length-n Hilbert scheme");
  add_surface(hilb, o);
  hilb->add_option("--n", o.n, "number of points");
  hilb->add_option("--mode", o.mode, "parallel or serial evaluation");
  add_measure(hilb, o);

  auto* hs = app.add_subcommand("hilb-series", "generating series of Hilbert scheme classes");
  add_surface(hs, o);
  hs->add_option("--order", o.order, "truncation order (default 6)");
  hs->add_option("--method", o.method, "direct or product");
  add_measure(hs, o);

  auto* punc = app.add_subcommand("punctual", "class of the punctual Hilbert scheme");
  punc->add_option("--n", o.n, "length of the punctual subscheme");
  add_measure(punc, o);

  auto* strata = app.add_subcommand("strata", "class of a support-multiplicity stratum");
  add_surface(strata, o);
  strata->add_option("--beta", o.beta, "support multiplicities, e.g. 2,1")->required();
  strata->add_option("--alpha", o.alpha, "optional combined punctual type");
  add_measure(strata, o);

  auto* inc = app.add_subcommand("incidence", "class of the nested incidence variety");
  add_surface(inc, o);
  inc->add_option("--n", o.n, "number of points");
  add_measure(inc, o);

  auto* mckay = app.add_subcommand("mckay", "orbifold sum over the symmetric group");
  add_surface(mckay, o);
  mckay->add_option("--n", o.n, "number of points");
  add_measure(mckay, o);

  auto* walls = app.add_subcommand("walls", "enumerate walls of type (C, d)");
  add_surface(walls, o);
  walls->add_option("--lattice", o.lattice, "lattice preset name or inline JSON");
  walls->add_option("--C", o.C, "determinant class, comma-separated rationals")->required();
  walls->add_option("--d", o.d, "discriminant bound");
  walls->add_option("--H", o.H, "first polarization")->required();
  walls->add_option("--L", o.L, "second polarization")->required();
  walls->add_option("--nef", o.nef, "extra nef witnesses for goodness checks");
  add_format(walls, o);

  auto* theta = app.add_subcommand("theta", "q-expansions of theta and eta series");
  theta->add_option("--kind", o.kind, "jacobi, indefinite or eta");
  theta->add_option("--mu", o.mu, "first characteristic (0 or 1)");
  theta->add_option("--nu", o.nu, "second characteristic (0 or 1)");
  theta->add_option("--form", o.form, "sum or product expansion");
  theta->add_option("--power", o.power, "eta power (kind eta)");
  add_surface(theta, o);
  theta->add_option("--lattice", o.lattice, "lattice preset name or inline JSON");
  theta->add_option("--C", o.C, "coset class");
  theta->add_option("--F", o.F, "first weight target");
  theta->add_option("--G", o.G, "second weight target");
  theta->add_option("--xdir", o.xdir, "pairing direction for y (default: K)");
  theta->add_option("--shift", o.shift, "half-shift vector");
  theta->add_option("--order", o.order, "q truncation order");
  theta->add_flag("--star", o.star, "specialize q -> L^2 t, y -> L");
  add_format(theta, o);

  auto* wc = app.add_subcommand("wallcross", "moduli class difference across walls");
  add_surface(wc, o);
  wc->add_option("--C", o.C, "determinant class")->required();
  wc->add_option("--d", o.d, "discriminant")->required();
  wc->add_option("--H", o.H, "start polarization")->required();
  wc->add_option("--L", o.L, "end polarization")->required();
  wc->add_option("--nef", o.nef, "extra nef witnesses for goodness checks");
  wc->add_option("--route", o.route, "direct, theta or both");
  add_measure(wc, o);

  auto* wcs = app.add_subcommand("wallcross-series", "wall differences over the discriminant grid");
  add_surface(wcs, o);
  wcs->add_option("--C", o.C, "determinant class")->required();
  wcs->add_option("--order", o.order, "largest discriminant (default 2)");
  wcs->add_option("--H", o.H, "start polarization")->required();
  wcs->add_option("--L", o.L, "end polarization")->required();
  wcs->add_option("--route", o.route, "direct, theta or both");
  add_measure(wcs, o);

  auto* br = app.add_subcommand("blowup-ratio", "universal blowup factor of moduli series");
  br->add_option("--a", o.a, "determinant twist along the exceptional curve (0 or 1)");
  br->add_option("--order", o.order, "t truncation order (default 4)");
  add_measure(br, o);

  auto* em = app.add_subcommand("elliptic-moduli", "moduli classes on the elliptic ruled surface");
  em->add_option("--d", o.d, "discriminant in Z + 1/4 or Z + 3/4");
  em->add_option("--order", o.order, "product series order (alternative to --d)");
  em->add_option("--route", o.route, "direct, theta or both");
  add_measure(em, o);

  auto* st = app.add_subcommand("selftest", "run the built-in consistency checks");
  st->add_option("--level", o.level, "quick or full");
  add_format(st, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }
  const std::string verb = app.get_subcommands().front()->get_name();
  return run_parsed(verb, o, out);
}

}  // namespace

CliResult cli_run(const std::vector<std::string>& args) {
  CliResult res;
  std::ostringstream out;
  std::ostringstream err;
  try {
    res.exit_code = run_impl(args, out, err);
  } catch (const RouteMismatch& e) {
    err << "route mismatch: " << e.detail << '\n';
    res.exit_code = 1;
  } catch (const DomainError& e) {
    err << e.what() << '\n';
    res.exit_code = 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    res.exit_code = 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    res.exit_code = 2;
  }
  res.out = out.str();
  res.err = err.str();
  return res;
}

}  // namespace motivic
