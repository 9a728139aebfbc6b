#include "motivic/geom.hpp"

#include <json.hpp>

#include <cctype>
#include <stdexcept>
#include <utility>

namespace motivic {

using json = nlohmann::ordered_json;

Signature quadratic_signature(Mat a) {
  const std::size_t n = a.size();
  for (auto& row : a)
    if (row.size() != n) throw std::invalid_argument("signature: matrix not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a[i][j] != a[j][i]) throw std::invalid_argument("signature: matrix not symmetric");

  Signature sig;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] == 0) {
      // Prefer swapping in a nonzero diagonal entry.
      std::size_t j = i + 1;
      while (j < n && a[j][j] == 0) ++j;
      if (j < n) {
        std::swap(a[i], a[j]);
        for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
      } else {
        // All remaining diagonal entries vanish; fold a nonzero off-diagonal
        // entry onto the diagonal. a[i][i] becomes 2 a[i][j] != 0.
        std::size_t c = i + 1;
        while (c < n && a[i][c] == 0) ++c;
        if (c == n) {
          ++sig.zero;
          continue;
        }
        for (std::size_t r = 0; r < n; ++r) a[i][r] += a[c][r];
        for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][c];
      }
    }
    const Rat piv = a[i][i];
    if (piv > 0)
      ++sig.pos;
    else
      ++sig.neg;
    for (std::size_t k = i + 1; k < n; ++k) {
      if (a[i][k] == 0) continue;
      const Rat f = a[i][k] / piv;
      for (std::size_t r = 0; r < n; ++r) a[k][r] -= f * a[i][r];
      for (std::size_t r = 0; r < n; ++r) a[r][k] -= f * a[r][i];
    }
  }
  return sig;
}

Rat pair_with(const Mat& gram, const Vec& a, const Vec& b) {
  const std::size_t n = gram.size();
  if (a.size() != n || b.size() != n)
    throw std::invalid_argument("pair: vector size does not match lattice rank");
  Rat s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    Rat row = 0;
    for (std::size_t j = 0; j < n; ++j) row += gram[i][j] * b[j];
    s += a[i] * row;
  }
  return s;
}

long long SurfaceData::euler() const {
  long long e = 0;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) e += ((p + q) % 2 == 0 ? 1 : -1) * hodge[p][q];
  return e;
}

LPoly SurfaceData::e_class() const {
  LPoly out;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      if (hodge[p][q] == 0) continue;
      mpz_class c = mpz_of(hodge[p][q]);
      if ((p + q) % 2 != 0) c = -c;
      out.add_term(Rat(p), Rat(q), c);
    }
  return out;
}

LPoly SurfaceData::pic0_class() const {
  const LPoly u = LPoly::mono(Rat(1), Rat(0), 1);
  const LPoly v = LPoly::mono(Rat(0), Rat(1), 1);
  LPoly out = LPoly::one();
  const LPoly fu = LPoly::one() - u;
  const LPoly fv = LPoly::one() - v;
  for (long long i = 0; i < h01(); ++i) out = out * fu;
  for (long long i = 0; i < h01(); ++i) out = out * fv;
  return out;
}

void SurfaceData::validate() const {
  if (name.empty()) throw std::invalid_argument("surface: empty name");
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      if (hodge[p][q] < 0) throw std::invalid_argument("surface: negative hodge number");
      if (hodge[p][q] != hodge[q][p])
        throw std::invalid_argument("surface: hodge numbers not symmetric");
      if (hodge[p][q] != hodge[2 - p][2 - q])
        throw std::invalid_argument("surface: hodge numbers violate duality");
    }
  if (hodge[0][0] != 1 || hodge[2][2] != 1)
    throw std::invalid_argument("surface: h00 and h22 must be 1");
  const std::size_t n = ns_gram.size();
  if (n == 0) throw std::invalid_argument("surface: empty intersection form");
  for (auto& row : ns_gram) {
    if (row.size() != n) throw std::invalid_argument("surface: intersection form not square");
    for (auto& x : row)
      if (x.denominator() != 1)
        throw std::invalid_argument("surface: intersection form must be integral");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (ns_gram[i][j] != ns_gram[j][i])
        throw std::invalid_argument("surface: intersection form not symmetric");
  if (static_cast<long long>(n) > hodge[1][1])
    throw std::invalid_argument("surface: lattice rank exceeds h11");
  const Signature sig = quadratic_signature(ns_gram);
  if (sig.pos != 1 || sig.zero != 0 || sig.neg != static_cast<int>(n) - 1)
    throw std::invalid_argument("surface: intersection form must have signature (1, rank-1)");
  if (K.size() != n) throw std::invalid_argument("surface: canonical class has wrong length");
  for (auto& x : K)
    if (x.denominator() != 1)
      throw std::invalid_argument("surface: canonical class must be integral");
}

static json rat_vec_to_json(const Vec& v) {
  json a = json::array();
  for (auto& x : v) a.push_back(rat_to_string(x));
  return a;
}

static json surface_body(const SurfaceData& s) {
  json j;
  j["hodge"] = json::array();
  for (int p = 0; p < 3; ++p) {
    json row = json::array();
    for (int q = 0; q < 3; ++q) row.push_back(s.hodge[p][q]);
    j["hodge"].push_back(row);
  }
  j["ns_gram"] = json::array();
  for (auto& row : s.ns_gram) j["ns_gram"].push_back(rat_vec_to_json(row));
  j["K"] = rat_vec_to_json(s.K);
  return j;
}

std::string SurfaceData::fingerprint() const { return surface_body(*this).dump(); }

std::string surface_to_json_text(const SurfaceData& s) {
  json j;
  j["name"] = s.name;
  json body = surface_body(s);
  j["hodge"] = body["hodge"];
  j["ns_gram"] = body["ns_gram"];
  j["K"] = body["K"];
  return j.dump();
}

static Rat rat_from_json(const json& x) {
  if (x.is_number_integer()) return Rat(x.get<long long>());
  if (x.is_string()) return parse_rat(x.get<std::string>());
  throw std::invalid_argument("expected integer or rational string");
}

SurfaceData surface_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("surface json: ") + e.what());
  }
  SurfaceData s;
  try {
    s.name = j.at("name").get<std::string>();
    const json& h = j.at("hodge");
    if (!h.is_array() || h.size() != 3) throw std::invalid_argument("hodge must be 3x3");
    for (int p = 0; p < 3; ++p) {
      if (!h[p].is_array() || h[p].size() != 3)
        throw std::invalid_argument("hodge must be 3x3");
      for (int q = 0; q < 3; ++q) s.hodge[p][q] = h[p][q].get<long long>();
    }
    for (auto& row : j.at("ns_gram")) {
      Vec r;
      for (auto& x : row) r.push_back(rat_from_json(x));
      s.ns_gram.push_back(std::move(r));
    }
    for (auto& x : j.at("K")) s.K.push_back(rat_from_json(x));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("surface json: ") + e.what());
  }
  s.validate();
  return s;
}

static SurfaceData ruled_surface(long long g, const std::string& name) {
  SurfaceData s;
  s.name = name;
  s.hodge = {{{1, g, 0}, {g, 2, g}, {0, g, 1}}};
  s.ns_gram = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  s.K = {Rat(-2), Rat(2 * g - 2)};
  return s;
}

SurfaceData surface_preset(const std::string& name) {
  if (name == "p2") {
    SurfaceData s;
    s.name = "p2";
    s.hodge = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    s.ns_gram = {{Rat(1)}};
    s.K = {Rat(-3)};
    s.validate();
    return s;
  }
  if (name == "p1xp1") {
    SurfaceData s = ruled_surface(0, "p1xp1");
    s.validate();
    return s;
  }
  if (name == "k3") {
    SurfaceData s;
    s.name = "k3";
    s.hodge = {{{1, 0, 1}, {0, 20, 0}, {1, 0, 1}}};
    s.ns_gram = {{Rat(2)}};
    s.K = {Rat(0)};
    s.validate();
    return s;
  }
  if (name == "abelian") {
    SurfaceData s;
    s.name = "abelian";
    s.hodge = {{{1, 2, 1}, {2, 4, 2}, {1, 2, 1}}};
    s.ns_gram = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    s.K = {Rat(0), Rat(0)};
    s.validate();
    return s;
  }
  if (name == "elliptic-ruled") {
    // Ruled over an elliptic curve, basis (section, fiber) with section^2 = 1.
    SurfaceData s;
    s.name = "elliptic-ruled";
    s.hodge = {{{1, 1, 0}, {1, 2, 1}, {0, 1, 1}}};
    s.ns_gram = {{Rat(1), Rat(1)}, {Rat(1), Rat(0)}};
    s.K = {Rat(-2), Rat(1)};
    s.validate();
    return s;
  }
  if (name.rfind("ruled:", 0) == 0) {
    const std::string rest = name.substr(6);
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("surface preset: bad genus in " + name);
    SurfaceData s = ruled_surface(std::stoll(rest), name);
    s.validate();
    return s;
  }
  if (name == "f1" || name.rfind("blowup:", 0) == 0) {
    const std::string base_name = name == "f1" ? "p2" : name.substr(7);
    SurfaceData s = surface_preset(base_name);
    s.name = name;
    s.hodge[1][1] += 1;
    const std::size_t n = s.ns_gram.size();
    for (auto& row : s.ns_gram) row.push_back(Rat(0));
    Vec last(n + 1, Rat(0));
    last[n] = Rat(-1);
    s.ns_gram.push_back(std::move(last));
    s.K.push_back(Rat(1));  // exceptional curve enters the canonical class once
    s.validate();
    return s;
  }
  throw std::invalid_argument("unknown surface preset: " + name);
}

std::vector<std::string> surface_preset_names() {
  return {"p2",      "p1xp1",   "f1",           "k3",
          "abelian", "ruled:1", "elliptic-ruled", "blowup:<base>", "ruled:<g>"};
}

LPoly CurveData::e_class() const {
  LPoly out = LPoly::one();
  out.add_term(Rat(1), Rat(0), -mpz_of(genus));
  out.add_term(Rat(0), Rat(1), -mpz_of(genus));
  out.add_term(Rat(1), Rat(1), 1);
  return out;
}

MeasureSpec parse_measure(const std::string& text) {
  MeasureSpec m;
  if (text == "epoly" || text == "e") {
    m.kind = Measure::EPoly;
    return m;
  }
  if (text == "poincare") {
    m.kind = Measure::Poincare;
    return m;
  }
  if (text == "euler") {
    m.kind = Measure::Euler;
    return m;
  }
  if (text.rfind("count:", 0) == 0) {
    const std::string rest = text.substr(6);
    std::size_t i = rest.size() && (rest[0] == '-' || rest[0] == '+') ? 1 : 0;
    if (i == rest.size()) throw std::invalid_argument("measure: bad count parameter");
    for (; i < rest.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(rest[i])))
        throw std::invalid_argument("measure: bad count parameter");
    m.kind = Measure::PointCount;
    m.q = mpz_class(rest);
    return m;
  }
  throw std::invalid_argument("unknown measure: " + text);
}

std::string measure_name(const MeasureSpec& m) {
  switch (m.kind) {
    case Measure::EPoly:
      return "epoly";
    case Measure::Poincare:
      return "poincare";
    case Measure::Euler:
      return "euler";
    case Measure::PointCount:
      return "count:" + m.q.get_str();
  }
  return "?";
}

LPoly measure_transform(const LPoly& x, const MeasureSpec& m) {
  switch (m.kind) {
    case Measure::EPoly:
      return x;
    case Measure::Poincare:
      return x.poincare();
    case Measure::Euler:
      return LPoly::constant(x.eval_ones());
    case Measure::PointCount:
      return LPoly::constant(x.point_count(m.q));
  }
  return x;
}

TSeries measure_transform(const TSeries& x, const MeasureSpec& m) {
  TSeries out;
  out.order = x.order;
  for (auto& [e, c] : x.terms) out.add_term(e, measure_transform(c, m));
  return out;
}

VarStyle measure_style(const LPoly& value, const MeasureSpec& m) {
  switch (m.kind) {
    case Measure::Poincare:
      return VarStyle::Z;
    case Measure::EPoly:
      return value.is_L_polynomial() ? VarStyle::Lefschetz : VarStyle::UV;
    default:
      return VarStyle::Lefschetz;
  }
}

VarStyle measure_style(const TSeries& value, const MeasureSpec& m) {
  if (m.kind == Measure::Poincare) return VarStyle::Z;
  if (m.kind != Measure::EPoly) return VarStyle::Lefschetz;
  for (auto& [e, c] : value.terms)
    if (!c.is_L_polynomial()) return VarStyle::UV;
  return VarStyle::Lefschetz;
}

TSeries sym_power_series(const LPoly& x, long long order) {
  if (order < 0) throw std::invalid_argument("sym_power_series: negative order");
  TSeries seed = TSeries::zero(Rat(order));
  seed.add_term(Rat(1), x);
  return pleth_exp(seed);
}

}  // namespace motivic
