#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "motivic/lpoly.hpp"

namespace motivic {

// Power series in finitely many commuting variables s_1..s_k, truncated by
// total degree (inclusive cap), with rational Hodge-pair coefficients.
struct ColorSeries {
  int nvars = 0;
  long long cap = 0;
  std::map<std::vector<std::uint16_t>, LPolyQ> terms;

  ColorSeries() = default;
  ColorSeries(int nvars_, long long cap_) : nvars(nvars_), cap(cap_) {}

  static long long total_degree(const std::vector<std::uint16_t>& m);

  static ColorSeries constant(int nvars, long long cap, const LPolyQ& c);
  static ColorSeries one(int nvars, long long cap) {
    return constant(nvars, cap, LPolyQ::one());
  }

  void add_term(const std::vector<std::uint16_t>& m, const LPolyQ& c);
  LPolyQ coeff(const std::vector<std::uint16_t>& m) const;
  bool is_zero() const { return terms.empty(); }
  long long min_degree() const;  // callers check is_zero() first

  ColorSeries operator+(const ColorSeries& o) const;
  ColorSeries operator-(const ColorSeries& o) const;
  ColorSeries operator*(const ColorSeries& o) const;
  ColorSeries scaled(const LPolyQ& c) const;
  ColorSeries adams(long long k) const;  // s_j -> s_j^k plus coefficient Adams
};

ColorSeries color_exp(const ColorSeries& f);   // needs strictly positive support
ColorSeries color_log(const ColorSeries& g);   // needs constant term exactly 1
ColorSeries color_pleth_exp(const ColorSeries& f);
ColorSeries color_pleth_log(const ColorSeries& g);

// Classes of configurations of pairwise distinct points carrying colors:
// config_class({m_1,..,m_k}) is the class of configurations with m_j
// unordered points of color j, all points distinct, colors labelled.
// Extracted from the multivariate series PE[e(S) PL(1 + s_1 + .. + s_k)];
// the value depends only on the multiset {m_j}.
class ColoredEngine {
 public:
  ColoredEngine(const LPoly& surface_class, long long max_points);

  LPoly config_class(std::vector<long long> mults) const;
  long long max_points() const { return cap_; }

 private:
  long long cap_;
  ColorSeries pe_;
};

}  // namespace motivic
