#pragma once

#include <array>
#include <string>
#include <vector>

#include "motivic/lpoly.hpp"
#include "motivic/rational.hpp"
#include "motivic/tseries.hpp"

namespace motivic {

using Mat = std::vector<std::vector<Rat>>;
using Vec = std::vector<Rat>;

// (#positive, #negative, #zero) eigenvalue counts of a symmetric rational
// matrix, computed exactly by congruence reduction.
struct Signature {
  int pos = 0;
  int neg = 0;
  int zero = 0;
};
Signature quadratic_signature(Mat a);

Rat pair_with(const Mat& gram, const Vec& a, const Vec& b);

// Smooth projective surface: Hodge numbers, an integral basis of the
// Neron-Severi lattice with its intersection form, and the canonical class
// in that basis.
struct SurfaceData {
  std::string name;
  std::array<std::array<long long, 3>, 3> hodge{};  // hodge[p][q]
  Mat ns_gram;
  Vec K;

  long long h(int p, int q) const { return hodge[p][q]; }
  long long rank() const { return static_cast<long long>(ns_gram.size()); }
  long long h01() const { return hodge[0][1]; }
  long long chi_O() const { return 1 - hodge[0][1] + hodge[0][2]; }
  long long euler() const;

  LPoly e_class() const;     // sum (-1)^{p+q} h^{pq} u^p v^q
  LPoly pic0_class() const;  // (1-u)^{h01} (1-v)^{h01}

  Rat pair(const Vec& a, const Vec& b) const { return pair_with(ns_gram, a, b); }

  // Canonical serialization of the geometric data; equal surfaces (up to
  // the display name) produce equal strings.
  std::string fingerprint() const;

  // Throws std::invalid_argument when the data is not a consistent surface:
  // Hodge symmetry and duality, integral gram/K of matching rank, and
  // intersection form of signature (1, rank-1).
  void validate() const;
};

// Built-in surfaces: "p2", "p1xp1", "ruled:<g>", "blowup:<base>" (recursive),
// "f1" (alias for blowup:p2), "k3", "abelian", "elliptic-ruled".
SurfaceData surface_preset(const std::string& name);
std::vector<std::string> surface_preset_names();

SurfaceData surface_from_json_text(const std::string& text);
std::string surface_to_json_text(const SurfaceData& s);

// Smooth projective curve of genus g; class 1 - g u - g v + uv.
struct CurveData {
  long long genus = 0;
  LPoly e_class() const;
};

// Polynomial measures on classes. Every measure is a ring map; the transform
// returns its value re-embedded as a class so series code stays uniform.
//   epoly:    identity
//   poincare: u = v = -z, stored with z^k at the half-diagonal (k/2, k/2)
//   euler:    sum of coefficients
//   count:q   L -> q, defined only for polynomials in L
enum class Measure { EPoly, Poincare, Euler, PointCount };

struct MeasureSpec {
  Measure kind = Measure::EPoly;
  mpz_class q = 0;
};

MeasureSpec parse_measure(const std::string& text);
std::string measure_name(const MeasureSpec& m);

LPoly measure_transform(const LPoly& x, const MeasureSpec& m);
TSeries measure_transform(const TSeries& x, const MeasureSpec& m);

// Variable style a measured value renders in. EPoly picks Lefschetz powers
// when the class is a polynomial in L and falls back to u,v otherwise.
VarStyle measure_style(const LPoly& value, const MeasureSpec& m);
VarStyle measure_style(const TSeries& value, const MeasureSpec& m);

// Generating series of symmetric powers of a class: exp-of-Adams applied to
// x t, truncated at the given order.
TSeries sym_power_series(const LPoly& x, long long order);

}  // namespace motivic
