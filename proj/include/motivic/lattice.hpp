#pragma once

#include <string>
#include <vector>

#include "motivic/geom.hpp"
#include "motivic/rational.hpp"

namespace motivic {

// A lattice of signature (1, rank-1) with a rational Gram matrix, together
// with a distinguished integral vector playing the role of the canonical
// class in pairing exponents. Surfaces embed via lattice_of_surface; abstract
// lattices (possibly with half-integer Gram entries) come from JSON or a
// preset.
struct LatticeSpec {
  std::string name;
  Mat gram;
  Vec K;  // zero vector when there is no distinguished class

  long long rank() const { return static_cast<long long>(gram.size()); }
  Rat dot(const Vec& a, const Vec& b) const { return pair_with(gram, a, b); }
  void validate() const;
};

LatticeSpec lattice_preset(const std::string& name);
std::vector<std::string> lattice_preset_names();
LatticeSpec lattice_from_json_text(const std::string& text);
std::string lattice_to_json_text(const LatticeSpec& lat);
LatticeSpec lattice_of_surface(const SurfaceData& s);

// All x in offset + Z^n with x^T N x <= qmax, for N symmetric positive
// definite with rational entries. Exact: integer ranges per coordinate come
// from a floating point guess corrected by rational comparisons. Points are
// emitted with the last coordinate as the outermost loop, each coordinate
// ascending, so the order is deterministic.
std::vector<Vec> enumerate_ellipsoid(const Mat& n, const Vec& offset, const Rat& qmax);

// Positivity data for a pair of pairing targets used by the indefinite sums.
struct TargetPair {
  Vec f, g;
  Rat ff, gg, fg;   // pairings of the targets
  Rat cf, cg;       // pairings of the coset vector with the targets
  Rat delta;        // fg^2 - ff*gg, positive iff the targets are independent
  bool strict_f;    // xi.f can never vanish on the coset
  bool strict_g;
};

// Checks that the indefinite sums attached to (f, g) on the coset c/2 + Z^n
// have finite truncations: either f^2 > 0, g^2 > 0 and f.g > 0, or
// f^2 >= 0, g^2 >= 0, f.g > 0 with both coset pairing grids avoiding zero.
// Throws DomainError(DegeneratePair) otherwise.
TargetPair analyze_targets(const LatticeSpec& lat, const Vec& c, const Vec& f, const Vec& g);

struct SupportPoint {
  Vec xi;
  int weight;  // +1 or -1
  Rat norm;    // -xi.xi; negative values can appear for shifted sums
  Rat pf, pg;  // pairings xi.f and xi.g of the point the sign test ran on
};

// Support of the indefinite theta sum for (f, g) on the coset c/2 + Z^n:
// points with mu(-xi.f) - mu(-xi.g) != 0 and -xi.xi <= norm_max, where
// mu(t) = 1 iff t >= 0. A nonzero-weight point whose pairing with f or g
// vanishes sits on the boundary of the sign decomposition and raises
// BoundaryContact. With a shift v the sum runs over c/2 + v + Z^n, the
// weight is evaluated at xi - v, and both targets must have positive square.
// Sorted by (norm, xi).
std::vector<SupportPoint> theta_support(const LatticeSpec& lat, const Vec& c, const Vec& f,
                                        const Vec& g, const Rat& norm_max,
                                        const Vec* shift = nullptr);

struct WallClass {
  Vec xi;
  Rat norm;  // -xi.xi, in (0, d]
  Rat xih, xil, xik;
  bool good_proved;  // (2 xi + K).A < 0 witnessed by one of the ample candidates
};

struct WallSet {
  std::vector<WallClass> walls;
  bool all_good_proved = true;
};

// Wall classes of type (c, d): xi in c/2 + Z^n with xi.L > 0 > xi.H and
// 0 < -xi.xi <= d. Throws ExponentOffGrid when d + c^2/4 is not an integer
// and OnWall when some candidate with 0 < -xi.xi <= d pairs to zero with h
// or l. Goodness of each wall is proved by finding a witness A among h, l,
// h+l and extra_nef with (2 xi + K).A < 0; walls without a witness are kept
// with good_proved = false. Sorted by (norm, xi).
WallSet enumerate_walls(const LatticeSpec& lat, const Vec& c, const Rat& d, const Vec& h,
                        const Vec& l, const std::vector<Vec>& extra_nef = {});

}  // namespace motivic
