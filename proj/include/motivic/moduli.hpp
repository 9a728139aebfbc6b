#pragma once

#include <vector>

#include "motivic/geom.hpp"
#include "motivic/lattice.hpp"
#include "motivic/tseries.hpp"

namespace motivic {

enum class WallRoute { Direct, Theta };

struct WallcrossResult {
  LPoly value;
  long long wall_count = 0;
  // every wall came with a witness for its goodness; when false the value is
  // conditional on the unproved walls actually being good
  bool all_walls_proved_good = true;
};

// Change of the rank-two moduli class across the wall system of type (c, d)
// for the polarization pair (h, l):
//   Pic0 * sum over walls xi of [(S u S)^[d + xi^2]] *
//          ([P^(d - xi^2 + xi.K - chi - 1)] - [P^(d - xi^2 - xi.K - chi - 1)])
// with walls xi in c/2 + NS, xi.l > 0 > xi.h, 0 < -xi^2 <= d. The theta
// route evaluates the same sum through the indefinite theta support of
// (h, l) and the positive-part operator; the two agree termwise.
WallcrossResult wallcross_diff(const SurfaceData& s, const Vec& c, const Rat& d, const Vec& h,
                               const Vec& l, WallRoute route,
                               const std::vector<Vec>& extra_nef = {});

// Generating series of the differences over the d-grid (Z - c^2/4) up to and
// including dmax; nonpositive d contribute nothing. When all_proved is given
// it is set to false if any contributing wall lacked a goodness witness.
TSeries wallcross_series(const SurfaceData& s, const Vec& c, const Rat& dmax, const Vec& h,
                         const Vec& l, WallRoute route, bool* all_proved = nullptr);

// Star image of the characteristic-(a, 0) theta on doubled tau, divided by
// prod_{l>0} (1 - L^{2l} t^l). a must be 0 or 1.
TSeries blowup_ratio(long long a, const Rat& order);

// Absolute moduli class on the elliptic ruled surface with section of square
// one: the wall difference walked from the polarization 2 section - fiber
// towards the fiber, whose chamber is empty. The coset vector is chosen from
// the fractional part of d: section - fiber for d in Z + 1/4, the section
// itself for d in Z + 3/4.
WallcrossResult elliptic_moduli_class(const Rat& d, WallRoute route);

// Closed product form of the same family; the coefficient of t^k matches
// elliptic_moduli_class((2k+1)/4).
TSeries elliptic_moduli_product(long long order);

}  // namespace motivic
