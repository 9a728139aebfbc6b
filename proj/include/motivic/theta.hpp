#pragma once

#include "motivic/lattice.hpp"
#include "motivic/tseries.hpp"

namespace motivic {

// q-series whose coefficients are Laurent polynomials in y, with y^b stored
// on the diagonal (b, b). Truncation orders are inclusive q-exponent bounds.

// sum_n (-1)^{n nu} q^{(n + mu/2)^2 / 2} y^{n + mu/2} for characteristics
// mu, nu in {0, 1}.
QYSeries jacobi_theta_sum(long long mu, long long nu, const Rat& qorder);

// Triple-product expansion of the same series; available for (1, 1) and
// (0, 1) only, others raise ProductFormUnavailable.
QYSeries jacobi_theta_product(long long mu, long long nu, const Rat& qorder);

// q^{1/24} prod_{n>=1} (1 - q^n), and its k-th power.
TSeries eta_series(const Rat& qorder);
TSeries eta_power_series(long long k, const Rat& qorder);

// Substitutes y -> y^c; c = 0 collapses the y-direction to constants.
QYSeries scale_y(const QYSeries& f, long long c);

// Indefinite theta sum over the coset c/2 + Z^n: each support point xi of
// (f, g) contributes w(xi) q^{-xi^2/2} y^{-xi.xdir}. With a shift v the sum
// runs over c/2 + v + Z^n with the weight taken at xi - v; negative
// q-exponents then appear and are kept.
QYSeries indefinite_theta(const LatticeSpec& lat, const Vec& c, const Vec& f, const Vec& g,
                          const Vec& xdir, const Rat& qorder, const Vec* shift = nullptr);

// q^a y^b -> L^{2a+b} t^a. Throws HalfIntegerLefschetzPower when 2a+b is not
// an integer.
TSeries star_specialize(const QYSeries& f);

}  // namespace motivic
