#include "motivic/theta.hpp"

#include <stdexcept>

#include "motivic/errors.hpp"

namespace motivic {

static void check_characteristic(long long mu, long long nu) {
  if (mu != 0 && mu != 1) throw std::invalid_argument("theta: mu must be 0 or 1");
  if (nu != 0 && nu != 1) throw std::invalid_argument("theta: nu must be 0 or 1");
}

QYSeries jacobi_theta_sum(long long mu, long long nu, const Rat& qorder) {
  check_characteristic(mu, nu);
  QYSeries out(qorder);
  if (qorder < Rat(0)) return out;
  // (n + mu/2)^2 / 2 <= qorder bounds |n| by sqrt(2 qorder) + 1
  const long long bound = rat_sqrt_ceil(2 * qorder) + 1;
  for (long long n = -bound; n <= bound; ++n) {
    const Rat b = Rat(n) + Rat(mu, 2);
    const Rat e = b * b / 2;
    if (e > qorder) continue;
    mpz_class c = 1;
    if (nu == 1 && (n % 2 != 0)) c = -1;
    out.add_term(e, LPoly::mono(b, b, c));
  }
  return out;
}

QYSeries jacobi_theta_product(long long mu, long long nu, const Rat& qorder) {
  check_characteristic(mu, nu);
  const LPoly y = LPoly::mono(Rat(1), Rat(1), 1);
  const LPoly yinv = LPoly::mono(Rat(-1), Rat(-1), 1);
  if (mu == 1 && nu == 1) {
    // q^{1/8} (y^{1/2} - y^{-1/2}) prod (1 - q^m)(1 - q^m y)(1 - q^m y^{-1})
    QYSeries acc = QYSeries::mono(qorder, Rat(1, 8),
                                  LPoly::mono(Rat(1, 2), Rat(1, 2), 1) -
                                      LPoly::mono(Rat(-1, 2), Rat(-1, 2), 1));
    for (long long m = 1; Rat(m) <= qorder; ++m) {
      acc *= QYSeries::one(qorder) - QYSeries::mono(qorder, Rat(m), LPoly::one());
      acc *= QYSeries::one(qorder) - QYSeries::mono(qorder, Rat(m), y);
      acc *= QYSeries::one(qorder) - QYSeries::mono(qorder, Rat(m), yinv);
    }
    return acc;
  }
  if (mu == 0 && nu == 1) {
    // prod (1 - q^m)(1 - q^{m-1/2} y)(1 - q^{m-1/2} y^{-1})
    QYSeries acc = QYSeries::one(qorder);
    for (long long m = 1; Rat(m) - Rat(1, 2) <= qorder; ++m) {
      if (Rat(m) <= qorder)
        acc *= QYSeries::one(qorder) - QYSeries::mono(qorder, Rat(m), LPoly::one());
      acc *= QYSeries::one(qorder) - QYSeries::mono(qorder, Rat(m) - Rat(1, 2), y);
      acc *= QYSeries::one(qorder) - QYSeries::mono(qorder, Rat(m) - Rat(1, 2), yinv);
    }
    return acc;
  }
  throw DomainError(ErrCode::ProductFormUnavailable,
                    "no product expansion for characteristic (" + std::to_string(mu) + ", " +
                        std::to_string(nu) + ")");
}

TSeries eta_series(const Rat& qorder) {
  TSeries acc = TSeries::mono(qorder, Rat(1, 24), LPoly::one());
  for (long long n = 1; Rat(n) <= qorder; ++n)
    acc *= TSeries::one(qorder) - TSeries::mono(qorder, Rat(n), LPoly::one());
  return acc;
}

TSeries eta_power_series(long long k, const Rat& qorder) {
  if (k < 1) throw std::invalid_argument("eta power: exponent must be positive");
  const TSeries base = eta_series(qorder);
  TSeries acc = base;
  for (long long i = 1; i < k; ++i) acc *= base;
  return acc;
}

QYSeries scale_y(const QYSeries& f, long long c) {
  QYSeries out(f.order);
  for (const auto& [e, coeff] : f.terms) {
    LPoly mapped;
    for (const auto& [key, v] : coeff.terms) {
      if (key.first != key.second)
        throw std::logic_error("scale_y: coefficient is not a y-Laurent polynomial");
      mapped.add_term(key.first * c, key.first * c, v);
    }
    out.add_term(e, mapped);
  }
  return out;
}

QYSeries indefinite_theta(const LatticeSpec& lat, const Vec& c, const Vec& f, const Vec& g,
                          const Vec& xdir, const Rat& qorder, const Vec* shift) {
  if (xdir.size() != lat.gram.size())
    throw std::invalid_argument("indefinite theta: direction vector has wrong length");
  QYSeries out(qorder);
  const auto support = theta_support(lat, c, f, g, 2 * qorder, shift);
  for (const auto& sp : support) {
    const Rat e = sp.norm / 2;
    if (e > qorder) continue;
    const Rat b = -lat.dot(sp.xi, xdir);
    out.add_term(e, LPoly::mono(b, b, mpz_class(sp.weight)));
  }
  return out;
}

TSeries star_specialize(const QYSeries& f) {
  TSeries out(f.order);
  for (const auto& [a, coeff] : f.terms) {
    LPoly mapped;
    for (const auto& [key, v] : coeff.terms) {
      if (key.first != key.second)
        throw std::logic_error("star: coefficient is not a y-Laurent polynomial");
      const Rat lexp = 2 * a + key.first;
      if (!rat_is_int(lexp))
        throw DomainError(ErrCode::HalfIntegerLefschetzPower,
                          "q^" + rat_to_string(a) + " y^" + rat_to_string(key.first) +
                              " maps to L^" + rat_to_string(lexp));
      mapped.add_term(lexp, lexp, v);
    }
    out.add_term(a, mapped);
  }
  return out;
}

}  // namespace motivic
