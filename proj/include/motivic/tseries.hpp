#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "motivic/errors.hpp"
#include "motivic/lpoly.hpp"
#include "motivic/rational.hpp"

namespace motivic {

// Truncated power series in one formal variable with rational exponents and
// Laurent-polynomial coefficients. `order` is the inclusive truncation bound:
// every exponent <= order is exact. Exponents are bounded below (no Laurent
// tails beyond finitely many negative monomials) and coefficients are nonzero.
template <class LP>
struct TSeriesT {
  Rat order{0};
  std::map<Rat, LP> terms;

  TSeriesT() = default;
  explicit TSeriesT(const Rat& ord) : order(ord) {}

  static TSeriesT zero(const Rat& ord) { return TSeriesT(ord); }

  static TSeriesT one(const Rat& ord) {
    TSeriesT r(ord);
    r.add_term(Rat(0), LP::one());
    return r;
  }

  static TSeriesT mono(const Rat& ord, const Rat& e, const LP& c) {
    TSeriesT r(ord);
    r.add_term(e, c);
    return r;
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(const Rat& e, const LP& c) {
    if (c.is_zero() || e > order) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  LP coeff(const Rat& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? LP::zero() : it->second;
  }

  // Lowest exponent present; callers must check is_zero() first.
  Rat min_exp() const { return terms.begin()->first; }

  TSeriesT truncated(const Rat& ord) const {
    TSeriesT r(std::min(order, ord));
    for (const auto& [e, c] : terms) {
      if (e > r.order) break;
      r.terms.emplace(e, c);
    }
    return r;
  }

  friend TSeriesT operator+(const TSeriesT& a, const TSeriesT& b) {
    TSeriesT r(std::min(a.order, b.order));
    for (const auto& [e, c] : a.terms) r.add_term(e, c);
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
  }

  friend TSeriesT operator-(const TSeriesT& a, const TSeriesT& b) {
    TSeriesT r(std::min(a.order, b.order));
    for (const auto& [e, c] : a.terms) r.add_term(e, c);
    for (const auto& [e, c] : b.terms) r.add_term(e, -c);
    return r;
  }

  TSeriesT operator-() const {
    TSeriesT r(order);
    for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
    return r;
  }

  // Truncation orders propagate pessimistically: min of the operands.
  friend TSeriesT operator*(const TSeriesT& a, const TSeriesT& b) {
    TSeriesT r(std::min(a.order, b.order));
    for (const auto& [ea, ca] : a.terms) {
      for (const auto& [eb, cb] : b.terms) {
        if (ea + eb > r.order) break;
        r.add_term(ea + eb, ca * cb);
      }
    }
    return r;
  }

  TSeriesT& operator*=(const TSeriesT& o) { return *this = *this * o; }
  TSeriesT& operator+=(const TSeriesT& o) { return *this = *this + o; }
  TSeriesT& operator-=(const TSeriesT& o) { return *this = *this - o; }

  bool operator==(const TSeriesT& o) const { return order == o.order && terms == o.terms; }
  bool operator!=(const TSeriesT& o) const { return !(*this == o); }

  // Exact multiplication by a single monomial c * t^e: knowledge shifts with it.
  TSeriesT shifted(const Rat& e, const LP& c) const {
    TSeriesT r(order + e);
    if (c.is_zero()) return r;
    for (const auto& [a, w] : terms) r.terms.emplace(a + e, w * c);
    return r;
  }

  TSeriesT scaled(const LP& c) const {
    TSeriesT r(order);
    if (c.is_zero()) return r;
    for (const auto& [a, w] : terms) r.add_term(a, w * c);
    return r;
  }

  // Adams operation: multiplies the series exponent and both Hodge exponents
  // by k. A series exact to order N determines its Adams image to order k*N.
  TSeriesT adams(long long k) const {
    TSeriesT r(order * k);
    for (const auto& [e, c] : terms) r.terms.emplace(e * k, c.adams(k));
    return r;
  }

  // Multiplicative inverse. The lowest term must be a unit monomial; the
  // result is exact to order - 2*min_exp.
  TSeriesT inverted() const {
    if (is_zero())
      throw DomainError(ErrCode::NonUnitLeadingTerm, "cannot invert the zero series");
    Rat e0 = min_exp();
    const LP& lead = terms.begin()->second;
    if (lead.terms.size() != 1)
      throw DomainError(ErrCode::NonUnitLeadingTerm, "leading coefficient is not a monomial");
    auto [key, c0] = *lead.terms.begin();
    if (!coeff_is_unit(c0))
      throw DomainError(ErrCode::NonUnitLeadingTerm, "leading coefficient is not a unit");
    LP lead_inv = LP::mono(-key.first, -key.second, coeff_unit_inverse(c0));
    Rat res_order = order - e0 - e0;
    // a = m (1 + h) with h supported in positive exponents;
    // 1/a = m^{-1} (1 - h + h^2 - ...)
    TSeriesT h = shifted(-e0, lead_inv).truncated(order - e0);
    h.add_term(Rat(0), -LP::one());
    TSeriesT acc = TSeriesT::one(h.order);
    TSeriesT powh = TSeriesT::one(h.order);
    if (!h.is_zero()) {
      Rat g = h.min_exp();
      bool neg = true;
      for (Rat e = g; e <= h.order; e += g) {
        powh = powh * h;
        if (powh.is_zero()) break;
        acc += neg ? -powh : powh;
        neg = !neg;
      }
    }
    return acc.shifted(-e0, lead_inv).truncated(res_order);
  }

  // t -> L^twist * t^stretch applied to each term: c t^m -> c L^(twist*m) t^(stretch*m).
  TSeriesT substituted(long long stretch, long long twist) const {
    if (stretch < 1) throw std::logic_error("substitution stretch must be positive");
    TSeriesT r(order * stretch);
    for (const auto& [e, c] : terms) {
      if (twist != 0 && !rat_is_int(e))
        throw std::logic_error("twisted substitution needs integer exponents");
      r.terms.emplace(e * stretch, c * LP::lef(e * twist));
    }
    return r;
  }

 private:
  static bool coeff_is_unit(const mpz_class& c) { return c == 1 || c == -1; }
  static bool coeff_is_unit(const mpq_class& c) { return c != 0; }
  static mpz_class coeff_unit_inverse(const mpz_class& c) { return c; }
  static mpq_class coeff_unit_inverse(const mpq_class& c) { return mpq_class(1) / c; }
};

using TSeries = TSeriesT<LPoly>;
using TSeriesQ = TSeriesT<LPolyQ>;

// Jacobi-form expansions reuse the same container: the formal variable is q
// and the coefficients are Laurent polynomials in y stored on the diagonal.
using QYSeries = TSeries;

inline TSeriesQ widen(const TSeries& x) {
  TSeriesQ r(x.order);
  for (const auto& [e, c] : x.terms) r.terms.emplace(e, widen(c));
  return r;
}

inline TSeries narrow(const TSeriesQ& x) {
  TSeries r(x.order);
  for (const auto& [e, c] : x.terms) r.terms.emplace(e, narrow(c));
  return r;
}

namespace detail {

inline std::vector<int> moebius_upto(long long n) {
  std::vector<int> mu(static_cast<size_t>(n) + 1, 1);
  std::vector<bool> sieved(static_cast<size_t>(n) + 1, false);
  for (long long p = 2; p <= n; ++p) {
    if (sieved[p]) continue;
    for (long long m = p; m <= n; m += p) {
      if (m > p) sieved[m] = true;
      mu[m] = (m / p) % p == 0 ? 0 : -mu[m];
    }
  }
  return mu;
}

}  // namespace detail

// exp of a series with strictly positive support.
inline TSeriesQ series_exp(const TSeriesQ& h) {
  if (!h.is_zero() && h.min_exp() <= Rat(0))
    throw DomainError(ErrCode::ConstantTermPresent, "exp needs strictly positive support");
  TSeriesQ acc = TSeriesQ::one(h.order);
  if (h.is_zero()) return acc;
  TSeriesQ term = TSeriesQ::one(h.order);
  Rat g = h.min_exp();
  long long j = 0;
  for (Rat e = g; e <= h.order; e += g) {
    ++j;
    term = term * h;
    term = term.scaled(LPolyQ::constant(mpq_of(1, j)));
    if (term.is_zero()) break;
    acc += term;
  }
  return acc;
}

// log of a series with constant term exactly 1.
inline TSeriesQ series_log(const TSeriesQ& g) {
  if (g.coeff(Rat(0)) != LPolyQ::one())
    throw DomainError(ErrCode::ConstantTermNotOne, "log needs constant term 1");
  TSeriesQ h = g;
  h.add_term(Rat(0), -LPolyQ::one());
  if (!h.is_zero() && h.min_exp() <= Rat(0))
    throw DomainError(ErrCode::ConstantTermNotOne, "log needs support in positive exponents");
  TSeriesQ acc = TSeriesQ::zero(g.order);
  if (h.is_zero()) return acc;
  TSeriesQ pw = TSeriesQ::one(g.order);
  Rat step = h.min_exp();
  long long j = 0;
  for (Rat e = step; e <= g.order; e += step) {
    ++j;
    pw = pw * h;
    if (pw.is_zero()) break;
    mpq_class c = mpq_of(j % 2 == 1 ? 1 : -1, j);
    acc += pw.scaled(LPolyQ::constant(c));
  }
  return acc;
}

// Plethystic exponential PE[f] = exp(sum_k Adams_k(f)/k), f(0) = 0.
inline TSeriesQ pleth_exp_q(const TSeriesQ& f) {
  if (!f.is_zero() && f.min_exp() <= Rat(0))
    throw DomainError(ErrCode::ConstantTermPresent,
                      "plethystic exponential needs vanishing constant term");
  if (f.is_zero()) return TSeriesQ::one(f.order);
  TSeriesQ acc = TSeriesQ::zero(f.order);
  Rat g = f.min_exp();
  for (long long k = 1; Rat(k) * g <= f.order; ++k) {
    TSeriesQ t = f.adams(k).truncated(f.order);
    acc += t.scaled(LPolyQ::constant(mpq_of(1, k)));
  }
  return series_exp(acc);
}

// Integral inputs have integral plethystic exponentials; computed over the
// rationals, then narrowed with an exactness check.
inline TSeries pleth_exp(const TSeries& f) { return narrow(pleth_exp_q(widen(f))); }

// Plethystic logarithm PL[g] = sum_k mu(k)/k * Adams_k(log g), g(0) = 1.
inline TSeriesQ pleth_log_q(const TSeriesQ& g) {
  TSeriesQ lg = series_log(g);
  if (lg.is_zero()) return lg;
  Rat step = lg.min_exp();
  long long kmax = rat_floor(g.order / step);
  if (kmax < 1) kmax = 1;
  auto mu = detail::moebius_upto(kmax);
  TSeriesQ acc = TSeriesQ::zero(g.order);
  for (long long k = 1; k <= kmax; ++k) {
    if (mu[k] == 0) continue;
    TSeriesQ t = lg.adams(k).truncated(g.order);
    acc += t.scaled(LPolyQ::constant(mpq_of(mu[k], k)));
  }
  return acc;
}

inline TSeriesQ pleth_log(const TSeries& g) { return pleth_log_q(widen(g)); }

// Rendering: coefficients in parentheses when they have several terms,
// ascending exponents, rationals as "a/b".
template <class LP>
std::string render_tseries(const TSeriesT<LP>& x, VarStyle coeff_style,
                           const std::string& var = "t") {
  if (x.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : x.terms) {
    std::string cs = render_lpoly(c, coeff_style);
    std::string body;
    if (e == Rat(0)) {
      body = cs;
    } else {
      std::string vs = e == Rat(1) ? var : var + "^" + rat_to_string(e);
      if (cs == "1") {
        body = vs;
      } else if (c.terms.size() > 1 || cs[0] == '-') {
        body = "(" + cs + ") " + vs;
      } else {
        body = cs + " " + vs;
      }
    }
    out += first ? body : " + " + body;
    first = false;
  }
  return out;
}

}  // namespace motivic
