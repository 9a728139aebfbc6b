#include "motivic/colored.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "motivic/errors.hpp"
#include "motivic/tseries.hpp"

namespace motivic {

long long ColorSeries::total_degree(const std::vector<std::uint16_t>& m) {
  long long d = 0;
  for (auto x : m) d += x;
  return d;
}

ColorSeries ColorSeries::constant(int nvars, long long cap, const LPolyQ& c) {
  ColorSeries r(nvars, cap);
  r.add_term(std::vector<std::uint16_t>(static_cast<std::size_t>(nvars), 0), c);
  return r;
}

void ColorSeries::add_term(const std::vector<std::uint16_t>& m, const LPolyQ& c) {
  if (static_cast<int>(m.size()) != nvars)
    throw std::invalid_argument("color series: monomial arity mismatch");
  if (c.is_zero() || total_degree(m) > cap) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

LPolyQ ColorSeries::coeff(const std::vector<std::uint16_t>& m) const {
  auto it = terms.find(m);
  return it == terms.end() ? LPolyQ::zero() : it->second;
}

long long ColorSeries::min_degree() const {
  long long best = cap + 1;
  for (const auto& [m, c] : terms) best = std::min(best, total_degree(m));
  return best;
}

ColorSeries ColorSeries::operator+(const ColorSeries& o) const {
  if (nvars != o.nvars) throw std::invalid_argument("color series: arity mismatch");
  ColorSeries r(nvars, std::min(cap, o.cap));
  for (const auto& [m, c] : terms) r.add_term(m, c);
  for (const auto& [m, c] : o.terms) r.add_term(m, c);
  return r;
}

ColorSeries ColorSeries::operator-(const ColorSeries& o) const {
  if (nvars != o.nvars) throw std::invalid_argument("color series: arity mismatch");
  ColorSeries r(nvars, std::min(cap, o.cap));
  for (const auto& [m, c] : terms) r.add_term(m, c);
  for (const auto& [m, c] : o.terms) r.add_term(m, -c);
  return r;
}

ColorSeries ColorSeries::operator*(const ColorSeries& o) const {
  if (nvars != o.nvars) throw std::invalid_argument("color series: arity mismatch");
  ColorSeries r(nvars, std::min(cap, o.cap));
  std::vector<std::uint16_t> key(static_cast<std::size_t>(nvars), 0);
  for (const auto& [ma, ca] : terms) {
    const long long da = total_degree(ma);
    if (da > r.cap) continue;
    for (const auto& [mb, cb] : o.terms) {
      if (da + total_degree(mb) > r.cap) continue;
      for (int i = 0; i < nvars; ++i)
        key[static_cast<std::size_t>(i)] =
            static_cast<std::uint16_t>(ma[static_cast<std::size_t>(i)] +
                                       mb[static_cast<std::size_t>(i)]);
      r.add_term(key, ca * cb);
    }
  }
  return r;
}

ColorSeries ColorSeries::scaled(const LPolyQ& c) const {
  ColorSeries r(nvars, cap);
  if (c.is_zero()) return r;
  for (const auto& [m, w] : terms) r.add_term(m, w * c);
  return r;
}

ColorSeries ColorSeries::adams(long long k) const {
  ColorSeries r(nvars, cap);
  std::vector<std::uint16_t> key(static_cast<std::size_t>(nvars), 0);
  for (const auto& [m, c] : terms) {
    if (total_degree(m) * k > cap) continue;
    for (int i = 0; i < nvars; ++i)
      key[static_cast<std::size_t>(i)] =
          static_cast<std::uint16_t>(m[static_cast<std::size_t>(i)] * k);
    r.add_term(key, c.adams(k));
  }
  return r;
}

ColorSeries color_exp(const ColorSeries& f) {
  if (!f.is_zero() && f.min_degree() <= 0)
    throw DomainError(ErrCode::ConstantTermPresent, "exp needs strictly positive support");
  ColorSeries acc = ColorSeries::one(f.nvars, f.cap);
  if (f.is_zero()) return acc;
  ColorSeries term = ColorSeries::one(f.nvars, f.cap);
  const long long g = f.min_degree();
  long long j = 0;
  for (long long e = g; e <= f.cap; e += g) {
    ++j;
    term = term * f;
    term = term.scaled(LPolyQ::constant(mpq_of(1, j)));
    if (term.is_zero()) break;
    acc = acc + term;
  }
  return acc;
}

ColorSeries color_log(const ColorSeries& g) {
  std::vector<std::uint16_t> zero(static_cast<std::size_t>(g.nvars), 0);
  if (g.coeff(zero) != LPolyQ::one())
    throw DomainError(ErrCode::ConstantTermNotOne, "log needs constant term 1");
  ColorSeries h = g;
  h.add_term(zero, -LPolyQ::one());
  ColorSeries acc(g.nvars, g.cap);
  if (h.is_zero()) return acc;
  ColorSeries pw = ColorSeries::one(g.nvars, g.cap);
  const long long step = h.min_degree();
  long long j = 0;
  for (long long e = step; e <= g.cap; e += step) {
    ++j;
    pw = pw * h;
    if (pw.is_zero()) break;
    acc = acc + pw.scaled(LPolyQ::constant(mpq_of(j % 2 == 1 ? 1 : -1, j)));
  }
  return acc;
}

ColorSeries color_pleth_exp(const ColorSeries& f) {
  if (!f.is_zero() && f.min_degree() <= 0)
    throw DomainError(ErrCode::ConstantTermPresent,
                      "plethystic exponential needs vanishing constant term");
  if (f.is_zero()) return ColorSeries::one(f.nvars, f.cap);
  ColorSeries acc(f.nvars, f.cap);
  const long long g = f.min_degree();
  for (long long k = 1; k * g <= f.cap; ++k)
    acc = acc + f.adams(k).scaled(LPolyQ::constant(mpq_of(1, k)));
  return color_exp(acc);
}

ColorSeries color_pleth_log(const ColorSeries& g) {
  ColorSeries lg = color_log(g);
  if (lg.is_zero()) return lg;
  const long long step = lg.min_degree();
  long long kmax = g.cap / step;
  if (kmax < 1) kmax = 1;
  const auto mu = detail::moebius_upto(kmax);
  ColorSeries acc(g.nvars, g.cap);
  for (long long k = 1; k <= kmax; ++k) {
    if (mu[static_cast<std::size_t>(k)] == 0) continue;
    acc = acc + lg.adams(k).scaled(
                    LPolyQ::constant(mpq_of(mu[static_cast<std::size_t>(k)], k)));
  }
  return acc;
}

ColoredEngine::ColoredEngine(const LPoly& surface_class, long long max_points)
    : cap_(max_points) {
  if (max_points < 0) throw std::invalid_argument("colored engine: negative point count");
  const int nv = static_cast<int>(max_points);
  ColorSeries f = ColorSeries::one(nv, cap_);
  for (int j = 0; j < nv; ++j) {
    std::vector<std::uint16_t> m(static_cast<std::size_t>(nv), 0);
    m[static_cast<std::size_t>(j)] = 1;
    f.add_term(m, LPolyQ::one());
  }
  const ColorSeries inner = color_pleth_log(f).scaled(widen(surface_class));
  pe_ = color_pleth_exp(inner);
}

LPoly ColoredEngine::config_class(std::vector<long long> mults) const {
  long long total = 0;
  for (long long m : mults) {
    if (m <= 0) throw std::invalid_argument("config_class: multiplicities must be positive");
    total += m;
  }
  if (total > cap_ || static_cast<long long>(mults.size()) > cap_)
    throw std::invalid_argument("config_class: more points than the engine was built for");
  std::sort(mults.begin(), mults.end(), std::greater<long long>());
  std::vector<std::uint16_t> key(static_cast<std::size_t>(cap_), 0);
  for (std::size_t j = 0; j < mults.size(); ++j)
    key[j] = static_cast<std::uint16_t>(mults[j]);
  return narrow(pe_.coeff(key));
}

}  // namespace motivic
