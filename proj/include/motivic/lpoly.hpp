#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "motivic/errors.hpp"
#include "motivic/rational.hpp"

namespace motivic {

// gmpxx lacks long long constructors and the implicit candidates are
// ambiguous; long is 64 bits on every supported target, so this is lossless.
inline mpz_class mpz_of(long long v) { return mpz_class(static_cast<long>(v)); }

inline mpq_class mpq_of(long long num, long long den = 1) {
  mpq_class r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

// Two-variable Laurent polynomial in the Hodge variables (u, v), sparse and
// canonical: no zero coefficients are stored, equality is map equality.
// Exponents are exact rationals with denominator dividing 2; the half-integer
// slots carry square-root monomials that arise before specialization.
// The Lefschetz class L is the monomial u*v, i.e. exponent pair (1, 1).
template <class C>
struct LPolyT {
  using Key = std::pair<Rat, Rat>;
  std::map<Key, C> terms;

  LPolyT() = default;

  static LPolyT zero() { return LPolyT(); }

  static LPolyT constant(const C& c) {
    LPolyT r;
    r.add_term(Rat(0), Rat(0), c);
    return r;
  }

  static LPolyT one() { return constant(C(1)); }

  static LPolyT mono(const Rat& p, const Rat& q, const C& c) {
    LPolyT r;
    r.add_term(p, q, c);
    return r;
  }

  // L^a
  static LPolyT lef(const Rat& a = Rat(1)) { return mono(a, a, C(1)); }

  bool is_zero() const { return terms.empty(); }

  void add_term(const Rat& p, const Rat& q, const C& c) {
    if (c == 0) return;
    if (p.denominator() > 2 || q.denominator() > 2)
      throw std::logic_error("LPoly exponent denominator exceeds 2");
    Key k{p, q};
    auto it = terms.find(k);
    if (it == terms.end()) {
      terms.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  LPolyT& operator+=(const LPolyT& o) {
    for (const auto& [k, c] : o.terms) add_term(k.first, k.second, c);
    return *this;
  }

  LPolyT& operator-=(const LPolyT& o) {
    for (const auto& [k, c] : o.terms) add_term(k.first, k.second, C(-c));
    return *this;
  }

  friend LPolyT operator+(LPolyT a, const LPolyT& b) { return a += b; }
  friend LPolyT operator-(LPolyT a, const LPolyT& b) { return a -= b; }

  LPolyT operator-() const {
    LPolyT r;
    for (const auto& [k, c] : terms) r.terms.emplace(k, C(-c));
    return r;
  }

  friend LPolyT operator*(const LPolyT& a, const LPolyT& b) {
    LPolyT r;
    for (const auto& [ka, ca] : a.terms)
      for (const auto& [kb, cb] : b.terms)
        r.add_term(ka.first + kb.first, ka.second + kb.second, C(ca * cb));
    return r;
  }

  LPolyT& operator*=(const LPolyT& o) { return *this = *this * o; }

  LPolyT scaled(const C& c) const {
    LPolyT r;
    if (c == 0) return r;
    for (const auto& [k, w] : terms) r.terms.emplace(k, C(w * c));
    return r;
  }

  bool operator==(const LPolyT& o) const { return terms == o.terms; }
  bool operator!=(const LPolyT& o) const { return !(*this == o); }
  bool operator<(const LPolyT& o) const { return terms < o.terms; }

  // Adams operation: multiplies both Hodge exponents by k.
  LPolyT adams(long long k) const {
    LPolyT r;
    for (const auto& [key, c] : terms) r.add_term(key.first * k, key.second * k, c);
    return r;
  }

  // Value at u = v = 1 (the Euler measure of a motivic class).
  C eval_ones() const {
    C s(0);
    for (const auto& [k, c] : terms) s += c;
    return s;
  }

  // True when every term is a power of L with integer exponent.
  bool is_L_polynomial() const {
    for (const auto& [k, c] : terms)
      if (k.first != k.second || !rat_is_int(k.first)) return false;
    return true;
  }

  bool is_diagonal() const {
    for (const auto& [k, c] : terms)
      if (k.first != k.second) return false;
    return true;
  }

  // Coefficient of L^a on a diagonal polynomial; zero if absent.
  C coeff_L(const Rat& a) const {
    auto it = terms.find(Key{a, a});
    return it == terms.end() ? C(0) : it->second;
  }

  Rat max_diag_exp() const {
    Rat m(0);
    bool first = true;
    for (const auto& [k, c] : terms) {
      if (first || k.first > m) m = k.first;
      first = false;
    }
    return m;
  }

  // u = v = -z, encoded with z^2 in the diagonal slot: term u^p v^q maps to
  // (-1)^(p+q) z^(p+q), stored at diagonal exponent (p+q)/2.
  LPolyT poincare() const {
    LPolyT r;
    for (const auto& [k, c] : terms) {
      if (!rat_is_int(k.first) || !rat_is_int(k.second))
        throw DomainError(ErrCode::MixedHodgeExponents,
                          "Poincare specialization needs integer Hodge exponents");
      long long tot = k.first.numerator() + k.second.numerator();
      C s = (tot % 2 == 0) ? c : C(-c);
      r.add_term(Rat(tot, 2), Rat(tot, 2), s);
    }
    return r;
  }

  // L -> q for a genuine polynomial in L (integer exponents >= 0).
  C point_count(const C& q) const {
    C s(0);
    for (const auto& [k, c] : terms) {
      if (k.first != k.second || !rat_is_int(k.first) || k.first < Rat(0))
        throw DomainError(ErrCode::MixedHodgeExponents,
                          "point counting needs a polynomial in L");
      C p(1);
      for (long long i = 0; i < k.first.numerator(); ++i) p *= q;
      s += c * p;
    }
    return s;
  }

  // c.L^a -> c.(L^(a-1) + ... + L + 1) for a >= 1, and 0 otherwise.
  // This is division by (L - 1) after removing the value at L = 1.
  LPolyT positive_part_div() const {
    LPolyT r;
    for (const auto& [k, c] : terms) {
      if (k.first != k.second || !rat_is_int(k.first))
        throw DomainError(ErrCode::MixedHodgeExponents,
                          "positive part division needs a polynomial in L");
      for (long long j = 0; j < k.first.numerator(); ++j) r.add_term(Rat(j), Rat(j), c);
    }
    return r;
  }
};

using LPoly = LPolyT<mpz_class>;
using LPolyQ = LPolyT<mpq_class>;

inline LPoly narrow(const LPolyQ& x) {
  LPoly r;
  for (const auto& [k, c] : x.terms) {
    if (c.get_den() != 1)
      throw std::logic_error("expected integral coefficients, found " + c.get_str());
    r.add_term(k.first, k.second, c.get_num());
  }
  return r;
}

inline LPolyQ widen(const LPoly& x) {
  LPolyQ r;
  for (const auto& [k, c] : x.terms) r.add_term(k.first, k.second, mpq_class(c));
  return r;
}

inline std::string coeff_str(const mpz_class& c) { return c.get_str(); }
inline std::string coeff_str(const mpq_class& c) { return c.get_str(); }

enum class VarStyle { UV, Lefschetz, Z, Y };

// Canonical rendering: terms ascending by exponent pair, unit coefficients
// elided next to a monomial, exponent 1 printed bare, rationals as "a/b".
template <class C>
std::string render_lpoly(const LPolyT<C>& x, VarStyle style = VarStyle::UV) {
  if (x.terms.empty()) return "0";
  auto mono_str = [&](const typename LPolyT<C>::Key& k) -> std::string {
    const Rat& p = k.first;
    const Rat& q = k.second;
    auto power = [](const std::string& name, const Rat& e) -> std::string {
      if (e == Rat(0)) return "";
      if (e == Rat(1)) return name;
      return name + "^" + rat_to_string(e);
    };
    if (style == VarStyle::Lefschetz || style == VarStyle::Y) {
      if (p != q) throw std::logic_error("non-diagonal term in single-variable rendering");
      return power(style == VarStyle::Y ? "y" : "L", p);
    }
    if (style == VarStyle::Z) {
      if (p != q) throw std::logic_error("non-diagonal term in z rendering");
      return power("z", p * 2);
    }
    std::string su = power("u", p);
    std::string sv = power("v", q);
    if (su.empty()) return sv;
    if (sv.empty()) return su;
    return su + " " + sv;
  };
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms) {
    bool neg = c < 0;
    C a = neg ? C(-c) : c;
    std::string mono = mono_str(k);
    std::string body;
    if (mono.empty()) {
      body = coeff_str(a);
    } else if (a == 1) {
      body = mono;
    } else {
      body = coeff_str(a) + " " + mono;
    }
    if (first) {
      out = neg ? "-" + body : body;
      first = false;
    } else {
      out += neg ? " - " + body : " + " + body;
    }
  }
  return out;
}

}  // namespace motivic
