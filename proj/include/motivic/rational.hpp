#pragma once

#include <boost/rational.hpp>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace motivic {

// Exact rational scalar used for exponents, lattice coordinates and pairings.
// Magnitudes stay tiny everywhere (exponents, small gram matrices), so a
// 64-bit rational is ample; series coefficients use GMP instead.
using Rat = boost::rational<long long>;

// Boost 1.74's heterogeneous rational comparisons self-recurse under the
// C++20 reversed-candidate rules (boostorg/rational#26). These exact-match
// non-template overloads outrank both boost candidates and restore the
// intended semantics for mixed comparisons with integer literals.
inline bool operator==(const Rat& a, long long b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const Rat& a, int b) {
  return operator==(a, static_cast<long long>(b));
}
inline bool operator==(long long b, const Rat& a) { return operator==(a, b); }
inline bool operator==(int b, const Rat& a) {
  return operator==(a, static_cast<long long>(b));
}

inline long long rat_floor(const Rat& x) {
  long long q = x.numerator() / x.denominator();
  if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
  return q;
}

inline long long rat_ceil(const Rat& x) { return -rat_floor(-x); }

inline bool rat_is_int(const Rat& x) { return x.denominator() == 1; }

inline Rat rat_abs(const Rat& x) { return x < Rat(0) ? -x : x; }

// gcd of two nonnegative rationals: the generator of the group Za + Zb.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
  if (a == Rat(0)) return rat_abs(b);
  if (b == Rat(0)) return rat_abs(a);
  long long num = std::gcd(a.numerator() * b.denominator(), b.numerator() * a.denominator());
  return Rat(std::llabs(num), a.denominator() * b.denominator());
}

// Largest integer k >= 0 with k*k <= x. Requires x >= 0.
inline long long rat_sqrt_floor(const Rat& x) {
  if (x < Rat(0)) throw std::invalid_argument("rat_sqrt_floor: negative argument");
  long double approx = std::sqrt(static_cast<long double>(x.numerator()) /
                                 static_cast<long double>(x.denominator()));
  long long k = static_cast<long long>(approx);
  if (k < 0) k = 0;
  auto le = [&](long long v) {
    // v*v <= x  <=>  v*v*den <= num, computed in 128 bits
    __int128 lhs = static_cast<__int128>(v) * v * x.denominator();
    return lhs <= static_cast<__int128>(x.numerator());
  };
  while (k > 0 && !le(k)) --k;
  while (le(k + 1)) ++k;
  return k;
}

// Smallest integer k >= 0 with k*k >= x.
inline long long rat_sqrt_ceil(const Rat& x) {
  long long f = rat_sqrt_floor(x);
  return (Rat(f) * Rat(f) == x) ? f : f + 1;
}

inline std::string rat_to_string(const Rat& x) {
  std::string s = std::to_string(x.numerator());
  if (x.denominator() != 1) s += "/" + std::to_string(x.denominator());
  return s;
}

// Parses "a" or "a/b" with optional leading minus. Throws std::invalid_argument.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto parse_ll = [](const std::string& p) {
    if (p.empty()) throw std::invalid_argument("empty integer");
    size_t i = (p[0] == '-' || p[0] == '+') ? 1 : 0;
    if (i == p.size()) throw std::invalid_argument("bad integer: " + p);
    for (; i < p.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(p[i])))
        throw std::invalid_argument("bad integer: " + p);
    return std::stoll(p);
  };
  if (slash == std::string::npos) return Rat(parse_ll(s));
  long long num = parse_ll(s.substr(0, slash));
  long long den = parse_ll(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rat(num, den);
}

}  // namespace motivic
