#include "motivic/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace motivic {

Partition::Partition(std::vector<long long> p) : parts(std::move(p)) {
  std::sort(parts.begin(), parts.end(), std::greater<long long>());
  for (long long x : parts) {
    if (x <= 0) throw std::invalid_argument("partition parts must be positive");
  }
}

long long Partition::size() const {
  long long s = 0;
  for (long long x : parts) s += x;
  return s;
}

long long Partition::length() const { return static_cast<long long>(parts.size()); }

std::map<long long, long long> Partition::multiplicities() const {
  std::map<long long, long long> m;
  for (long long x : parts) m[x]++;
  return m;
}

std::string Partition::text() const {
  if (parts.empty()) return "()";
  std::string out = "(";
  bool first = true;
  for (auto& [val, mult] : multiplicities()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(val);
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  out += ")";
  return out;
}

std::vector<Partition> enumerate_partitions(long long n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
  std::vector<Partition> out;
  std::vector<long long> cur;
  // Descending-first recursion yields reverse-lexicographic order.
  std::function<void(long long, long long)> rec = [&](long long rem, long long maxPart) {
    if (rem == 0) {
      Partition p;
      p.parts = cur;
      out.push_back(std::move(p));
      return;
    }
    for (long long k = std::min(rem, maxPart); k >= 1; --k) {
      cur.push_back(k);
      rec(rem - k, k);
      cur.pop_back();
    }
  };
  rec(n, n == 0 ? 1 : n);
  return out;
}

Partition partition_combine(const Partition& alpha, const Partition& beta, long long l) {
  if (l < 0) throw std::invalid_argument("partition_combine: l must be >= 0");
  std::vector<long long> parts = beta.parts;
  for (long long i = 0; i < l; ++i)
    parts.insert(parts.end(), alpha.parts.begin(), alpha.parts.end());
  std::sort(parts.begin(), parts.end(), std::greater<long long>());
  Partition p;
  p.parts = std::move(parts);
  return p;
}

CycleClassData age_and_centralizer(const Partition& alpha, long long n) {
  if (alpha.size() != n) throw std::invalid_argument("age_and_centralizer: size mismatch");
  CycleClassData d;
  d.age = n - alpha.length();
  d.centralizer = 1;
  for (auto& [val, mult] : alpha.multiplicities()) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(val),
                  static_cast<unsigned long>(mult));
    d.centralizer *= pw;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(mult));
    d.centralizer *= fact;
  }
  return d;
}

mpz_class partition_count(long long n) {
  if (n < 0) return 0;
  // Euler product expansion by dynamic programming.
  std::vector<mpz_class> p(static_cast<size_t>(n) + 1, 0);
  p[0] = 1;
  for (long long k = 1; k <= n; ++k)
    for (long long m = k; m <= n; ++m) p[m] += p[m - k];
  return p[n];
}

}  // namespace motivic
