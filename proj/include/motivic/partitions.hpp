#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace motivic {

// Integer partition with parts stored weakly decreasing.
struct Partition {
  std::vector<long long> parts;

  Partition() = default;
  explicit Partition(std::vector<long long> p);

  long long size() const;    // sum of parts
  long long length() const;  // number of parts
  bool empty() const { return parts.empty(); }

  // multiplicity map: part value -> count
  std::map<long long, long long> multiplicities() const;

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return parts != o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }

  // "(1^2,3)" with part values ascending and repeated parts in exponent form
  std::string text() const;
};

// All partitions of n in reverse-lexicographic order on the descending parts
// vectors: (n) first, (1^n) last. This ordering is part of the interface.
std::vector<Partition> enumerate_partitions(long long n);

// l copies of alpha merged with beta (multiset union of parts).
Partition partition_combine(const Partition& alpha, const Partition& beta, long long l);

// Age of the conjugacy class of cycle type alpha acting on pairs of
// coordinates: n - length(alpha). Centralizer order: prod_i i^{m_i} m_i!.
struct CycleClassData {
  long long age;
  mpz_class centralizer;
};
CycleClassData age_and_centralizer(const Partition& alpha, long long n);

// Number of partitions of n.
mpz_class partition_count(long long n);

}  // namespace motivic
