#include "motivic/hilb.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "motivic/colored.hpp"
#include "motivic/errors.hpp"
#include "motivic/parallel.hpp"

namespace motivic {

LPoly punctual_class(long long n) {
  if (n < 0) throw std::invalid_argument("punctual_class: negative length");
  LPoly out;
  for (const auto& g : enumerate_partitions(n))
    out += LPoly::lef(Rat(n - g.length()));
  return out;
}

std::vector<LPoly> sym_power_classes(const SurfaceData& S, long long max_m) {
  if (max_m < 0) throw std::invalid_argument("sym_power_classes: negative bound");
  static std::mutex mtx;
  static std::map<std::string, std::vector<LPoly>> cache;
  const std::string key = S.fingerprint();
  std::lock_guard<std::mutex> lock(mtx);
  auto& entry = cache[key];
  if (static_cast<long long>(entry.size()) <= max_m) {
    const TSeries pe = sym_power_series(S.e_class(), max_m);
    entry.clear();
    for (long long m = 0; m <= max_m; ++m) entry.push_back(pe.coeff(Rat(m)));
  }
  return std::vector<LPoly>(entry.begin(), entry.begin() + max_m + 1);
}

LPoly hilb_class(const SurfaceData& S, long long n, ComputeMode mode) {
  if (n < 0) throw std::invalid_argument("hilb_class: negative length");
  const std::vector<Partition> parts = enumerate_partitions(n);
  const std::vector<LPoly> syms = sym_power_classes(S, n);
  auto term = [&](long long idx) -> LPoly {
    const Partition& alpha = parts[static_cast<std::size_t>(idx)];
    LPoly t = LPoly::lef(Rat(n - alpha.length()));
    for (const auto& [val, mult] : alpha.multiplicities()) {
      (void)val;
      t = t * syms[static_cast<std::size_t>(mult)];
    }
    return t;
  };
  const long long cnt = static_cast<long long>(parts.size());
  const std::vector<LPoly> pieces = mode == ComputeMode::Parallel
                                        ? parallel_map<LPoly>(cnt, term)
                                        : serial_map<LPoly>(cnt, term);
  LPoly out;
  for (const auto& p : pieces) out += p;
  return out;
}

TSeries hilb_series(const SurfaceData& S, long long order, SeriesMethod method) {
  if (order < 0) throw std::invalid_argument("hilb_series: negative order");
  if (method == SeriesMethod::Direct) {
    TSeries out = TSeries::zero(Rat(order));
    for (long long n = 0; n <= order; ++n) out.add_term(Rat(n), hilb_class(S, n));
    return out;
  }
  TSeries acc = TSeries::one(Rat(order));
  const LPoly e = S.e_class();
  for (long long l = 1; l <= order; ++l) {
    const long long m = (order + l - 1) / l;
    const TSeries zs = sym_power_series(e, m);
    acc = acc * zs.substituted(l, l - 1).truncated(Rat(order));
  }
  return acc;
}

TSeries blowup_factor(long long order) {
  if (order < 0) throw std::invalid_argument("blowup_factor: negative order");
  TSeries acc = TSeries::one(Rat(order));
  for (long long l = 1; l <= order; ++l) {
    TSeries g = TSeries::zero(Rat(order));
    for (long long m = 0; l * m <= order; ++m)
      g.add_term(Rat(l * m), LPoly::lef(Rat(l * m)));
    acc = acc * g;
  }
  return acc;
}

LPoly incidence_class(const SurfaceData& S, long long n) {
  if (n < 0) throw std::invalid_argument("incidence_class: negative length");
  const LPoly e = S.e_class();
  LPoly out;
  for (long long l = 0; l <= n; ++l)
    out += hilb_class(S, l) * e * LPoly::lef(Rat(n - l));
  return out;
}

LPoly disjoint_hilb_class(const SurfaceData& S, long long n) {
  if (n < 0) throw std::invalid_argument("disjoint_hilb_class: negative length");
  std::vector<LPoly> h;
  for (long long a = 0; a <= n; ++a) h.push_back(hilb_class(S, a));
  LPoly out;
  for (long long a = 0; a <= n; ++a)
    out += h[static_cast<std::size_t>(a)] * h[static_cast<std::size_t>(n - a)];
  return out;
}

// Symmetric powers by the Newton recursion m S^(m) = sum_k psi_k(e) S^(m-k),
// a pipeline independent of the plethystic-exponential route.
static std::vector<LPoly> newton_sym_powers(const LPoly& e, long long max_m) {
  std::vector<LPolyQ> sq;
  sq.push_back(LPolyQ::one());
  const LPolyQ eq = widen(e);
  for (long long m = 1; m <= max_m; ++m) {
    LPolyQ acc;
    for (long long k = 1; k <= m; ++k)
      acc += eq.adams(k) * sq[static_cast<std::size_t>(m - k)];
    sq.push_back(acc.scaled(mpq_of(1, m)));
  }
  std::vector<LPoly> out;
  for (const auto& x : sq) out.push_back(narrow(x));
  return out;
}

LPoly mckay_sum(const SurfaceData& S, long long n) {
  if (n < 0) throw std::invalid_argument("mckay_sum: negative length");
  const std::vector<LPoly> syms = newton_sym_powers(S.e_class(), n);
  LPoly out;
  for (const auto& alpha : enumerate_partitions(n)) {
    const CycleClassData cc = age_and_centralizer(alpha, n);
    LPoly t = LPoly::lef(Rat(cc.age));
    for (const auto& [val, mult] : alpha.multiplicities()) {
      (void)val;
      t = t * syms[static_cast<std::size_t>(mult)];
    }
    out += t;
  }
  return out;
}

namespace {

std::shared_ptr<const ColoredEngine> colored_engine_for(const SurfaceData& S,
                                                        long long points) {
  static std::mutex mtx;
  static std::map<std::string, std::shared_ptr<const ColoredEngine>> cache;
  const std::string key = S.fingerprint();
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(key);
  if (it == cache.end() || it->second->max_points() < points) {
    auto eng = std::make_shared<const ColoredEngine>(S.e_class(), points);
    cache[key] = eng;
    return eng;
  }
  return it->second;
}

// Visits every refinement of beta: each distinct part value i spreads its
// points over the partitions of i (the punctual local types). A refinement is
// reported as parallel vectors of point counts and the local type each count
// carries. Points sharing a local type are interchangeable, so the counts form
// the color multiplicities of a configuration.
void for_each_refinement(
    const Partition& beta,
    const std::function<void(const std::vector<long long>&,
                             const std::vector<const Partition*>&)>& visit) {
  std::vector<std::pair<long long, long long>> slots;
  for (const auto& [val, mult] : beta.multiplicities()) slots.emplace_back(val, mult);
  std::vector<std::vector<Partition>> locals;
  locals.reserve(slots.size());
  for (const auto& [val, count] : slots) {
    (void)count;
    locals.push_back(enumerate_partitions(val));
  }

  std::vector<long long> mults;
  std::vector<const Partition*> types;
  std::function<void(std::size_t)> rec_slot = [&](std::size_t si) {
    if (si == slots.size()) {
      visit(mults, types);
      return;
    }
    const std::vector<Partition>& local = locals[si];
    // multisets of size `count` over the local types
    std::function<void(std::size_t, long long)> rec_type = [&](std::size_t ti,
                                                               long long left) {
      if (left == 0) {
        rec_slot(si + 1);
        return;
      }
      if (ti == local.size()) return;
      // last type takes everything left, to cut one recursion level
      for (long long c = (ti + 1 == local.size() ? left : 0); c <= left; ++c) {
        if (c > 0) {
          mults.push_back(c);
          types.push_back(&local[ti]);
        }
        rec_type(ti + 1, left - c);
        if (c > 0) {
          mults.pop_back();
          types.pop_back();
        }
      }
    };
    rec_type(0, slots[si].second);
  };
  rec_slot(0);
}

}  // namespace

LPoly stratum_class(const SurfaceData& S, const Partition& beta) {
  const auto engine = colored_engine_for(S, beta.length());
  const long long n = beta.size();
  // Swapping two points of the same part value swaps their punctual fibers
  // too, so the class is not a plain product of configuration and punctual
  // factors. Refining each fiber into its cells restores local triviality:
  // every refinement contributes its colored-configuration class times one
  // affine factor collecting the chosen cells.
  LPoly out;
  for_each_refinement(beta, [&](const std::vector<long long>& mults,
                                const std::vector<const Partition*>& types) {
    long long cells = n;
    for (std::size_t j = 0; j < types.size(); ++j)
      cells -= mults[j] * types[j]->length();
    const LPoly cfg = mults.empty() ? LPoly::one() : engine->config_class(mults);
    out += cfg * LPoly::lef(Rat(cells));
  });
  return out;
}

std::map<Partition, LPoly> fiber_strata(const SurfaceData& S, const Partition& beta) {
  const auto engine = colored_engine_for(S, beta.length());
  std::map<Partition, LPoly> out;
  for_each_refinement(beta, [&](const std::vector<long long>& mults,
                                const std::vector<const Partition*>& types) {
    Partition alpha;
    for (std::size_t j = 0; j < types.size(); ++j)
      alpha = partition_combine(*types[j], alpha, mults[j]);
    LPoly cls = mults.empty() ? LPoly::one() : engine->config_class(mults);
    auto it = out.find(alpha);
    if (it == out.end())
      out.emplace(std::move(alpha), std::move(cls));
    else
      it->second += cls;
  });
  return out;
}

LPoly fiber_stratum_class(const SurfaceData& S, const Partition& alpha,
                          const Partition& beta) {
  if (alpha.size() != beta.size())
    throw DomainError(ErrCode::PartitionMismatch,
                      "local types must partition the same length as the support type");
  const auto pieces = fiber_strata(S, beta);
  auto it = pieces.find(alpha);
  return it == pieces.end() ? LPoly::zero() : it->second;
}

}  // namespace motivic
