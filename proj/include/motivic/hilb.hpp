#pragma once

#include <map>
#include <vector>

#include "motivic/geom.hpp"
#include "motivic/partitions.hpp"
#include "motivic/tseries.hpp"

namespace motivic {

// Class of the punctual Hilbert scheme of length n at a smooth surface
// point: sum over partitions of n of L^(n - length).
LPoly punctual_class(long long n);

// Symmetric power classes [S^(0)], .., [S^(max_m)] read off PE[e(S) t].
// Cached per surface fingerprint; safe to call concurrently.
std::vector<LPoly> sym_power_classes(const SurfaceData& S, long long max_m);

enum class ComputeMode { Parallel, Serial };

// [S^[n]] by the closed sum over partitions alpha of n:
//   sum_alpha L^(n - length(alpha)) prod_i [S^(a_i)].
// Parallel and serial modes produce identical classes.
LPoly hilb_class(const SurfaceData& S, long long n, ComputeMode mode = ComputeMode::Parallel);

enum class SeriesMethod { Direct, Product };

// sum_n [S^[n]] t^n up to t^order. Direct sums the closed formula per
// coefficient; Product expands prod_{l>=1} Z_S(L^(l-1) t^l) where
// Z_S = sum_m [S^(m)] t^m.
TSeries hilb_series(const SurfaceData& S, long long order, SeriesMethod method);

// Universal blowup correction: prod_{l>=1} (1 - L^l t^l)^(-1). The series
// for a blown-up surface is the base series times this factor.
TSeries blowup_factor(long long order);

// Class of the nested scheme pairs Z_n inside Z_{n+1}:
//   sum_{l=0..n} [S^[l]] [S] L^(n-l).
LPoly incidence_class(const SurfaceData& S, long long n);

// [(S disjoint-union S)^[n]] = sum_{a+b=n} [S^[a]] [S^[b]].
LPoly disjoint_hilb_class(const SurfaceData& S, long long n);

// Orbifold weighted sum over conjugacy classes of the symmetric group
// acting on S^n: fixed loci are products of symmetric powers, weighted by
// L^age. Symmetric powers computed by the Newton recursion here, so the
// equality with hilb_class exercises two independent pipelines.
LPoly mckay_sum(const SurfaceData& S, long long n);

// Stratum of S^[n] with support-multiplicity partition beta: configurations
// of length(beta) distinct points times punctual fibers.
LPoly stratum_class(const SurfaceData& S, const Partition& beta);

// Decomposition of the beta stratum by the combined local punctual type
// alpha: fiber_strata maps each reachable alpha to the class of the
// corresponding colored configuration space (no Lefschetz weight; the
// stratum is recovered as sum_alpha class * L^(n - length(alpha))).
std::map<Partition, LPoly> fiber_strata(const SurfaceData& S, const Partition& beta);

// Single piece of the decomposition above; throws PartitionMismatch when
// alpha and beta partition different integers.
LPoly fiber_stratum_class(const SurfaceData& S, const Partition& alpha, const Partition& beta);

}  // namespace motivic
