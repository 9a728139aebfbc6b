// Timing comparison of the parallel Hilbert-class kernel against the serial
// reference. Sym-power tables are warmed first so both modes measure the
// per-partition assembly rather than the shared one-time precompute.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "motivic/geom.hpp"
#include "motivic/hilb.hpp"

using namespace motivic;

namespace {

double time_once(const SurfaceData& s, long long n, ComputeMode mode, LPoly& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = hilb_class(s, n, mode);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const long long max_n = argc > 1 ? std::atoll(argv[1]) : 12;
  const char* preset = argc > 2 ? argv[2] : "p1xp1";
  const SurfaceData s = surface_preset(preset);

  hilb_class(s, max_n, ComputeMode::Serial);  // warm the sym-power cache

  std::printf("hilb_class on %s\n", s.name.c_str());
  std::printf("%4s %12s %14s %8s\n", "n", "serial [s]", "parallel [s]", "speedup");
  for (long long n = 2; n <= max_n; n += 2) {
    LPoly serial, parallel;
    const double ts = time_once(s, n, ComputeMode::Serial, serial);
    const double tp = time_once(s, n, ComputeMode::Parallel, parallel);
    if (serial != parallel) {
      std::printf("mode mismatch at n=%lld\n", n);
      return 1;
    }
    std::printf("%4lld %12.4f %14.4f %8.2f\n", n, ts, tp, ts / (tp > 0.0 ? tp : 1e-9));
  }
  return 0;
}
