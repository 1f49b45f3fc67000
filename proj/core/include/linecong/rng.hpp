#pragma once

#include <cstdint>
#include <random>

#include "linecong/scene.hpp"

namespace linecong {

/// Seeded sampler: std::mt19937_64, and u = (r >> 11) * 2^-53 for uniforms in
/// [0, 1). Both are fully specified, so sequences replicate across platforms
/// and languages.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Point in the domain shrunk by `margin` (a fraction of each side) on every edge.
  Point2 point_in(const DomainRect& d, double margin = 0.05) {
    const double a = d.u1_min + margin * d.width();
    const double b = d.u1_max - margin * d.width();
    const double c = d.u2_min + margin * d.height();
    const double e = d.u2_max - margin * d.height();
    const double u1 = uniform(a, b);
    const double u2 = uniform(c, e);
    return {u1, u2};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace linecong
