#pragma once

#include <cstdint>
#include <vector>

#include "slicecalc/octonion.hpp"

namespace slicecalc {

// Counter-based splitmix64 stream.  Sub-streams are derived by hashing
// (seed, stream, substream), so per-sample generators are independent of
// evaluation order and identical between serial and parallel sweeps.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng derive(std::uint64_t seed, std::uint64_t stream,
                    std::uint64_t substream = 0);

  std::uint64_t next();

  // Uniform in [0, 1).
  double uniform();

  // Standard normal via Box-Muller (no library distributions, so streams
  // are reproducible across standard libraries).
  double gaussian();

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

enum class SampleTarget { kBall, kSphere, kUnitImaginary, kAlgebra };

// ball: uniform on the open unit ball (isotropic direction, radius U^{1/8});
// sphere: uniform on its boundary; unit-imaginary: uniform on the 6-sphere S;
// algebra: isotropic Gaussian components.
Octonion sample(Rng& rng, SampleTarget target);

UnitImaginary sample_unit_imaginary(Rng& rng);
Frame sample_frame(Rng& rng);

// Quaternion-subalgebra variants (components 4..7 zero).
Octonion sample_quaternion(Rng& rng, SampleTarget target);
UnitImaginary sample_quaternion_imaginary(Rng& rng);

// Deterministic direction set for diameter scans: n points of an R-sequence
// mapped to the unit sphere of R^8, followed by the 16 signed basis
// directions (these carry the exact affine extremal pairs).
std::vector<Octonion> diameter_directions(int n);

}  // namespace slicecalc
