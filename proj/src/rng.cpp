#include "slicecalc/rng.hpp"

#include <cmath>
#include <numbers>

namespace slicecalc {

namespace {

std::uint64_t splitmix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

Rng Rng::derive(std::uint64_t seed, std::uint64_t stream,
                std::uint64_t substream) {
  std::uint64_t s = seed;
  std::uint64_t h = splitmix(s);
  s = h ^ (stream * 0xd1342543de82ef95ull);
  h = splitmix(s);
  s = h ^ (substream * 0xaf251af3b0f025b5ull);
  return Rng(splitmix(s));
}

std::uint64_t Rng::next() { return splitmix(state_); }

double Rng::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(t);
  has_cached_ = true;
  return r * std::cos(t);
}

namespace {

Octonion gaussian_vector(Rng& rng, int dim_lo, int dim_hi) {
  Octonion w;
  for (int k = dim_lo; k < dim_hi; ++k) w[k] = rng.gaussian();
  return w;
}

Octonion on_sphere(Rng& rng, int dim_lo, int dim_hi) {
  for (;;) {
    Octonion w = gaussian_vector(rng, dim_lo, dim_hi);
    const double n = norm(w);
    if (n > 1e-6) return w / n;
  }
}

Octonion sample_impl(Rng& rng, SampleTarget target, int dim) {
  switch (target) {
    case SampleTarget::kAlgebra:
      return gaussian_vector(rng, 0, dim);
    case SampleTarget::kSphere:
      return on_sphere(rng, 0, dim);
    case SampleTarget::kBall: {
      Octonion u = on_sphere(rng, 0, dim);
      return u * std::pow(rng.uniform(), 1.0 / dim);
    }
    case SampleTarget::kUnitImaginary:
      return on_sphere(rng, 1, dim);
  }
  return Octonion();
}

}  // namespace

Octonion sample(Rng& rng, SampleTarget target) {
  return sample_impl(rng, target, 8);
}

Octonion sample_quaternion(Rng& rng, SampleTarget target) {
  return sample_impl(rng, target, 4);
}

UnitImaginary sample_unit_imaginary(Rng& rng) {
  return UnitImaginary(sample(rng, SampleTarget::kUnitImaginary));
}

UnitImaginary sample_quaternion_imaginary(Rng& rng) {
  return UnitImaginary(sample_quaternion(rng, SampleTarget::kUnitImaginary));
}

Frame sample_frame(Rng& rng) {
  const Octonion i = sample(rng, SampleTarget::kUnitImaginary);
  auto project_out = [](Octonion v, const Octonion& u) {
    return v - inner(v, u) * u;
  };
  Octonion j;
  for (;;) {
    j = sample(rng, SampleTarget::kUnitImaginary);
    j = project_out(j, i);
    if (norm(j) > 0.3) break;
  }
  j /= norm(j);
  const Octonion ij = i * j;
  Octonion k;
  for (;;) {
    k = sample(rng, SampleTarget::kUnitImaginary);
    k = project_out(project_out(project_out(k, i), j), ij);
    if (norm(k) > 0.3) break;
  }
  k /= norm(k);
  return Frame(UnitImaginary(i), UnitImaginary(j), UnitImaginary(k));
}

std::vector<Octonion> diameter_directions(int n) {
  // R_8 additive recurrence: alpha_k = phi^-(k+1) with phi the root of
  // x^9 = x + 1, components mapped to gaussians through Box-Muller.
  double phi = 1.0;
  for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / 9.0);
  std::array<double, 8> alpha{};
  double a = 1.0;
  for (int k = 0; k < 8; ++k) {
    a /= phi;
    alpha[k] = a;
  }
  std::vector<Octonion> out;
  out.reserve(n + 16);
  std::array<double, 8> x{};
  for (int k = 0; k < 8; ++k) x[k] = 0.5;
  for (int i = 0; i < n; ++i) {
    Octonion g;
    for (int k = 0; k < 8; ++k) {
      x[k] += alpha[k];
      x[k] -= std::floor(x[k]);
    }
    for (int k = 0; k < 8; k += 2) {
      double u1 = std::max(x[k], 1e-12);
      const double r = std::sqrt(-2.0 * std::log(u1));
      const double t = 2.0 * std::numbers::pi * x[k + 1];
      g[k] = r * std::cos(t);
      g[k + 1] = r * std::sin(t);
    }
    const double nn = norm(g);
    if (nn > 1e-6) out.push_back(g / nn);
  }
  for (int k = 0; k < 8; ++k) {
    out.push_back(Octonion::basis(k));
    out.push_back(-Octonion::basis(k));
  }
  return out;
}

}  // namespace slicecalc
