#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "slicecalc/errors.hpp"

namespace slicecalc {

inline constexpr double kAlgTol = 1e-12;     // closed-form algebra
inline constexpr double kSeriesTol = 1e-8;   // truncated series identities
inline constexpr double kSampleTol = 1e-2;   // Monte-Carlo estimates

// Octonion in the basis {1, e1, ..., e7}.  The product follows the seven
// oriented triples (1,2,3) (1,4,5) (2,4,6) (3,4,7) (5,3,6) (6,1,7) (7,2,5):
// e_i e_j = -delta_ij + psi_ijk e_k with psi totally antisymmetric.
class Octonion {
 public:
  constexpr Octonion() = default;
  constexpr Octonion(double real) : c_{real, 0, 0, 0, 0, 0, 0, 0} {}
  explicit constexpr Octonion(const std::array<double, 8>& c) : c_(c) {}

  static constexpr Octonion basis(int k) {
    Octonion r;
    r.c_[k] = 1.0;
    return r;
  }

  constexpr double operator[](int k) const { return c_[k]; }
  constexpr double& operator[](int k) { return c_[k]; }
  constexpr const std::array<double, 8>& components() const { return c_; }

  constexpr Octonion& operator+=(const Octonion& o) {
    for (int k = 0; k < 8; ++k) c_[k] += o.c_[k];
    return *this;
  }
  constexpr Octonion& operator-=(const Octonion& o) {
    for (int k = 0; k < 8; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  constexpr Octonion& operator*=(double s) {
    for (int k = 0; k < 8; ++k) c_[k] *= s;
    return *this;
  }
  constexpr Octonion& operator/=(double s) { return *this *= 1.0 / s; }

 private:
  std::array<double, 8> c_{};
};

namespace detail {

struct MulEntry {
  std::int8_t sign;
  std::uint8_t idx;
};

constexpr std::array<std::array<MulEntry, 8>, 8> make_mul_table() {
  constexpr int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7},
                                 {5, 3, 6}, {6, 1, 7}, {7, 2, 5}};
  std::array<std::array<MulEntry, 8>, 8> t{};
  for (int k = 0; k < 8; ++k) {
    t[0][k] = {1, static_cast<std::uint8_t>(k)};
    t[k][0] = {1, static_cast<std::uint8_t>(k)};
  }
  for (int k = 1; k < 8; ++k) t[k][k] = {-1, 0};
  for (const auto& tr : triples) {
    const int i = tr[0], j = tr[1], k = tr[2];
    t[i][j] = {1, static_cast<std::uint8_t>(k)};
    t[j][k] = {1, static_cast<std::uint8_t>(i)};
    t[k][i] = {1, static_cast<std::uint8_t>(j)};
    t[j][i] = {-1, static_cast<std::uint8_t>(k)};
    t[k][j] = {-1, static_cast<std::uint8_t>(i)};
    t[i][k] = {-1, static_cast<std::uint8_t>(j)};
  }
  return t;
}

inline constexpr auto kMulTable = make_mul_table();

}  // namespace detail

constexpr Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
constexpr Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
constexpr Octonion operator-(const Octonion& a) {
  Octonion r;
  return r -= a;
}
constexpr Octonion operator*(Octonion a, double s) { return a *= s; }
constexpr Octonion operator*(double s, Octonion a) { return a *= s; }
constexpr Octonion operator/(Octonion a, double s) { return a /= s; }

constexpr Octonion operator*(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (int i = 0; i < 8; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    for (int j = 0; j < 8; ++j) {
      const auto e = detail::kMulTable[i][j];
      r[e.idx] += e.sign * ai * b[j];
    }
  }
  return r;
}

constexpr bool operator==(const Octonion& a, const Octonion& b) {
  for (int k = 0; k < 8; ++k)
    if (a[k] != b[k]) return false;
  return true;
}

constexpr double re(const Octonion& w) { return w[0]; }

constexpr Octonion im(const Octonion& w) {
  Octonion r = w;
  r[0] = 0.0;
  return r;
}

constexpr Octonion conj(const Octonion& w) {
  Octonion r;
  r[0] = w[0];
  for (int k = 1; k < 8; ++k) r[k] = -w[k];
  return r;
}

constexpr double norm_sq(const Octonion& w) {
  double s = 0.0;
  for (int k = 0; k < 8; ++k) s += w[k] * w[k];
  return s;
}

inline double max_abs_component(const Octonion& w) {
  double m = 0.0;
  for (int k = 0; k < 8; ++k) m = std::max(m, std::abs(w[k]));
  return m;
}

// Scaled to survive components far outside the normal range.
inline double norm(const Octonion& w) {
  const double m = max_abs_component(w);
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (int k = 0; k < 8; ++k) {
    const double t = w[k] / m;
    s += t * t;
  }
  return m * std::sqrt(s);
}

constexpr double inner(const Octonion& z, const Octonion& w) {
  double s = 0.0;
  for (int k = 0; k < 8; ++k) s += z[k] * w[k];
  return s;
}

constexpr Octonion bracket(const Octonion& u, const Octonion& v) {
  return u * v - v * u;
}

constexpr Octonion associator(const Octonion& u, const Octonion& v,
                              const Octonion& w) {
  return (u * v) * w - u * (v * w);
}

constexpr Octonion wedge(const Octonion& i, const Octonion& j) {
  return 0.5 * bracket(i, j);
}

inline Octonion inverse(const Octonion& w) {
  const double m = max_abs_component(w);
  if (m < 1e-300) throw ZeroDivisor("octonion inverse of (near) zero");
  Octonion u = w / m;
  return conj(u) / (norm_sq(u) * m);
}

// Cayley-Dickson product over H + H e4.  Independent of the table; used as
// the correctness oracle for it.
Octonion cayley_dickson_mul(const Octonion& a, const Octonion& b);

inline bool is_quaternion(const Octonion& w, double tol = 1e-14) {
  return std::abs(w[4]) <= tol && std::abs(w[5]) <= tol &&
         std::abs(w[6]) <= tol && std::abs(w[7]) <= tol;
}

inline bool all_finite(const Octonion& w) {
  for (int k = 0; k < 8; ++k)
    if (!std::isfinite(w[k])) return false;
  return true;
}

// Element of the 6-sphere S = {w : w^2 = -1}.  Input must be purely
// imaginary with unit modulus to 1e-12; it is then cleaned exactly.
class UnitImaginary {
 public:
  explicit UnitImaginary(const Octonion& v) : value_(v) {
    const double n = norm(v);
    if (std::abs(v[0]) > kAlgTol || std::abs(n - 1.0) > kAlgTol)
      throw BadParameter("not a unit imaginary octonion");
    value_[0] = 0.0;
    value_ /= norm(value_);
  }
  const Octonion& value() const { return value_; }

 private:
  Octonion value_;
};

// Im(w)/|Im(w)|, with the fixed convention e1 at (near-)real points.
UnitImaginary imaginary_unit_of(const Octonion& w);

// Splitting frame (I, J, K): I, J, IJ, K mutually perpendicular.
class Frame {
 public:
  Frame(const UnitImaginary& i, const UnitImaginary& j, const UnitImaginary& k);

  const Octonion& i() const { return i_; }
  const Octonion& j() const { return j_; }
  const Octonion& k() const { return k_; }

  // Orthonormal basis {1, I, J, IJ, K, IK, JK, (IJ)K}.
  const std::array<Octonion, 8>& basis() const { return basis_; }

 private:
  Octonion i_, j_, k_;
  std::array<Octonion, 8> basis_;
};

Frame standard_frame();  // (e1, e2, e4)

// Deterministic completion of I to a full frame.
Frame complete_frame(const UnitImaginary& i);

}  // namespace slicecalc
