#pragma once

#include <limits>
#include <string>
#include <vector>

#include "slicecalc/rng.hpp"
#include "slicecalc/series.hpp"

namespace slicecalc {

struct BoundaryReport {
  double delta = 0.0;              // real part of the boundary quantity
  double lower_bound_eq11 = 0.0;   // |1 - <f(0), f(xi)>|^2 / (1 - |f(0)|^2)
  double sharp_bound = std::numeric_limits<double>::quiet_NaN();
  double osserman_bound = std::numeric_limits<double>::quiet_NaN();
  // 2 / (1 + Re f'(0)); only when f(0) = 0 and f(xi) = xi.
  double fixed_point_bound = std::numeric_limits<double>::quiet_NaN();
  // part (ii) vanishing-order bound (quaternionic); NaN when a_0 != 0.
  double part_ii_bound = std::numeric_limits<double>::quiet_NaN();
  int vanishing_order = 0;
  bool extremal_monomial = false;  // degenerate part (ii): f = q^n u
  double imag_residual = 0.0;
  double fd_crosscheck = 0.0;      // one-sided difference, step 1e-4
  Octonion raw;                    // full octonion value, for diagnostics
};

// Octonionic boundary derivative of |f| at a contact point (|f(xi)| = 1):
// conj(xi)(f conj(f') + [conj(xi), f conj(R2)] + 2 [xi, f, R2]) at xi.
BoundaryReport boundary_modulus_derivative(const RegularRational& f,
                                           const Octonion& xi);

// Quaternionic delta (no associator term) plus the sharp, Osserman and
// part (ii) bounds.
BoundaryReport quaternionic_bounds(const RegularRational& f,
                                   const Octonion& xi);

struct JuliaResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

// Re((1 - f etabar)^{-*} * (1 + f etabar))(q) >= (1/alpha) Re((1 - q xibar)^{-*} * (1 + q xibar)).
JuliaResult julia_check(const RegularRational& f, const Octonion& xi,
                        const Octonion& eta, double alpha, const Octonion& q);

// (1 - |f(w)|^2)/(1 - |w|^2) - |1 - <f(0), f(w)>|^2/(1 - |f(0)|^2).
double modulus_inequality_check(const RegularRational& f, const Octonion& w);

// | |f(x+yJ)|^2 - (1+<I,J>)/2 |f(x+yI)|^2 - (1-<I,J>)/2 |f(x-yI)|^2 |
// for f with coefficients in C_I.
double convex_combination_check(const RegularRational& f, double x, double y,
                                const UnitImaginary& i, const UnitImaginary& j);

struct PointwiseStarResult {
  double quat_identity = 0.0;        // |f*g(w) - f(w) g(f(w)^{-1} w f(w))|
  double octo_inner_identity = 0.0;  // inner-product identity deviation
  double octo_modulus_identity = 0.0;
};

PointwiseStarResult pointwise_star_check(const SliceSeries& f,
                                         const SliceSeries& g,
                                         const Octonion& w);

// T_f(q) = f^c(q)^{-1} q f^c(q) for quaternionic f.
Octonion t_transform(const SliceSeries& f, const Octonion& q);

struct DiameterEstimate {
  enum class Kind { kRegular, kSlice, kEuclidean };
  Kind kind = Kind::kRegular;
  double r = 0.0;
  double value = 0.0;
  int n_samples = 0;
};

struct DiameterSampling {
  int directions = 512;   // low-discrepancy sphere points (plus signed basis)
  int boundary_points = 32;  // w samples per shell (regular kind)
  int slices = 48;        // slice count (slice kind)
  int angles = 96;        // boundary angles per slice
  std::uint64_t seed = 42;
};

DiameterEstimate diameters(const SliceSeries& f, double r,
                           DiameterEstimate::Kind kind,
                           const DiameterSampling& sampling = {});

struct LandauToeplitzReport {
  std::vector<double> r_grid;
  std::vector<double> dtilde;          // sampled regular diameters
  std::vector<double> ratio;           // dtilde / 2r
  bool bound_holds = false;            // dtilde <= 2r + SAMPLE_TOL
  bool ratio_monotone = false;         // within 1e-3 on matched samples
  bool derivative_bound_holds = false; // |f'(0)| <= 1 + 1e-9
  double derivative_norm = 0.0;
};

// Assumes the caller has normalized dtilde(f(B)) = 2.
LandauToeplitzReport landau_toeplitz_check(const SliceSeries& f,
                                           const std::vector<double>& r_grid,
                                           const DiameterSampling& s = {});

struct CauchyEstimate {
  double lhs = 0.0;    // |a_n|
  double rhs = 0.0;    // sampled Diam f(B) / 2
  double margin = 0.0; // rhs - lhs
};

CauchyEstimate cauchy_estimate_check(const SliceSeries& f, int n,
                                     const DiameterSampling& s = {});

struct GrowthMargins {
  double value = 0.0;       // |f(w)|
  double deriv = 0.0;       // |f'(w)|
  double star_ratio = 0.0;  // |w f'(w) * f^{-*}(w)|
  // signed margins, one per side of the three two-sided bounds
  double growth_lower = 0.0, growth_upper = 0.0;
  double distortion_lower = 0.0, distortion_upper = 0.0;
  double ratio_lower = 0.0, ratio_upper = 0.0;
};

// Bounds for normalized slice-injective f (f(0) = 0, f'(0) = 1).
GrowthMargins growth_distortion_check(const RegularRational& f,
                                      const Octonion& w);

struct InnerEstimate {
  double margin = 0.0;               // <f(t xi), f(xi)> - Minda bound(t)
  double second_derivative_margin = 0.0;  // <xi^2 f''(xi), f(xi)> - delta(delta-1)
  double delta = 0.0;
};

InnerEstimate inner_boundary_estimate(const RegularRational& f,
                                      const Octonion& xi, double t);

struct ExtremumGrid {
  double r_min = 0.1, r_max = 0.9;
  int shells = 9;
  int slices = 12;
  int angles = 48;
  double axis_step = 0.01;
  std::uint64_t seed = 42;
};

struct InteriorMinimum {
  double location = 0.0;  // real-axis coordinate
  double value = 0.0;     // |f| there
  bool consistent_with_zero = false;
};

struct OffAxisMinimum {
  Octonion location;
  double value = 0.0;
};

struct ExtremumScanReport {
  bool constant = false;
  bool shell_max_on_outer = false;  // per-slice max attained on outer shell
  std::vector<InteriorMinimum> real_axis_minima;
  // grid local minima away from the real axis; informational only, the
  // minimum principle is certified on the real axis alone
  std::vector<OffAxisMinimum> off_axis_minima;
  double max_modulus = 0.0;
  double max_derivative = 0.0;
};

ExtremumScanReport extremum_scan(const RegularRational& f,
                                 const ExtremumGrid& grid = {});

}  // namespace slicecalc
