#pragma once

#include <complex>

#include "slicecalc/series.hpp"

namespace slicecalc {

// Slice contour around the sphere S_{x0 + y0 S}: the boundary of
// V = {w : d(w, S_alpha) < delta} meets C_I in two circles of radius delta
// centred at x0 +- y0 I (one circle at x0 when y0 = 0).
struct ContourSpec {
  double x0 = 0.0;
  double y0 = 0.0;
  double delta = 0.1;
  UnitImaginary i;
  int nodes = 4096;

  ContourSpec(double x0, double y0, double delta, UnitImaginary i,
              int nodes = 4096);
};

struct CountResult {
  std::complex<double> raw;  // value of the contour integral in C_I
  int count = 0;             // nearest integer
  double guard = 0.0;        // |raw - count|
  double slice_deviation = 0.0;  // against the octonion path in a second slice
};

// L_f = (f^s)'/f^s as a real-coefficient rational (slice preserving).
RegularRational log_derivative(const SliceSeries& f);
RegularRational log_derivative(const RegularRational& f);

// Trapezoid-rule argument-principle count of zero spheres of f^s inside the
// contour.  A spherical zero of f contributes 2 (it is a double zero of f^s).
CountResult contour_count(const SliceSeries& f, const ContourSpec& spec);
CountResult contour_count(const RegularRational& f, const ContourSpec& spec);

}  // namespace slicecalc
