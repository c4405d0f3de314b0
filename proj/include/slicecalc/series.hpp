#pragma once

#include <complex>
#include <vector>

#include "slicecalc/octonion.hpp"

namespace slicecalc {

// Truncated power series sum_n w^n a_n with right octonion coefficients.
// degree == coeffs().size() - 1; trailing exact zeros are permitted.
class SliceSeries {
 public:
  SliceSeries() : coeffs_(1) {}
  explicit SliceSeries(std::vector<Octonion> coeffs);

  static SliceSeries constant(const Octonion& a) { return SliceSeries({a}); }
  static SliceSeries identity() { return SliceSeries({Octonion(0.0), Octonion(1.0)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Octonion>& coeffs() const { return coeffs_; }
  const Octonion& coeff(int n) const { return coeffs_[n]; }

 private:
  std::vector<Octonion> coeffs_;
};

// Pair (octonion numerator polynomial, real denominator polynomial); value
// is den(w)^{-1} num(w) off the zero set of den.  The real denominator is
// slice preserving and commutes through the *-product, so pointwise
// evaluation stays exact on the closed ball.
class RegularRational {
 public:
  RegularRational() : num_(SliceSeries::constant(0.0)), den_{1.0} {}
  explicit RegularRational(SliceSeries num) : num_(std::move(num)), den_{1.0} {}
  RegularRational(SliceSeries num, std::vector<double> den);

  const SliceSeries& num() const { return num_; }
  const std::vector<double>& den() const { return den_; }

 private:
  SliceSeries num_;
  std::vector<double> den_;
};

// --- evaluation ------------------------------------------------------------

Octonion eval(const SliceSeries& f, const Octonion& w);
Octonion eval(const RegularRational& f, const Octonion& w);  // PoleAtPoint

double eval_real(const std::vector<double>& poly, double x);
std::complex<double> eval_complex(const std::vector<double>& poly,
                                  std::complex<double> z);

// --- *-product calculus ----------------------------------------------------

SliceSeries star(const SliceSeries& f, const SliceSeries& g);
RegularRational star(const RegularRational& f, const RegularRational& g);

SliceSeries regular_conjugate(const SliceSeries& f);
RegularRational regular_conjugate(const RegularRational& f);

// f * f^c; coefficients are verified real to 1e-13 and coerced exactly.
SliceSeries symmetrize(const SliceSeries& f);
std::vector<double> symmetrize_real(const SliceSeries& f);
RegularRational symmetrize(const RegularRational& f);

// Rational form (f^s)^{-1} f^c, valid on the whole domain of f off Z_{f^s}.
RegularRational reciprocal(const SliceSeries& f);
RegularRational reciprocal(const RegularRational& f);
// Taylor form up to degree n_out; requires |a_0| > 1e-12 (ZeroConstantTerm).
SliceSeries reciprocal_series(const SliceSeries& f, int n_out);

SliceSeries derivative(const SliceSeries& f, int order = 1);
RegularRational derivative(const RegularRational& f);

Octonion sphere_derivative(const SliceSeries& f, const Octonion& xi);
Octonion sphere_derivative(const RegularRational& f, const Octonion& xi);

// R_xi f with f(w) - f(xi) = (w - xi) * R_xi f(w)  (one-sided synthetic
// division, coefficients b_{n-1} = a_n + xi b_n descending).
SliceSeries remainder(const SliceSeries& f, const Octonion& xi);
RegularRational remainder(const RegularRational& f, const Octonion& xi);

// R_{conj(xi)} R_xi f evaluated at xi, the second spherical coefficient.
Octonion second_remainder(const SliceSeries& f, const Octonion& xi);
Octonion second_remainder(const RegularRational& f, const Octonion& xi);

// v ds f(xi) + (xi v - v conj(xi)) R_{conj(xi)}R_xi f(xi).
Octonion directional_derivative(const SliceSeries& f, const Octonion& xi,
                                const Octonion& v);
Octonion directional_derivative(const RegularRational& f, const Octonion& xi,
                                const Octonion& v);

// --- splitting -------------------------------------------------------------

// Four holomorphic component series over C_I relative to the frame:
// f_I(z) = F1(z) + F2(z) J + (F3(z) + conj(F4(z)) J) K.
struct SplitComponents {
  Frame frame;
  std::array<std::vector<std::complex<double>>, 4> comps;
};

SplitComponents split(const SliceSeries& f, const Frame& frame);

std::complex<double> eval_component(const std::vector<std::complex<double>>& c,
                                    std::complex<double> z);

// Right-hand side of the splitting identity at z in C_I.
Octonion recombine(const SplitComponents& s, std::complex<double> z);

// (f*g)(z) computed through the splitting-lemma H1..H4 formulas; the second
// algebraic route for the *-product, used as its cross-check.
Octonion star_via_splitting(const SliceSeries& f, const SliceSeries& g,
                            const Frame& frame, std::complex<double> z);

// --- composition and representation ----------------------------------------

// f_u(w) = sum w^n (u^n a_n); when u and w share a slice, f_u(w) = f(uw).
SliceSeries compose_with_unit(const SliceSeries& f, const Octonion& u);

// 1/2 (f(z) + f(zbar)) - 1/2 J (I (f(z) - f(zbar))) for z = x + yI.
Octonion representation_eval(const Octonion& f_z, const Octonion& f_zbar,
                             const UnitImaginary& i, const UnitImaginary& j);

// --- named constructors ------------------------------------------------------

// w (1 - w a conj(xi))^{-*} * (w conj(xi) - a), a in [-1, 1), |xi| = 1.
RegularRational make_extremal(double a, const Octonion& xi);
// (1 - w conj(u))^{-*} * (w - u) v, |u| < 1, |v| = 1.
RegularRational make_mobius(const Octonion& u, const Octonion& v);
// w (1 - w e^{I theta})^{-*2}.
RegularRational make_koebe(const UnitImaginary& i, double theta);
// w^n u, |u| = 1.
RegularRational make_monomial_rotation(int n, const Octonion& u);
// w (w^2 + 4)^{-1} (2 (w^2 + 1)(IJ) - 3 w J), I perp J.
RegularRational make_example_3_3(const UnitImaginary& i, const UnitImaginary& j);

// --- helpers ----------------------------------------------------------------

std::vector<double> der_real(const std::vector<double>& poly);
std::vector<double> conv_real(const std::vector<double>& a,
                              const std::vector<double>& b);
// real polynomial (x) octonion polynomial, coefficientwise.
SliceSeries scale_poly(const std::vector<double>& d, const SliceSeries& f);
SliceSeries shift(const SliceSeries& f, int k);  // multiply by w^k
SliceSeries add(const SliceSeries& f, const SliceSeries& g);
SliceSeries sub(const SliceSeries& f, const SliceSeries& g);
RegularRational add(const RegularRational& f, const RegularRational& g);
RegularRational right_multiply(const RegularRational& f, const Octonion& c);
RegularRational affine_in(const RegularRational& f, const Octonion& c,
                          double sign);  // 1 + sign * (f * c)

int vanishing_order(const SliceSeries& f, double tol = 1e-14);

// Cancels the common power of w when num and den both carry exact zeros at
// the origin (removable singularities produced by rational products).
RegularRational reduce_common_origin_zeros(const RegularRational& f);
bool is_quaternionic(const SliceSeries& f, double tol = 1e-14);
bool is_quaternionic(const RegularRational& f, double tol = 1e-14);

}  // namespace slicecalc
