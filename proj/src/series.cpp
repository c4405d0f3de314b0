#include "slicecalc/series.hpp"

#include <algorithm>
#include <cmath>

#include "slicecalc/errors.hpp"

namespace slicecalc {

SliceSeries::SliceSeries(std::vector<Octonion> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back();
}

RegularRational::RegularRational(SliceSeries num, std::vector<double> den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.empty()) throw BadParameter("empty denominator polynomial");
}

// --- evaluation --------------------------------------------------------------

namespace {

// Error-free transformations; polynomial values are needed close to the
// zeros of real denominators (boundary contact points sit next to poles of
// the reciprocal rationals), where plain Horner loses most digits.
struct Dd {
  double hi = 0.0, lo = 0.0;
};

inline Dd two_sum(double a, double b) {
  const double s = a + b;
  const double t = s - a;
  return {s, (a - (s - t)) + (b - t)};
}

inline Dd dd_add(Dd a, double b) {
  const Dd s = two_sum(a.hi, b);
  return {s.hi, s.lo + a.lo};
}

inline Dd dd_add(Dd a, Dd b) {
  Dd s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return s;
}

inline Dd dd_mul(Dd a, double b) {
  const double p = a.hi * b;
  const double e = std::fma(a.hi, b, -p);
  return {p, e + a.lo * b};
}

inline double dd_value(Dd a) { return a.hi + a.lo; }

}  // namespace

double eval_real(const std::vector<double>& poly, double x) {
  Dd acc;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it)
    acc = dd_add(dd_mul(acc, x), *it);
  return dd_value(acc);
}

std::complex<double> eval_complex(const std::vector<double>& poly,
                                  std::complex<double> z) {
  Dd re, im;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    const Dd nre = dd_add(dd_add(dd_mul(re, z.real()),
                                 dd_mul(dd_mul(im, z.imag()), -1.0)),
                          *it);
    const Dd nim = dd_add(dd_mul(re, z.imag()), dd_mul(im, z.real()));
    re = nre;
    im = nim;
  }
  return {dd_value(re), dd_value(im)};
}

namespace {

struct SlicePoint {
  double x, y;       // w = x + y I, y >= 0
  Octonion i;        // unit imaginary of the slice
};

SlicePoint slice_point(const Octonion& w) {
  const Octonion v = im(w);
  const double y = norm(v);
  if (y <= kAlgTol) return {re(w), 0.0, Octonion::basis(1)};
  return {re(w), y, v / y};
}

// a + b I acting on X by left multiplication, for I the slice unit.
Octonion left_complex_mul(double a, double b, const Octonion& i,
                          const Octonion& x) {
  return a * x + b * (i * x);
}

}  // namespace

Octonion eval(const SliceSeries& f, const Octonion& w) {
  const SlicePoint p = slice_point(w);
  const std::complex<double> z{p.x, p.y};
  std::complex<double> pw{1.0, 0.0};  // powers stay in C_I
  Octonion acc;
  for (const Octonion& a : f.coeffs()) {
    acc += left_complex_mul(pw.real(), pw.imag(), p.i, a);
    pw *= z;
  }
  return acc;
}

namespace {

// Compensated accumulation of sum_n w^n a_n; numerator values of rationals
// are needed next to zeros, where the plain sum cancels.
Octonion eval_series_compensated(const SliceSeries& f, const SlicePoint& p) {
  const std::complex<double> z{p.x, p.y};
  std::complex<double> pw{1.0, 0.0};
  std::array<Dd, 8> acc{};
  for (const Octonion& a : f.coeffs()) {
    const Octonion ia = p.i * a;
    for (int c = 0; c < 8; ++c) {
      const double p1 = pw.real() * a[c];
      acc[c] = dd_add(acc[c], {p1, std::fma(pw.real(), a[c], -p1)});
      const double p2 = pw.imag() * ia[c];
      acc[c] = dd_add(acc[c], {p2, std::fma(pw.imag(), ia[c], -p2)});
    }
    pw *= z;
  }
  Octonion out;
  for (int c = 0; c < 8; ++c) out[c] = dd_value(acc[c]);
  return out;
}

}  // namespace

Octonion eval(const RegularRational& f, const Octonion& w) {
  const SlicePoint p = slice_point(w);
  const std::complex<double> z{p.x, p.y};
  const std::complex<double> d = eval_complex(f.den(), z);
  if (std::abs(d) <= 1e-12) throw PoleAtPoint("denominator vanishes at the point");
  const std::complex<double> dinv = 1.0 / d;
  const Octonion n = eval_series_compensated(f.num(), p);
  return left_complex_mul(dinv.real(), dinv.imag(), p.i, n);
}

// --- *-product calculus -------------------------------------------------------

SliceSeries star(const SliceSeries& f, const SliceSeries& g) {
  std::vector<Octonion> out(f.coeffs().size() + g.coeffs().size() - 1);
  for (size_t a = 0; a < f.coeffs().size(); ++a)
    for (size_t b = 0; b < g.coeffs().size(); ++b)
      out[a + b] += f.coeff(static_cast<int>(a)) * g.coeff(static_cast<int>(b));
  return SliceSeries(std::move(out));
}

RegularRational star(const RegularRational& f, const RegularRational& g) {
  return RegularRational(star(f.num(), g.num()), conv_real(f.den(), g.den()));
}

SliceSeries regular_conjugate(const SliceSeries& f) {
  std::vector<Octonion> out;
  out.reserve(f.coeffs().size());
  for (const Octonion& a : f.coeffs()) out.push_back(conj(a));
  return SliceSeries(std::move(out));
}

RegularRational regular_conjugate(const RegularRational& f) {
  return RegularRational(regular_conjugate(f.num()), f.den());
}

std::vector<double> symmetrize_real(const SliceSeries& f) {
  const SliceSeries s = star(f, regular_conjugate(f));
  double scale = 0.0;
  for (const Octonion& a : s.coeffs()) scale = std::max(scale, norm(a));
  std::vector<double> out;
  out.reserve(s.coeffs().size());
  for (const Octonion& a : s.coeffs()) {
    if (norm(im(a)) > 1e-13 * std::max(1.0, scale))
      throw Error("symmetrization produced a non-real coefficient");
    out.push_back(re(a));
  }
  return out;
}

SliceSeries symmetrize(const SliceSeries& f) {
  std::vector<Octonion> out;
  for (double c : symmetrize_real(f)) out.emplace_back(c);
  return SliceSeries(std::move(out));
}

RegularRational symmetrize(const RegularRational& f) {
  return RegularRational(symmetrize(f.num()), conv_real(f.den(), f.den()));
}

RegularRational reciprocal(const SliceSeries& f) {
  return RegularRational(regular_conjugate(f), symmetrize_real(f));
}

RegularRational reciprocal(const RegularRational& f) {
  // (den^{-1} num)^{-*} = (num^s)^{-1} den num^c
  return RegularRational(scale_poly(f.den(), regular_conjugate(f.num())),
                         symmetrize_real(f.num()));
}

SliceSeries reciprocal_series(const SliceSeries& f, int n_out) {
  if (norm(f.coeff(0)) <= 1e-12)
    throw ZeroConstantTerm("series reciprocal needs |a_0| > 1e-12");
  std::vector<double> s = symmetrize_real(f);
  s.resize(n_out + 1, 0.0);
  std::vector<double> t(n_out + 1, 0.0);  // (f^s)^{-1} Taylor coefficients
  t[0] = 1.0 / s[0];
  for (int n = 1; n <= n_out; ++n) {
    double acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += s[k] * t[n - k];
    t[n] = -acc / s[0];
  }
  const SliceSeries fc = regular_conjugate(f);
  std::vector<Octonion> out(n_out + 1);
  for (int n = 0; n <= n_out; ++n)
    for (int k = 0; k <= std::min(n, fc.degree()); ++k)
      out[n] += t[n - k] * fc.coeff(k);
  return SliceSeries(std::move(out));
}

SliceSeries derivative(const SliceSeries& f, int order) {
  SliceSeries g = f;
  for (int o = 0; o < order; ++o) {
    if (g.degree() == 0) return SliceSeries::constant(0.0);
    std::vector<Octonion> out(g.degree());
    for (int n = 1; n <= g.degree(); ++n) out[n - 1] = n * g.coeff(n);
    g = SliceSeries(std::move(out));
  }
  return g;
}

RegularRational derivative(const RegularRational& f) {
  // den^{-2} (den num' - den' num)
  const SliceSeries a = scale_poly(f.den(), derivative(f.num()));
  const SliceSeries b = scale_poly(der_real(f.den()), f.num());
  return RegularRational(sub(a, b), conv_real(f.den(), f.den()));
}

namespace {

template <typename F>
Octonion sphere_derivative_impl(const F& f, const Octonion& xi) {
  const Octonion v = im(xi);
  if (norm(v) < 1e-12)
    throw RealPoint("sphere derivative degenerates at real points");
  return inverse(2.0 * v) * (eval(f, xi) - eval(f, conj(xi)));
}

}  // namespace

Octonion sphere_derivative(const SliceSeries& f, const Octonion& xi) {
  return sphere_derivative_impl(f, xi);
}
Octonion sphere_derivative(const RegularRational& f, const Octonion& xi) {
  return sphere_derivative_impl(f, xi);
}

SliceSeries remainder(const SliceSeries& f, const Octonion& xi) {
  const int n = f.degree();
  if (n == 0) return SliceSeries::constant(0.0);
  std::vector<Octonion> b(n);
  b[n - 1] = f.coeff(n);
  for (int k = n - 1; k >= 1; --k) b[k - 1] = f.coeff(k) + xi * b[k];
  return SliceSeries(std::move(b));
}

RegularRational remainder(const RegularRational& f, const Octonion& xi) {
  // f - f(xi) = den^{-1} (num - den f(xi)) and the shifted numerator has a
  // root at xi, so dividing it does the job; den commutes through *.
  const Octonion fxi = eval(f, xi);
  const SliceSeries shifted =
      sub(f.num(), scale_poly(f.den(), SliceSeries::constant(fxi)));
  return RegularRational(remainder(shifted, xi), f.den());
}

Octonion second_remainder(const SliceSeries& f, const Octonion& xi) {
  return eval(remainder(remainder(f, xi), conj(xi)), xi);
}

Octonion second_remainder(const RegularRational& f, const Octonion& xi) {
  return eval(remainder(remainder(f, xi), conj(xi)), xi);
}

namespace {

template <typename F>
Octonion directional_derivative_impl(const F& f, const Octonion& xi,
                                     const Octonion& v) {
  const Octonion ds = sphere_derivative_impl(f, xi);
  const Octonion r2 = second_remainder(f, xi);
  return v * ds + (xi * v - v * conj(xi)) * r2;
}

}  // namespace

Octonion directional_derivative(const SliceSeries& f, const Octonion& xi,
                                const Octonion& v) {
  return directional_derivative_impl(f, xi, v);
}
Octonion directional_derivative(const RegularRational& f, const Octonion& xi,
                                const Octonion& v) {
  return directional_derivative_impl(f, xi, v);
}

// --- splitting ----------------------------------------------------------------

SplitComponents split(const SliceSeries& f, const Frame& frame) {
  // a = c1 + c2 J + (c3 + d4 J) K over the frame basis; the holomorphic
  // components carry c1, c2, c3 and conj(d4) (the conjugate turns up because
  // J z = conj(z) J inside the K block).
  SplitComponents s{frame, {}};
  const auto& b = frame.basis();
  for (const Octonion& a : f.coeffs()) {
    s.comps[0].emplace_back(inner(a, b[0]), inner(a, b[1]));
    s.comps[1].emplace_back(inner(a, b[2]), inner(a, b[3]));
    s.comps[2].emplace_back(inner(a, b[4]), inner(a, b[5]));
    s.comps[3].emplace_back(inner(a, b[6]), -inner(a, b[7]));
  }
  return s;
}

std::complex<double> eval_component(const std::vector<std::complex<double>>& c,
                                    std::complex<double> z) {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

namespace {

Octonion assemble(const Frame& frame, std::complex<double> f1,
                  std::complex<double> f2, std::complex<double> f3,
                  std::complex<double> f4) {
  const auto& b = frame.basis();
  const std::complex<double> d4 = std::conj(f4);
  return f1.real() * b[0] + f1.imag() * b[1] + f2.real() * b[2] +
         f2.imag() * b[3] + f3.real() * b[4] + f3.imag() * b[5] +
         d4.real() * b[6] + d4.imag() * b[7];
}

}  // namespace

Octonion recombine(const SplitComponents& s, std::complex<double> z) {
  return assemble(s.frame, eval_component(s.comps[0], z),
                  eval_component(s.comps[1], z), eval_component(s.comps[2], z),
                  eval_component(s.comps[3], z));
}

Octonion star_via_splitting(const SliceSeries& f, const SliceSeries& g,
                            const Frame& frame, std::complex<double> z) {
  const SplitComponents sf = split(f, frame);
  const SplitComponents sg = split(g, frame);
  auto at = [&](const SplitComponents& s, int k) {
    return eval_component(s.comps[k], z);
  };
  // conj(G(conj(z))) evaluates the coefficient-conjugated series at z
  auto bar = [&](const SplitComponents& s, int k) {
    return std::conj(eval_component(s.comps[k], std::conj(z)));
  };
  const auto f1 = at(sf, 0), f2 = at(sf, 1), f3 = at(sf, 2), f4 = at(sf, 3);
  const auto f2b = bar(sf, 1), f3b = bar(sf, 2), f4b = bar(sf, 3);
  const auto g1 = at(sg, 0), g2 = at(sg, 1), g3 = at(sg, 2), g4 = at(sg, 3);
  const auto g1b = bar(sg, 0), g2b = bar(sg, 1), g3b = bar(sg, 2),
             g4b = bar(sg, 3);
  const auto h1 = f1 * g1 - f2 * g2b - f3 * g3b - f4 * g4b;
  const auto h2 = f1 * g2 + f2 * g1b + f3b * g4b - f4b * g3b;
  const auto h3 = f1 * g3 - f2b * g4b + f3 * g1b + f4b * g2b;
  const auto h4 = f1 * g4 + f2b * g3b - f3b * g2b + f4 * g1b;
  return assemble(frame, h1, h2, h3, h4);
}

// --- composition and representation --------------------------------------------

SliceSeries compose_with_unit(const SliceSeries& f, const Octonion& u) {
  std::vector<Octonion> out;
  out.reserve(f.coeffs().size());
  Octonion p(1.0);  // u^n, well-defined by power associativity
  for (const Octonion& a : f.coeffs()) {
    out.push_back(p * a);
    p = p * u;
  }
  return SliceSeries(std::move(out));
}

Octonion representation_eval(const Octonion& f_z, const Octonion& f_zbar,
                             const UnitImaginary& i, const UnitImaginary& j) {
  return 0.5 * (f_z + f_zbar) -
         0.5 * (j.value() * (i.value() * (f_z - f_zbar)));
}

// --- named constructors ----------------------------------------------------------

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw BadParameter(msg);
}

}  // namespace

RegularRational make_extremal(double a, const Octonion& xi) {
  require(a >= -1.0 && a < 1.0, "extremal: a must lie in [-1, 1)");
  require(std::abs(norm(xi) - 1.0) <= kAlgTol, "extremal: |xi| must be 1");
  const SliceSeries left({Octonion(1.0), -a * conj(xi)});
  const RegularRational rec = reciprocal(left);
  const SliceSeries right({-a * Octonion(1.0), conj(xi)});
  const RegularRational prod = star(rec, RegularRational(right));
  return RegularRational(shift(prod.num(), 1), prod.den());
}

RegularRational make_mobius(const Octonion& u, const Octonion& v) {
  require(norm(u) < 1.0, "mobius: |u| must be < 1");
  require(std::abs(norm(v) - 1.0) <= kAlgTol, "mobius: |v| must be 1");
  const SliceSeries left({Octonion(1.0), -conj(u)});
  const SliceSeries right({-(u * v), v});
  return star(reciprocal(left), RegularRational(right));
}

RegularRational make_koebe(const UnitImaginary& i, double theta) {
  const Octonion e = std::cos(theta) * Octonion(1.0) + std::sin(theta) * i.value();
  const SliceSeries g({Octonion(1.0), -e});
  const RegularRational rec = reciprocal(star(g, g));
  return RegularRational(shift(rec.num(), 1), rec.den());
}

RegularRational make_monomial_rotation(int n, const Octonion& u) {
  require(n >= 1, "monomial rotation: n must be >= 1");
  require(std::abs(norm(u) - 1.0) <= kAlgTol, "monomial rotation: |u| must be 1");
  std::vector<Octonion> c(n + 1);
  c[n] = u;
  return RegularRational(SliceSeries(std::move(c)));
}

RegularRational make_example_3_3(const UnitImaginary& i,
                                 const UnitImaginary& j) {
  require(std::abs(inner(i.value(), j.value())) <= kAlgTol,
          "example 3.3: I and J must be perpendicular");
  const Octonion ij = i.value() * j.value();
  const SliceSeries num({Octonion(0.0), 2.0 * ij, -3.0 * j.value(), 2.0 * ij});
  return RegularRational(num, {4.0, 0.0, 1.0});
}

// --- helpers ----------------------------------------------------------------------

std::vector<double> der_real(const std::vector<double>& poly) {
  if (poly.size() <= 1) return {0.0};
  std::vector<double> out(poly.size() - 1);
  for (size_t n = 1; n < poly.size(); ++n) out[n - 1] = n * poly[n];
  return out;
}

std::vector<double> conv_real(const std::vector<double>& a,
                              const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

SliceSeries scale_poly(const std::vector<double>& d, const SliceSeries& f) {
  std::vector<Octonion> out(d.size() + f.coeffs().size() - 1);
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = 0; j < f.coeffs().size(); ++j)
      out[i + j] += d[i] * f.coeff(static_cast<int>(j));
  return SliceSeries(std::move(out));
}

SliceSeries shift(const SliceSeries& f, int k) {
  std::vector<Octonion> out(f.coeffs().size() + k);
  std::copy(f.coeffs().begin(), f.coeffs().end(), out.begin() + k);
  return SliceSeries(std::move(out));
}

SliceSeries add(const SliceSeries& f, const SliceSeries& g) {
  std::vector<Octonion> out(std::max(f.coeffs().size(), g.coeffs().size()));
  for (size_t n = 0; n < out.size(); ++n) {
    if (n < f.coeffs().size()) out[n] += f.coeff(static_cast<int>(n));
    if (n < g.coeffs().size()) out[n] += g.coeff(static_cast<int>(n));
  }
  return SliceSeries(std::move(out));
}

SliceSeries sub(const SliceSeries& f, const SliceSeries& g) {
  std::vector<Octonion> out(std::max(f.coeffs().size(), g.coeffs().size()));
  for (size_t n = 0; n < out.size(); ++n) {
    if (n < f.coeffs().size()) out[n] += f.coeff(static_cast<int>(n));
    if (n < g.coeffs().size()) out[n] -= g.coeff(static_cast<int>(n));
  }
  return SliceSeries(std::move(out));
}

RegularRational add(const RegularRational& f, const RegularRational& g) {
  return RegularRational(add(scale_poly(g.den(), f.num()),
                             scale_poly(f.den(), g.num())),
                         conv_real(f.den(), g.den()));
}

RegularRational right_multiply(const RegularRational& f, const Octonion& c) {
  std::vector<Octonion> out;
  out.reserve(f.num().coeffs().size());
  for (const Octonion& a : f.num().coeffs()) out.push_back(a * c);
  return RegularRational(SliceSeries(std::move(out)), f.den());
}

RegularRational affine_in(const RegularRational& f, const Octonion& c,
                          double sign) {
  const RegularRational fc = right_multiply(f, c);
  std::vector<Octonion> den_as_num;
  for (double d : f.den()) den_as_num.emplace_back(d);
  const SliceSeries num =
      sign > 0 ? add(SliceSeries(den_as_num), fc.num())
               : sub(SliceSeries(den_as_num), fc.num());
  return RegularRational(num, f.den());
}

int vanishing_order(const SliceSeries& f, double tol) {
  for (int n = 0; n <= f.degree(); ++n)
    if (norm(f.coeff(n)) > tol) return n;
  return f.degree() + 1;
}

RegularRational reduce_common_origin_zeros(const RegularRational& f) {
  size_t k = 0;
  const auto& num = f.num().coeffs();
  const auto& den = f.den();
  while (k + 1 < num.size() && k + 1 < den.size() &&
         norm(num[k]) == 0.0 && den[k] == 0.0)
    ++k;
  if (k == 0) return f;
  return RegularRational(
      SliceSeries(std::vector<Octonion>(num.begin() + k, num.end())),
      std::vector<double>(den.begin() + k, den.end()));
}

bool is_quaternionic(const SliceSeries& f, double tol) {
  for (const Octonion& a : f.coeffs())
    if (!is_quaternion(a, tol)) return false;
  return true;
}

bool is_quaternionic(const RegularRational& f, double tol) {
  return is_quaternionic(f.num(), tol);
}

}  // namespace slicecalc
