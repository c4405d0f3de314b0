#include "slicecalc/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "slicecalc/errors.hpp"

namespace slicecalc {

ContourSpec::ContourSpec(double x0_, double y0_, double delta_,
                         UnitImaginary i_, int nodes_)
    : x0(x0_), y0(y0_), delta(delta_), i(i_), nodes(nodes_) {
  if (y0 < 0.0) throw BadParameter("contour: y0 must be >= 0");
  if (delta <= 0.0) throw BadParameter("contour: delta must be positive");
  if (y0 > 0.0 && delta >= y0)
    throw BadParameter("contour: delta must be < y0 (two disjoint discs)");
  if (nodes < 64) throw BadParameter("contour: need at least 64 nodes");
}

namespace {

struct RealRational {
  std::vector<double> num;
  std::vector<double> den;
};

bool all_below(const std::vector<double>& c, double tol) {
  return std::all_of(c.begin(), c.end(),
                     [&](double x) { return std::abs(x) <= tol; });
}

RealRational log_derivative_real(const std::vector<double>& sym_num,
                                 const std::vector<double>& den) {
  // L = (num^s/den^2)' / (num^s/den^2) = num^s'/num^s - 2 den'/den
  if (all_below(sym_num, 1e-300))
    throw IdenticallyZero("logarithmic derivative of the zero function");
  RealRational out;
  const std::vector<double> a = conv_real(der_real(sym_num), den);
  std::vector<double> b = conv_real(conv_real({2.0}, der_real(den)), sym_num);
  b.resize(std::max(a.size(), b.size()), 0.0);
  std::vector<double> n(std::max(a.size(), b.size()), 0.0);
  for (size_t k = 0; k < n.size(); ++k)
    n[k] = (k < a.size() ? a[k] : 0.0) - b[k];
  out.num = std::move(n);
  out.den = conv_real(sym_num, den);
  return out;
}

RegularRational to_regular(const RealRational& r) {
  std::vector<Octonion> num;
  num.reserve(r.num.size());
  for (double c : r.num) num.emplace_back(c);
  return RegularRational(SliceSeries(std::move(num)), r.den);
}

RealRational log_derivative_impl(const RegularRational& f) {
  return log_derivative_real(symmetrize_real(f.num()), f.den());
}

// pairwise tree reduction, deterministic regardless of evaluation order
std::complex<double> pairwise_sum(std::vector<std::complex<double>>& v,
                                  size_t lo, size_t hi) {
  if (hi - lo == 1) return v[lo];
  const size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

CountResult contour_count_impl(const RegularRational& f,
                               const ContourSpec& spec) {
  const std::vector<double> sym = symmetrize_real(f.num());
  const RealRational lf = log_derivative_real(sym, f.den());
  const std::vector<double> fs_den2 = conv_real(f.den(), f.den());

  std::vector<std::complex<double>> centers;
  centers.emplace_back(spec.x0, spec.y0);
  if (spec.y0 > 0.0) centers.emplace_back(spec.x0, -spec.y0);

  const int m = spec.nodes;
  std::complex<double> raw{0.0, 0.0};
  for (const auto& c : centers) {
    std::vector<std::complex<double>> terms(m);
    for (int k = 0; k < m; ++k) {
      const double th = 2.0 * std::numbers::pi * k / m;
      const std::complex<double> e{std::cos(th), std::sin(th)};
      const std::complex<double> z = c + spec.delta * e;
      const std::complex<double> fs =
          eval_complex(sym, z) / eval_complex(fs_den2, z);
      if (std::abs(fs) <= 1e-8)
        throw ZeroOnContour("f^s vanishes on a contour node");
      const std::complex<double> l =
          eval_complex(lf.num, z) / eval_complex(lf.den, z);
      terms[k] = l * e;
    }
    raw += pairwise_sum(terms, 0, terms.size()) * (spec.delta / m);
  }

  // independent second path: octonion-arithmetic evaluation along a
  // perpendicular slice, projected back to complex coordinates
  const Frame second = complete_frame(spec.i);
  const Octonion j = second.j();
  const RegularRational lfo = to_regular(lf);
  std::complex<double> raw2{0.0, 0.0};
  for (const auto& c : centers) {
    std::vector<std::complex<double>> terms(m);
    for (int k = 0; k < m; ++k) {
      const double th = 2.0 * std::numbers::pi * k / m;
      const std::complex<double> e{std::cos(th), std::sin(th)};
      const std::complex<double> z = c + spec.delta * e;
      const Octonion w = Octonion(z.real()) + z.imag() * j;
      const Octonion lv = eval(lfo, w);
      terms[k] = std::complex<double>{re(lv), inner(lv, j)} * e;
    }
    raw2 += pairwise_sum(terms, 0, terms.size()) * (spec.delta / m);
  }

  CountResult r;
  r.raw = raw;
  r.slice_deviation = std::abs(raw - raw2);
  r.count = static_cast<int>(std::lround(raw.real()));
  r.guard = std::abs(raw - std::complex<double>(r.count, 0.0));
  if (r.guard >= 0.05)
    throw NonIntegerCount("contour integral is not close to an integer");
  if (r.count < 0) throw NonIntegerCount("negative zero count");
  return r;
}

}  // namespace

RegularRational log_derivative(const SliceSeries& f) {
  return to_regular(log_derivative_real(symmetrize_real(f), {1.0}));
}

RegularRational log_derivative(const RegularRational& f) {
  return to_regular(log_derivative_impl(f));
}

CountResult contour_count(const SliceSeries& f, const ContourSpec& spec) {
  return contour_count_impl(RegularRational(f), spec);
}

CountResult contour_count(const RegularRational& f, const ContourSpec& spec) {
  return contour_count_impl(f, spec);
}

}  // namespace slicecalc
