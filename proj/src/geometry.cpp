#include "slicecalc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "slicecalc/errors.hpp"

namespace slicecalc {

namespace {

constexpr double kContactTol = 1e-8;

void require_contact(const RegularRational& f, const Octonion& xi) {
  if (std::abs(norm(eval(f, xi)) - 1.0) > kContactTol)
    throw NotContactPoint("|f(xi)| != 1 at the given boundary point");
}

double one_sided_fd(const RegularRational& f, const Octonion& xi) {
  const double h = 1e-4;
  return (norm(eval(f, xi)) - norm(eval(f, (1.0 - h) * xi))) / h;
}

double lower_bound_eq11(const Octonion& f0, const Octonion& fxi) {
  const double s = inner(f0, fxi);
  return (1.0 - s) * (1.0 - s) / (1.0 - norm_sq(f0));
}

}  // namespace

BoundaryReport boundary_modulus_derivative(const RegularRational& f,
                                           const Octonion& xi) {
  require_contact(f, xi);
  const Octonion fxi = eval(f, xi);
  const Octonion f0 = eval(f, Octonion(0.0));
  const RegularRational fp = derivative(f);
  const Octonion fpxi = eval(fp, xi);
  const Octonion r2 = second_remainder(f, xi);

  BoundaryReport rep;
  rep.raw = conj(xi) * (fxi * conj(fpxi) + bracket(conj(xi), fxi * conj(r2)) +
                        2.0 * associator(xi, fxi, r2));
  rep.delta = re(rep.raw);
  rep.imag_residual = norm(im(rep.raw));
  rep.lower_bound_eq11 = lower_bound_eq11(f0, fxi);
  if (norm(f0) <= 1e-10 && norm(fxi - xi) <= kContactTol)
    rep.fixed_point_bound = 2.0 / (1.0 + re(eval(fp, Octonion(0.0))));
  rep.fd_crosscheck = one_sided_fd(f, xi);
  return rep;
}

BoundaryReport quaternionic_bounds(const RegularRational& f,
                                   const Octonion& xi) {
  if (!is_quaternionic(f) || !is_quaternion(xi, kAlgTol))
    throw NonQuaternionic("quaternionic bounds need quaternionic data");
  require_contact(f, xi);
  const Octonion fxi = eval(f, xi);
  const Octonion f0 = eval(f, Octonion(0.0));
  const RegularRational fp = derivative(f);
  const Octonion fpxi = eval(fp, xi);
  const Octonion fp0 = eval(fp, Octonion(0.0));
  const Octonion r2 = second_remainder(f, xi);

  BoundaryReport rep;
  rep.raw = conj(xi) * (fxi * conj(fpxi) + bracket(conj(xi), fxi * conj(r2)));
  rep.delta = re(rep.raw);
  rep.imag_residual = norm(im(rep.raw));
  rep.lower_bound_eq11 = lower_bound_eq11(f0, fxi);
  rep.fd_crosscheck = one_sided_fd(f, xi);
  if (norm(f0) <= 1e-10 && norm(fxi - xi) <= kContactTol)
    rep.fixed_point_bound = 2.0 / (1.0 + re(fp0));

  // sharp bound through S = Re(f'(0)(f(xi)-f(0))^{-1} xi (1-f(0) conj(f(xi)))^{-1})
  const double s =
      re(((fp0 * inverse(fxi - f0)) * xi) * inverse(Octonion(1.0) - f0 * conj(fxi)));
  rep.sharp_bound = 2.0 / (s + (1.0 - norm_sq(f0)) / norm_sq(fxi - f0));
  rep.osserman_bound = 2.0 * (1.0 - norm(f0)) * (1.0 - norm(f0)) /
                       (1.0 - norm_sq(f0) + norm(fp0));

  const int n = vanishing_order(f.num());
  rep.vanishing_order = n;
  if (n >= 1 && n <= f.num().degree()) {
    // h = q^{-n} f
    std::vector<Octonion> hc(f.num().coeffs().begin() + n,
                             f.num().coeffs().end());
    const RegularRational h(SliceSeries(std::move(hc)), f.den());
    const Octonion h0 = eval(h, Octonion(0.0));
    const Octonion hxi = eval(h, xi);
    if (std::abs(norm(h0) - 1.0) <= 1e-10) {
      rep.part_ii_bound = n;
      rep.extremal_monomial = true;
    } else {
      const Octonion hp0 = eval(derivative(h), Octonion(0.0));
      const double t = re(((hp0 * inverse(hxi - h0)) * xi) *
                          inverse(Octonion(1.0) - h0 * conj(hxi)));
      rep.part_ii_bound =
          n + 2.0 / (t + (1.0 - norm_sq(h0)) / norm_sq(hxi - h0));
    }
  }
  return rep;
}

JuliaResult julia_check(const RegularRational& f, const Octonion& xi,
                        const Octonion& eta, double alpha, const Octonion& q) {
  if (alpha <= 0.0) throw BadParameter("julia: alpha must be positive");
  // regular quotients evaluated through the rational representation
  const RegularRational lhs_fun =
      star(reciprocal(affine_in(f, conj(eta), -1.0)),
           affine_in(f, conj(eta), +1.0));
  const RegularRational id{SliceSeries::identity()};
  const RegularRational rhs_fun =
      star(reciprocal(affine_in(id, conj(xi), -1.0)),
           affine_in(id, conj(xi), +1.0));
  JuliaResult r;
  r.lhs = re(eval(lhs_fun, q));
  r.rhs = re(eval(rhs_fun, q)) / alpha;
  r.holds = r.lhs >= r.rhs - 1e-9;
  return r;
}

double modulus_inequality_check(const RegularRational& f, const Octonion& w) {
  const Octonion fw = eval(f, w);
  const Octonion f0 = eval(f, Octonion(0.0));
  const double s = inner(f0, fw);
  return (1.0 - norm_sq(fw)) / (1.0 - norm_sq(w)) -
         (1.0 - s) * (1.0 - s) / (1.0 - norm_sq(f0));
}

double convex_combination_check(const RegularRational& f, double x, double y,
                                const UnitImaginary& i,
                                const UnitImaginary& j) {
  const Octonion iv = i.value();
  for (const Octonion& a : f.num().coeffs()) {
    const Octonion proj = re(a) * Octonion(1.0) + inner(a, iv) * iv;
    if (norm(a - proj) > 1e-12)
      throw HypothesisViolated("coefficients leave the plane C_I");
  }
  const double c = inner(iv, j.value());
  const Octonion z = Octonion(x) + y * iv;
  const Octonion w = Octonion(x) + y * j.value();
  const double lhs = norm_sq(eval(f, w));
  const double rhs = 0.5 * (1.0 + c) * norm_sq(eval(f, z)) +
                     0.5 * (1.0 - c) * norm_sq(eval(f, conj(z)));
  return std::abs(lhs - rhs);
}

PointwiseStarResult pointwise_star_check(const SliceSeries& f,
                                         const SliceSeries& g,
                                         const Octonion& w) {
  const Octonion fw = eval(f, w);
  if (norm(fw) < 1e-10) throw ZeroAtPoint("f vanishes at the point");
  const Octonion fg = eval(star(f, g), w);
  const Octonion wt = (inverse(fw) * w) * fw;
  const Octonion pointwise = fw * eval(g, wt);

  PointwiseStarResult r;
  r.quat_identity = norm(fg - pointwise);
  const Octonion iw = imaginary_unit_of(w).value();
  r.octo_inner_identity = std::abs(inner(iw, fg) - inner(iw, pointwise));

  const std::vector<double> fs = symmetrize_real(f);
  const Octonion fcw = eval(regular_conjugate(f), w);
  const std::complex<double> fsz =
      eval_complex(fs, {re(w), norm(im(w))});  // f^s(w) in slice coordinates
  const Octonion fsw = fsz.real() * Octonion(1.0) + fsz.imag() * iw;
  if (norm(fsw) < 1e-10 || norm(fcw) < 1e-10)
    throw ZeroAtPoint("f^s vanishes at the point");
  const double lhs = norm(inverse(fsw) * fcw);
  const Octonion wt2 = (inverse(fcw) * w) * fcw;
  r.octo_modulus_identity = std::abs(lhs - 1.0 / norm(eval(f, wt2)));
  return r;
}

Octonion t_transform(const SliceSeries& f, const Octonion& q) {
  if (!is_quaternionic(f) || !is_quaternion(q, kAlgTol))
    throw NonQuaternionic("T_f is defined for quaternionic data");
  const std::vector<double> fs = symmetrize_real(f);
  std::complex<double> z{re(q), norm(im(q))};
  if (std::abs(eval_complex(fs, z)) < 1e-10)
    throw ZeroOfSymmetrization("f^s vanishes on the sphere of q");
  const Octonion fcq = eval(regular_conjugate(f), q);
  return (inverse(fcq) * q) * fcq;
}

// --- diameters -------------------------------------------------------------

namespace {

double max_pairwise_distance(const std::vector<Octonion>& pts) {
  double best = 0.0;
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b)
      best = std::max(best, norm_sq(pts[a] - pts[b]));
  return std::sqrt(best);
}

}  // namespace

DiameterEstimate diameters(const SliceSeries& f, double r,
                           DiameterEstimate::Kind kind,
                           const DiameterSampling& sampling) {
  DiameterEstimate est;
  est.kind = kind;
  est.r = r;
  switch (kind) {
    case DiameterEstimate::Kind::kRegular: {
      // max over sampled u, v and |w| = r of |f_u(w) - f_v(w)|; the maximum
      // principle justifies sampling w on the boundary shell only.
      const std::vector<Octonion> dirs =
          diameter_directions(sampling.directions);
      Rng rng = Rng::derive(sampling.seed, 101);
      // +-r are always sampled: every pair of ball points is f_u(t), f_v(t)
      // at a real t, so real w dominate the Euclidean diameter on matched
      // direction sets
      std::vector<Octonion> wdirs{Octonion(1.0), Octonion(-1.0)};
      for (int k = 0; k < sampling.boundary_points; ++k)
        wdirs.push_back(sample(rng, SampleTarget::kSphere));
      std::vector<std::vector<Octonion>> values(
          wdirs.size(), std::vector<Octonion>(dirs.size()));
      for (size_t d = 0; d < dirs.size(); ++d) {
        const SliceSeries fu = compose_with_unit(f, dirs[d]);
        for (size_t m = 0; m < wdirs.size(); ++m)
          values[m][d] = eval(fu, r * wdirs[m]);
      }
      double best = 0.0;
      for (const auto& row : values)
        best = std::max(best, max_pairwise_distance(row));
      est.value = best;
      est.n_samples = static_cast<int>(dirs.size() * wdirs.size());
      break;
    }
    case DiameterEstimate::Kind::kSlice: {
      Rng rng = Rng::derive(sampling.seed, 102);
      double best = 0.0;
      int count = 0;
      for (int s = 0; s < sampling.slices; ++s) {
        const Octonion i = sample(rng, SampleTarget::kUnitImaginary);
        std::vector<Octonion> pts;
        pts.reserve(sampling.angles);
        for (int a = 0; a < sampling.angles; ++a) {
          const double th = 2.0 * std::numbers::pi * a / sampling.angles;
          const Octonion w = r * (std::cos(th) * Octonion(1.0) +
                                  std::sin(th) * i);
          pts.push_back(eval(f, w));
          ++count;
        }
        best = std::max(best, max_pairwise_distance(pts));
      }
      est.value = best;
      est.n_samples = count;
      break;
    }
    case DiameterEstimate::Kind::kEuclidean: {
      const std::vector<Octonion> dirs =
          diameter_directions(sampling.directions);
      std::vector<Octonion> pts;
      pts.reserve(dirs.size());
      for (const Octonion& u : dirs) pts.push_back(eval(f, r * u));
      est.value = max_pairwise_distance(pts);
      est.n_samples = static_cast<int>(dirs.size() * (dirs.size() - 1) / 2);
      break;
    }
  }
  return est;
}

LandauToeplitzReport landau_toeplitz_check(const SliceSeries& f,
                                           const std::vector<double>& r_grid,
                                           const DiameterSampling& s) {
  LandauToeplitzReport rep;
  rep.r_grid = r_grid;
  for (double r : r_grid) {
    const double d =
        diameters(f, r, DiameterEstimate::Kind::kRegular, s).value;
    rep.dtilde.push_back(d);
    rep.ratio.push_back(d / (2.0 * r));
  }
  rep.bound_holds = true;
  for (size_t k = 0; k < r_grid.size(); ++k)
    if (rep.dtilde[k] > 2.0 * r_grid[k] + kSampleTol) rep.bound_holds = false;
  rep.ratio_monotone = true;
  for (size_t k = 1; k < rep.ratio.size(); ++k)
    if (rep.ratio[k] < rep.ratio[k - 1] - 1e-3) rep.ratio_monotone = false;
  rep.derivative_norm = norm(derivative(f).coeff(0));
  rep.derivative_bound_holds = rep.derivative_norm <= 1.0 + 1e-9;
  return rep;
}

CauchyEstimate cauchy_estimate_check(const SliceSeries& f, int n,
                                     const DiameterSampling& s) {
  CauchyEstimate est;
  est.lhs = n <= f.degree() ? norm(f.coeff(n)) : 0.0;
  est.rhs =
      0.5 * diameters(f, 0.999, DiameterEstimate::Kind::kEuclidean, s).value;
  est.margin = est.rhs - est.lhs;
  return est;
}

GrowthMargins growth_distortion_check(const RegularRational& f,
                                      const Octonion& w) {
  const double r = norm(w);
  if (r >= 1.0) throw BadParameter("growth bounds need |w| < 1");
  GrowthMargins m;
  m.value = norm(eval(f, w));
  const RegularRational fp = derivative(f);
  m.deriv = norm(eval(fp, w));
  // w f'(w) * f^{-*}(w) = w ((den num' - den' num) * num^c) / (den num^s);
  // the den factor shared by f' and (f^s)^{-1} is cancelled up front and the
  // removable power of w at the origin afterwards, keeping the denominator
  // well clear of the pole guard on the closed ball
  const SliceSeries dnum = sub(scale_poly(f.den(), derivative(f.num())),
                               scale_poly(der_real(f.den()), f.num()));
  const RegularRational ratio_fun = reduce_common_origin_zeros(RegularRational(
      shift(star(dnum, regular_conjugate(f.num())), 1),
      conv_real(f.den(), symmetrize_real(f.num()))));
  m.star_ratio = norm(eval(ratio_fun, w));

  const double gl = r / ((1.0 + r) * (1.0 + r));
  const double gu = r / ((1.0 - r) * (1.0 - r));
  const double dl = (1.0 - r) / std::pow(1.0 + r, 3);
  const double du = (1.0 + r) / std::pow(1.0 - r, 3);
  const double rl = (1.0 - r) / (1.0 + r);
  const double ru = (1.0 + r) / (1.0 - r);
  m.growth_lower = m.value - gl;
  m.growth_upper = gu - m.value;
  m.distortion_lower = m.deriv - dl;
  m.distortion_upper = du - m.deriv;
  m.ratio_lower = m.star_ratio - rl;
  m.ratio_upper = ru - m.star_ratio;
  return m;
}

InnerEstimate inner_boundary_estimate(const RegularRational& f,
                                      const Octonion& xi, double t) {
  if (t <= -1.0 || t >= 1.0)
    throw BadParameter("inner estimate needs t in (-1, 1)");
  const BoundaryReport bounds = quaternionic_bounds(f, xi);
  const double d = bounds.delta;
  const Octonion fxi = eval(f, xi);
  InnerEstimate est;
  est.delta = d;
  est.margin = inner(eval(f, t * xi), fxi) -
               ((d + 1.0) * t - (d - 1.0)) / ((d + 1.0) - (d - 1.0) * t);
  const RegularRational fpp = derivative(derivative(f));
  est.second_derivative_margin =
      inner((xi * xi) * eval(fpp, xi), fxi) - d * (d - 1.0);
  return est;
}

ExtremumScanReport extremum_scan(const RegularRational& f,
                                 const ExtremumGrid& grid) {
  ExtremumScanReport rep;
  Rng rng = Rng::derive(grid.seed, 103);
  const RegularRational fp = derivative(f);

  double lo = std::numeric_limits<double>::max(), hi = 0.0;
  rep.shell_max_on_outer = true;
  for (int s = 0; s < grid.slices; ++s) {
    const Octonion i = sample(rng, SampleTarget::kUnitImaginary);
    std::vector<std::vector<double>> vals(
        grid.shells, std::vector<double>(grid.angles, 0.0));
    std::vector<double> shell_max(grid.shells, 0.0);
    for (int k = 0; k < grid.shells; ++k) {
      const double r = grid.r_min + (grid.r_max - grid.r_min) * k /
                                        std::max(1, grid.shells - 1);
      for (int a = 0; a < grid.angles; ++a) {
        const double th = 2.0 * std::numbers::pi * a / grid.angles;
        const Octonion w =
            r * (std::cos(th) * Octonion(1.0) + std::sin(th) * i);
        const double v = norm(eval(f, w));
        vals[k][a] = v;
        shell_max[k] = std::max(shell_max[k], v);
        rep.max_derivative = std::max(rep.max_derivative, norm(eval(fp, w)));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    const double outer = shell_max.back();
    for (int k = 0; k + 1 < grid.shells; ++k)
      if (shell_max[k] > outer * (1.0 + 1e-12) + 1e-14)
        rep.shell_max_on_outer = false;
    // grid local minima off the real axis, informational only
    for (int k = 1; k + 1 < grid.shells; ++k) {
      const double r = grid.r_min + (grid.r_max - grid.r_min) * k /
                                        std::max(1, grid.shells - 1);
      for (int a = 0; a < grid.angles; ++a) {
        const double th = 2.0 * std::numbers::pi * a / grid.angles;
        if (std::abs(std::sin(th)) * r < 2.0 * grid.axis_step) continue;
        const int al = (a + grid.angles - 1) % grid.angles;
        const int ar = (a + 1) % grid.angles;
        const double v = vals[k][a];
        if (v < vals[k - 1][a] && v < vals[k + 1][a] && v < vals[k][al] &&
            v < vals[k][ar] && rep.off_axis_minima.size() < 64)
          rep.off_axis_minima.push_back(
              {r * (std::cos(th) * Octonion(1.0) + std::sin(th) * i), v});
      }
    }
  }
  rep.max_modulus = hi;
  if (hi - lo <= 1e-13 * (1.0 + hi)) {
    rep.constant = true;
    rep.shell_max_on_outer = true;
    return rep;
  }

  // real-axis scan for interior local minima
  std::vector<double> xs, vs;
  for (double x = -grid.r_max; x <= grid.r_max + 1e-15; x += grid.axis_step) {
    xs.push_back(x);
    vs.push_back(norm(eval(f, Octonion(x))));
  }
  for (size_t k = 1; k + 1 < xs.size(); ++k) {
    if (vs[k] <= vs[k - 1] && vs[k] <= vs[k + 1] &&
        (vs[k] < vs[k - 1] || vs[k] < vs[k + 1])) {
      InteriorMinimum m;
      m.location = xs[k];
      m.value = vs[k];
      m.consistent_with_zero =
          vs[k] <= 10.0 * grid.axis_step * rep.max_derivative;
      rep.real_axis_minima.push_back(m);
    }
  }
  return rep;
}

}  // namespace slicecalc
