// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "slicecalc/geometry.hpp"
#include "slicecalc/suites.hpp"
#include "slicecalc/zeros.hpp"

using namespace slicecalc;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, double margin) {
  std::printf("%s  criterion %2d: %s (worst margin %.3e)\n",
              pass ? "PASS" : "FAIL", criterion, what.c_str(), margin);
  if (!pass) ++failures;
}

const Octonion e1 = Octonion::basis(1);
const Octonion e2 = Octonion::basis(2);

SliceSeries convergent_series(Rng& rng, int degree) {
  std::vector<Octonion> c;
  const double a0 = 0.3 + 0.7 * rng.uniform();
  c.push_back(a0 * sample(rng, SampleTarget::kSphere));
  const double rho = 0.7;
  double scale = 0.6 * a0 * (1.0 - rho);
  for (int k = 1; k <= degree; ++k) {
    c.push_back(scale * sample(rng, SampleTarget::kBall));
    scale *= rho;
  }
  return SliceSeries(std::move(c));
}

void criterion_1() {
  // phi = w (1 + w I/2)^{-*} * (I/2 - w), f = phi * J, built by the toolkit
  const Octonion iv = e1, jv = e2, ij = e1 * e2;
  const RegularRational tail =
      star(reciprocal(SliceSeries({Octonion(1.0), 0.5 * iv})),
           RegularRational(SliceSeries({0.5 * iv, Octonion(-1.0)})));
  const RegularRational phi(shift(tail.num(), 1), tail.den());
  const RegularRational f = right_multiply(phi, jv);

  double worst = 0.0;
  const Octonion fp = eval(derivative(f), jv);
  worst = std::max(worst, norm(fp - (4.0 / 3.0) * (Octonion(2.0) - ij)));
  const Octonion r2 = second_remainder(f, jv);
  worst = std::max(worst, norm(r2 - (2.0 / 3.0) * (iv - 2.0 * jv)));
  worst = std::max(worst, norm(fp - bracket(jv, r2) - Octonion(8.0 / 3.0)));
  const BoundaryReport rep = boundary_modulus_derivative(f, jv);
  worst = std::max(worst, std::abs(rep.delta - 8.0 / 3.0));
  worst = std::max(worst, rep.imag_residual);
  const bool formula_ok = worst <= 1e-9;
  const double fd_err = std::abs(rep.fd_crosscheck - 8.0 / 3.0);
  report(1, "example 3.3: f'(J), R_{-J}R_J f(J), boundary derivative 8/3",
         formula_ok && fd_err <= 1e-3, 1e-9 - worst);
}

void criterion_2() {
  double basis_err = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const Octonion a = Octonion::basis(i), b = Octonion::basis(j);
      basis_err = std::max(basis_err, norm(a * b - cayley_dickson_mul(a, b)));
    }
  double rel = 0.0;
  for (int s = 0; s < 10000; ++s) {
    Rng rng = Rng::derive(42, 200, s);
    const Octonion a = sample(rng, SampleTarget::kAlgebra);
    const Octonion b = sample(rng, SampleTarget::kAlgebra);
    rel = std::max(rel, norm(a * b - cayley_dickson_mul(a, b)) /
                            std::max(1.0, norm(a) * norm(b)));
  }
  report(2, "Fano table == Cayley-Dickson (64 exact + 1e4 random)",
         basis_err == 0.0 && rel <= 1e-12, 1e-12 - rel);
}

void criterion_3() {
  double worst = 0.0;
  for (int s = 0; s < 10000; ++s) {
    Rng rng = Rng::derive(42, 300, s);
    const Octonion u = sample(rng, SampleTarget::kAlgebra);
    const Octonion v = sample(rng, SampleTarget::kAlgebra);
    const Octonion w = sample(rng, SampleTarget::kAlgebra);
    const double s3 = std::max(1.0, norm(u) * norm(v) * norm(w));
    const double s4 = std::max(1.0, norm_sq(u) * norm(v) * norm(w));
    worst = std::max(worst, norm((u * v * u) * w - u * (v * (u * w))) / s4);
    worst = std::max(worst, norm(w * (u * v * u) - ((w * u) * v) * u) / s4);
    worst = std::max(worst, norm((u * (v * w)) * u - (u * v) * (w * u)) / s4);
    worst = std::max(worst, norm(associator(u, u, v)) /
                                std::max(1.0, norm_sq(u) * norm(v)));
    worst = std::max(worst, norm(associator(u, v, v)) /
                                std::max(1.0, norm(u) * norm_sq(v)));
    worst = std::max(worst, std::abs(norm(u * v) - norm(u) * norm(v)) /
                                std::max(1.0, norm(u) * norm(v)));
    const Octonion alpha = sample(rng, SampleTarget::kSphere);
    const double s2 = std::max(1.0, norm(u) * norm(v));
    worst = std::max(
        worst, std::abs(inner(alpha * u, alpha * v) - inner(u, v)) / s2);
    worst = std::max(
        worst, std::abs(inner(u * alpha, v * alpha) - inner(u, v)) / s2);
    const Octonion a = associator(u, v, w);
    worst = std::max(worst, std::abs(inner(u, a)) / (s3 * std::max(1.0, norm(u))));
    worst = std::max(worst, std::abs(re(a)) / s3);
  }
  report(3, "algebra battery (Moufang, alternativity, norms, lemmas)",
         worst <= 1e-10, 1e-10 - worst);
}

void criterion_4() {
  const int degree = 32;
  double worst = 0.0;
  for (int s = 0; s < 1000; ++s) {
    Rng rng = Rng::derive(42, 400, s);
    const SliceSeries f = convergent_series(rng, degree);
    const SliceSeries g = convergent_series(rng, degree);
    const SliceSeries fg = star(f, g);
    {
      const SliceSeries d = sub(regular_conjugate(fg),
                                star(regular_conjugate(g), regular_conjugate(f)));
      for (const Octonion& c : d.coeffs()) worst = std::max(worst, norm(c));
    }
    {
      const std::vector<double> lhs = symmetrize_real(fg);
      const std::vector<double> rhs =
          conv_real(symmetrize_real(f), symmetrize_real(g));
      for (size_t k = 0; k < lhs.size(); ++k)
        worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
    }
    {
      const SliceSeries prod = star(reciprocal_series(f, 64), f);
      worst = std::max(worst, norm(prod.coeff(0) - Octonion(1.0)));
      for (int n = 1; n <= 64; ++n) worst = std::max(worst, norm(prod.coeff(n)));
    }
    {
      const RegularRational lhs = reciprocal(fg);
      const RegularRational rhs = star(reciprocal(g), reciprocal(f));
      const Octonion w = 0.8 * sample(rng, SampleTarget::kBall);
      worst = std::max(worst, norm(eval(lhs, w) - eval(rhs, w)));
    }
    {
      const Frame frame = sample_frame(rng);
      for (int t = 0; t < 100; ++t) {
        const double rad = 0.8 * std::sqrt(rng.uniform());
        const double ang = 2.0 * std::numbers::pi * rng.uniform();
        const double x = rad * std::cos(ang), y = rad * std::sin(ang);
        worst = std::max(worst, norm(eval(fg, Octonion(x) + y * frame.i()) -
                                     star_via_splitting(f, g, frame, {x, y})));
      }
    }
    {
      const double x = -0.9 + 1.8 * rng.uniform();
      worst = std::max(worst, norm(eval(fg, Octonion(x)) -
                                   eval(f, Octonion(x)) * eval(g, Octonion(x))));
    }
  }
  report(4, "series battery (conj, sym, reciprocal, splitting-star, real pts)",
         worst <= 1e-8, 1e-8 - worst);
}

void criterion_5() {
  double worst = 0.0;
  for (int s = 0; s < 1000; ++s) {
    Rng rng = Rng::derive(42, 500, s);
    std::vector<Octonion> fc, gc;
    for (int k = 0; k < 7; ++k) {
      fc.push_back(sample_quaternion(rng, SampleTarget::kBall));
      gc.push_back(sample_quaternion(rng, SampleTarget::kBall));
    }
    const SliceSeries f(fc), g(gc);
    const Octonion q = 0.8 * sample_quaternion(rng, SampleTarget::kBall);
    try {
      worst = std::max(worst, pointwise_star_check(f, g, q).quat_identity);
    } catch (const ZeroAtPoint&) {
      worst = std::max(worst, norm(eval(star(f, g), q)));
    }
  }
  bool witness = false;
  double dev = 0.0, ids = 0.0;
  for (int s = 0; s < 4000 && !witness; ++s) {
    Rng rng = Rng::derive(42, 501, s);
    std::vector<Octonion> fc, gc;
    for (int k = 0; k < 5; ++k) {
      fc.push_back(sample_quaternion(rng, SampleTarget::kBall));
      gc.push_back(sample(rng, SampleTarget::kBall));
    }
    const Octonion q = 0.7 * sample_quaternion(rng, SampleTarget::kBall);
    try {
      const PointwiseStarResult r =
          pointwise_star_check(SliceSeries(fc), SliceSeries(gc), q);
      if (r.quat_identity > 1e-3 && r.octo_inner_identity <= 1e-10 &&
          r.octo_modulus_identity <= 1e-10) {
        witness = true;
        dev = r.quat_identity;
        ids = std::max(r.octo_inner_identity, r.octo_modulus_identity);
      }
    } catch (const ZeroAtPoint&) {
    }
  }
  report(5, "quaternionic pointwise star 1e3 samples + camshaft witness",
         worst <= 1e-9 && witness, 1e-9 - worst);
  if (witness)
    std::printf("      witness deviation %.3e with both identities <= %.3e\n",
                dev, ids);
}

void criterion_6() {
  const RegularRational f = make_mobius(Octonion(0.5), Octonion(1.0));
  const BoundaryReport rep = quaternionic_bounds(f, Octonion(1.0));
  const double worst =
      std::max({std::abs(rep.delta - 3.0), std::abs(rep.sharp_bound - 3.0),
                std::abs(rep.osserman_bound - 1.0 / 3.0)});
  report(6, "a = 1/2 Mobius: delta = sharp = 3 against Osserman 1/3",
         worst <= 1e-12, 1e-12 - worst);
}

void criterion_7() {
  double min_margin = 1e300, max_resid = 0.0;
  for (int s = 0; s < 200; ++s) {
    Rng rng = Rng::derive(42, 700, s);
    const ContactMap m = sample_contact_self_map(rng, false);
    const BoundaryReport rep = boundary_modulus_derivative(m.f, m.xi);
    min_margin = std::min(min_margin, rep.delta - rep.lower_bound_eq11);
    max_resid = std::max(max_resid, rep.imag_residual);
  }
  double eq_worst = 0.0;
  Rng rng = Rng::derive(42, 701);
  for (double a : {-1.0, -0.5, 0.0, 0.5}) {
    const Octonion xi = sample(rng, SampleTarget::kSphere);
    const BoundaryReport rep =
        boundary_modulus_derivative(make_extremal(a, xi), xi);
    eq_worst = std::max(eq_worst, std::abs(rep.delta - rep.fixed_point_bound));
  }
  report(7, "boundary Schwarz on 200 self-maps + extremal equality",
         min_margin >= -1e-8 && max_resid <= 1e-8 && eq_worst <= 1e-8,
         std::min(min_margin + 1e-8, 1e-8 - eq_worst));
}

void criterion_8() {
  double mobius_worst = 0.0;
  Rng rng = Rng::derive(42, 800);
  for (int s = 0; s < 20; ++s) {
    const Octonion u = 0.6 * sample_quaternion(rng, SampleTarget::kBall);
    const Octonion v = sample_quaternion(rng, SampleTarget::kSphere);
    const RegularRational f = make_mobius(u, v);
    const Octonion xi = sample_quaternion(rng, SampleTarget::kSphere);
    const double alpha = quaternionic_bounds(f, xi).delta;
    const Octonion eta = eval(f, xi);
    for (int t = 0; t < 5; ++t) {
      const Octonion q = 0.9 * sample_quaternion(rng, SampleTarget::kBall);
      const JuliaResult jr = julia_check(f, xi, eta, alpha, q);
      mobius_worst = std::max(mobius_worst, std::abs(jr.lhs - jr.rhs));
    }
  }
  double min_margin = 1e300;
  for (int s = 0; s < 100; ++s) {
    Rng rng2 = Rng::derive(42, 801, s);
    const ContactMap m = sample_contact_self_map(rng2, true);
    const double alpha = quaternionic_bounds(m.f, m.xi).delta;
    const Octonion eta = eval(m.f, m.xi);
    const Octonion q = 0.9 * sample_quaternion(rng2, SampleTarget::kBall);
    const JuliaResult jr = julia_check(m.f, m.xi, eta, alpha, q);
    min_margin = std::min(min_margin, jr.lhs - jr.rhs);
  }
  const JuliaResult sq = julia_check(make_monomial_rotation(2, Octonion(1.0)),
                                     Octonion(1.0), Octonion(1.0), 2.0,
                                     Octonion(0.5));
  const double sq_err = std::max(std::abs(sq.lhs - 5.0 / 3.0),
                                 std::abs(sq.rhs - 1.5));
  report(8, "Julia: Mobius equality, 100 self-maps, q^2 gives 5/3 vs 3/2",
         mobius_worst <= 1e-9 && min_margin >= -1e-8 && sq_err <= 1e-12,
         std::min(1e-9 - mobius_worst, min_margin + 1e-8));
}

void criterion_9() {
  DiameterSampling ds;
  Rng rng = Rng::derive(42, 900);
  double affine_worst = 0.0;
  const SliceSeries affine({0.2 * sample(rng, SampleTarget::kBall),
                            sample(rng, SampleTarget::kSphere)});
  const std::vector<double> grid{0.25, 0.5, 0.75};
  const LandauToeplitzReport a = landau_toeplitz_check(affine, grid, ds);
  for (size_t k = 0; k < grid.size(); ++k)
    affine_worst = std::max(affine_worst,
                            std::abs(a.dtilde[k] - 2.0 * grid[k]) /
                                (2.0 * grid[k]));
  // exactly normalized maps: dtilde(f(B)) = 2 by construction
  std::vector<SliceSeries> normalized{affine, SliceSeries::identity()};
  {
    std::vector<Octonion> c(4);
    c[1] = Octonion(1.0 / 1.1);
    c[3] = Octonion(0.1 / 1.1);
    normalized.push_back(SliceSeries(c));
    std::vector<Octonion> c2(6);
    c2[1] = 0.8 * Octonion::basis(2);
    c2[5] = 0.2 * Octonion::basis(2);
    normalized.push_back(SliceSeries(c2));
  }
  bool monotone = true, deriv_ok = true, bound_ok = true;
  for (const SliceSeries& f : normalized) {
    const LandauToeplitzReport rep = landau_toeplitz_check(f, grid, ds);
    monotone = monotone && rep.ratio_monotone;
    deriv_ok = deriv_ok && rep.derivative_bound_holds;
    bound_ok = bound_ok && rep.bound_holds;
  }
  report(9, "Landau-Toeplitz: affine 2r within 1%, monotone ratio, |f'(0)|<=1",
         affine_worst <= 0.01 && monotone && deriv_ok && bound_ok,
         0.01 - affine_worst);
}

void criterion_10() {
  DiameterSampling ds;
  std::vector<Octonion> c(3);
  c[2] = e1;
  const CauchyEstimate sq = cauchy_estimate_check(SliceSeries(c), 2, ds);
  const double eq_err = std::abs(sq.rhs - sq.lhs) / std::max(1.0, sq.lhs);
  std::vector<Octonion> c2(4);
  c2[1] = Octonion(1.0);
  c2[3] = Octonion(0.1);
  const CauchyEstimate strict = cauchy_estimate_check(SliceSeries(c2), 3, ds);
  report(10, "Cauchy estimate: w^2 e1 equality within 2%, strict at n = 3",
         eq_err <= 0.02 && strict.margin > kSampleTol, 0.02 - eq_err);
}

void criterion_11() {
  const UnitImaginary slice(e2);
  Rng rng = Rng::derive(42, 1100);
  const UnitImaginary other = sample_unit_imaginary(rng);
  bool ok = true;
  double guard = 0.0;
  const auto check = [&](const SliceSeries& f, const ContourSpec& spec,
                         int expect) {
    const CountResult a = contour_count(f, spec);
    const ContourSpec spec2(spec.x0, spec.y0, spec.delta, other, spec.nodes);
    const CountResult b = contour_count(f, spec2);
    ok = ok && a.count == expect && b.count == expect && a.guard < 0.05;
    guard = std::max(guard, a.guard);
  };
  check(SliceSeries({-e1, Octonion(1.0)}), ContourSpec(0, 1, 0.3, slice, 4096), 2);
  check(SliceSeries::constant(Octonion(1.0)),
        ContourSpec(0.3, 0.4, 0.2, slice, 4096), 0);
  check(SliceSeries({Octonion(1.0), Octonion(0.0), Octonion(1.0)}),
        ContourSpec(0, 1, 0.3, slice, 4096), 4);
  check(SliceSeries({Octonion(-0.5), Octonion(1.0)}),
        ContourSpec(0.5, 0, 0.2, slice, 4096), 2);
  report(11, "zero counting: q-e1 -> 2, 1 -> 0, q^2+1 -> 4, q-1/2 -> 2",
         ok, 0.05 - guard);
}

void criterion_12() {
  const RegularRational koebe = make_koebe(UnitImaginary(e1), 0.0);
  double eq_worst = 0.0;
  for (double r : {0.3, 0.6, 0.9}) {
    eq_worst = std::max(eq_worst, std::abs(norm(eval(koebe, Octonion(r))) -
                                           r / ((1 - r) * (1 - r))));
    eq_worst = std::max(eq_worst, std::abs(norm(eval(koebe, Octonion(-r))) -
                                           r / ((1 + r) * (1 + r))));
  }
  double min_margin = 1e300;
  for (int s = 0; s < 1000; ++s) {
    Rng rng = Rng::derive(42, 1200, s);
    const Octonion w = 0.9 * sample(rng, SampleTarget::kBall);
    if (norm(w) < 1e-3) continue;
    const GrowthMargins m = growth_distortion_check(koebe, w);
    min_margin = std::min({min_margin, m.growth_lower, m.growth_upper,
                           m.distortion_lower, m.distortion_upper,
                           m.ratio_lower, m.ratio_upper});
  }
  double min_mod = 1e300;
  for (int k = 0; k < 512; ++k) {
    const double th = 2.0 * std::numbers::pi * k / 512;
    min_mod = std::min(min_mod,
                       norm(eval(koebe, 0.999 * (std::cos(th) * Octonion(1.0) +
                                                 std::sin(th) * e1))));
  }
  Rng rng = Rng::derive(42, 1201);
  for (int k = 0; k < 500; ++k)
    min_mod = std::min(min_mod, norm(eval(koebe, 0.999 * sample(
                                                     rng, SampleTarget::kSphere))));
  report(12, "Koebe growth/distortion equality and quarter covering",
         eq_worst <= 1e-9 && min_margin >= -1e-9 && min_mod >= 0.249,
         std::min({1e-9 - eq_worst, min_margin + 1e-9, min_mod - 0.249}));
}

void criterion_13() {
  double repr_worst = 0.0, convex_worst = 0.0;
  for (int s = 0; s < 1000; ++s) {
    Rng rng = Rng::derive(42, 1300, s);
    const SliceSeries f = convergent_series(rng, 8);
    const UnitImaginary i = sample_unit_imaginary(rng);
    const UnitImaginary j = sample_unit_imaginary(rng);
    const double x = 0.6 * (2.0 * rng.uniform() - 1.0);
    const double y = 0.05 + 0.55 * rng.uniform();
    const Octonion z = Octonion(x) + y * i.value();
    const Octonion w = Octonion(x) + y * j.value();
    repr_worst = std::max(
        repr_worst,
        norm(representation_eval(eval(f, z), eval(f, conj(z)), i, j) -
             eval(f, w)));
    std::vector<Octonion> cc;
    for (int k = 0; k < 6; ++k)
      cc.push_back(rng.gaussian() * Octonion(1.0) + rng.gaussian() * i.value());
    convex_worst = std::max(
        convex_worst,
        convex_combination_check(RegularRational{SliceSeries(cc)}, x, y, i, j));
  }
  report(13, "representation formula and convex combination, 1e3 tuples",
         repr_worst <= 1e-9 && convex_worst <= 1e-9,
         1e-9 - std::max(repr_worst, convex_worst));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  criterion_13();
  std::printf("%d/13 criteria passed\n", 13 - failures);
  return failures == 0 ? 0 : 1;
}
