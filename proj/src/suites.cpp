#include "slicecalc/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "slicecalc/errors.hpp"
#include "slicecalc/zeros.hpp"

namespace slicecalc {

namespace {

class Battery {
 public:
  explicit Battery(std::string suite) : suite_(std::move(suite)) {}

  // pass iff margin >= 0
  void add(const std::string& name, double margin,
           const std::string& details = "") {
    cases_.push_back({name, margin >= 0.0, margin, details});
  }

  void add_flag(const std::string& name, bool ok,
                const std::string& details = "") {
    cases_.push_back({name, ok, ok ? 0.0 : -1.0, details});
  }

  Report finish() && {
    std::sort(cases_.begin(), cases_.end(),
              [](const CaseResult& a, const CaseResult& b) {
                return a.name < b.name;
              });
    Report r;
    r.suite = suite_;
    r.cases = std::move(cases_);
    r.pass = std::ranges::all_of(r.cases,
                                 [](const CaseResult& c) { return c.pass; });
    return r;
  }

 private:
  std::string suite_;
  std::vector<CaseResult> cases_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

double rel(double err, double scale) { return err / std::max(1.0, scale); }

SliceSeries random_series(Rng& rng, int degree, bool quaternionic = false,
                          double floor_a0 = 0.0) {
  std::vector<Octonion> c;
  c.reserve(degree + 1);
  for (int k = 0; k <= degree; ++k)
    c.push_back(quaternionic ? sample_quaternion(rng, SampleTarget::kBall)
                             : sample(rng, SampleTarget::kBall));
  if (floor_a0 > 0.0) {
    Octonion a0 = c[0];
    const double n = norm(a0);
    if (n < floor_a0) a0 = (n < 1e-9 ? Octonion(floor_a0) : a0 * (floor_a0 / n));
    c[0] = a0;
  }
  return SliceSeries(std::move(c));
}

// Convergent-series profile: |a_0| in [0.3, 1] and a geometrically decaying
// tail summing below |a_0|, so f and f^s are zero free on the closed ball
// and the reciprocal Taylor coefficients stay bounded.  (With unconstrained
// ball coefficients the reciprocal coefficients grow like r^-n for an
// interior zero radius r and drown every fixed tolerance.)
SliceSeries random_convergent_series(Rng& rng, int degree,
                                     bool quaternionic = false) {
  const auto draw = [&](SampleTarget t) {
    return quaternionic ? sample_quaternion(rng, t) : sample(rng, t);
  };
  std::vector<Octonion> c;
  c.reserve(degree + 1);
  const double a0 = 0.3 + 0.7 * rng.uniform();
  c.push_back(a0 * draw(SampleTarget::kSphere));
  const double rho = 0.7;
  double scale = 0.6 * a0 * (1.0 - rho);
  for (int k = 1; k <= degree; ++k) {
    c.push_back(scale * draw(SampleTarget::kBall));
    scale *= rho;
  }
  return SliceSeries(std::move(c));
}


// --- algebra -----------------------------------------------------------------

Report suite_algebra(const SuiteConfig& cfg) {
  Battery b("algebra");
  const int n = cfg.samples * 10;

  {
    double worst = 0.0;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        const Octonion ei = Octonion::basis(i), ej = Octonion::basis(j);
        worst = std::max(worst, norm(ei * ej - cayley_dickson_mul(ei, ej)));
      }
    b.add("fano-vs-cayley-dickson-basis", worst == 0.0 ? 0.0 : -worst,
          "exact on all 64 basis pairs");
  }
  {
    double worst = 0.0;
    for (int s = 0; s < n; ++s) {
      Rng rng = Rng::derive(cfg.seed, 1, s);
      const Octonion a = sample(rng, SampleTarget::kAlgebra);
      const Octonion c = sample(rng, SampleTarget::kAlgebra);
      worst = std::max(worst, rel(norm(a * c - cayley_dickson_mul(a, c)),
                                  norm(a) * norm(c)));
    }
    b.add("fano-vs-cayley-dickson-random", cfg.tol_alg - worst);
  }
  {
    double worst = 0.0;
    for (int s = 0; s < n; ++s) {
      Rng rng = Rng::derive(cfg.seed, 2, s);
      const Octonion u = sample(rng, SampleTarget::kAlgebra);
      const Octonion v = sample(rng, SampleTarget::kAlgebra);
      const Octonion w = sample(rng, SampleTarget::kAlgebra);
      const double scale = norm(u) * norm(u) * norm(v) * norm(w);
      worst = std::max(worst, rel(norm((u * v * u) * w - u * (v * (u * w))), scale));
      worst = std::max(worst, rel(norm(w * (u * v * u) - ((w * u) * v) * u), scale));
      worst = std::max(worst, rel(norm((u * (v * w)) * u - (u * v) * (w * u)), scale));
    }
    b.add("moufang-identities", 1e-10 - worst);
  }
  {
    double worst = 0.0;
    for (int s = 0; s < n; ++s) {
      Rng rng = Rng::derive(cfg.seed, 3, s);
      const Octonion u = sample(rng, SampleTarget::kAlgebra);
      const Octonion v = sample(rng, SampleTarget::kAlgebra);
      const double scale = norm(u) * norm(u) * norm(v);
      worst = std::max(worst, rel(norm(associator(u, u, v)), scale));
      worst = std::max(worst, rel(norm(associator(u, v, v)), scale));
    }
    b.add("alternativity", 1e-10 - worst);
  }
  {
    double worst = 0.0;
    for (int s = 0; s < n; ++s) {
      Rng rng = Rng::derive(cfg.seed, 4, s);
      const Octonion u = sample(rng, SampleTarget::kAlgebra);
      const Octonion v = sample(rng, SampleTarget::kAlgebra);
      const Octonion w = sample(rng, SampleTarget::kAlgebra);
      const Octonion a = associator(u, v, w);
      const double scale = norm(u) * norm(v) * norm(w);
      worst = std::max(worst, rel(norm(a + associator(v, u, w)), scale));
      worst = std::max(worst, rel(norm(a + associator(u, w, v)), scale));
      worst = std::max(worst, rel(norm(a + associator(w, v, u)), scale));
      worst = std::max(worst, rel(std::abs(re(a)), scale));
      worst = std::max(worst, rel(std::abs(inner(u, a)), norm(u) * scale));
    }
    b.add("associator-antisymmetry-real-free-orthogonal", 1e-10 - worst);
  }
  {
    double worst = 0.0;
    for (int s = 0; s < n; ++s) {
      Rng rng = Rng::derive(cfg.seed, 5, s);
      const Octonion alpha = sample(rng, SampleTarget::kSphere);
      const Octonion z = sample(rng, SampleTarget::kAlgebra);
      const Octonion w = sample(rng, SampleTarget::kAlgebra);
      const double scale = norm(z) * norm(w);
      worst = std::max(worst, rel(std::abs(inner(alpha * z, alpha * w) - inner(z, w)), scale));
      worst = std::max(worst, rel(std::abs(inner(z * alpha, w * alpha) - inner(z, w)), scale));
    }
    b.add("unitary-multipliers", cfg.tol_alg - worst);
  }
  {
    double worst = 0.0;
    for (int s = 0; s < n; ++s) {
      Rng rng = Rng::derive(cfg.seed, 6, s);
      const Octonion z = sample(rng, SampleTarget::kAlgebra);
      const Octonion w = sample(rng, SampleTarget::kAlgebra);
      worst = std::max(worst, rel(std::abs(norm(z * w) - norm(z) * norm(w)),
                                  norm(z) * norm(w)));
    }
    b.add("norm-multiplicativity", cfg.tol_alg - worst);
  }
  {
    double worst = 0.0;
    for (int s = 0; s < std::max(1, n / 10); ++s) {
      Rng rng = Rng::derive(cfg.seed, 7, s);
      const Octonion w = sample(rng, SampleTarget::kSphere) *
                         (0.1 + 4.0 * rng.uniform());
      worst = std::max(worst, norm(w * inverse(w) - Octonion(1.0)));
      worst = std::max(worst, norm(inverse(w) * w - Octonion(1.0)));
      worst = std::max(worst, norm(conj(conj(w)) - w));
      worst = std::max(worst, rel(norm(w * conj(w) - Octonion(norm_sq(w))),
                                  norm_sq(w)));
      const Octonion z = sample(rng, SampleTarget::kAlgebra);
      worst = std::max(
          worst, rel(std::abs(inner(z, w) - re(z * conj(w))), norm(z) * norm(w)));
      worst = std::max(
          worst,
          rel(std::abs(inner(z, w) -
                       0.5 * (norm_sq(z + w) - norm_sq(z) - norm_sq(w))),
              norm(z) * norm(w)));
    }
    b.add("inverse-conjugate-inner-forms", cfg.tol_alg - worst);
  }
  {
    double worst = 0.0;
    for (int s = 0; s < std::max(1, n / 10); ++s) {
      Rng rng = Rng::derive(cfg.seed, 8, s);
      worst = std::max(worst,
                       std::abs(norm(sample(rng, SampleTarget::kSphere)) - 1.0));
      const Octonion i = sample(rng, SampleTarget::kUnitImaginary);
      worst = std::max(worst, norm(i * i + Octonion(1.0)));
    }
    b.add("sampler-sphere-and-imaginary-unit", cfg.tol_alg - worst);
  }
  {
    const int m = 100000;
    Octonion mean;
    for (int s = 0; s < m; ++s) {
      Rng rng = Rng::derive(cfg.seed, 9, s);
      mean += sample(rng, SampleTarget::kBall);
    }
    mean /= m;
    b.add("sampler-ball-mean", 5.0 / std::sqrt(m) - max_abs_component(mean),
          "law of large numbers, per coordinate");
  }
  return std::move(b).finish();
}

// --- series -------------------------------------------------------------------

Report suite_series(const SuiteConfig& cfg) {
  Battery b("series");
  const int pair_degree = 32;
  const int n = cfg.samples;

  double conj_antihom = 0.0, sym_product = 0.0, sym_real = 0.0;
  double recip_star = 0.0, recip_antihom = 0.0, split_star = 0.0;
  double real_point = 0.0, rec_series = 0.0, rec_rational = 0.0;
  double sphere_rem = 0.0, deriv_rel = 0.0, split_recomb = 0.0;
  double split_norm = 0.0, compose_slice = 0.0, dird_fd = 0.0, repr = 0.0;

  for (int s = 0; s < n; ++s) {
    Rng rng = Rng::derive(cfg.seed, 20, s);
    const SliceSeries f = random_convergent_series(rng, pair_degree);
    const SliceSeries g = random_convergent_series(rng, pair_degree);
    const SliceSeries fg = star(f, g);

    {  // (f*g)^c = g^c * f^c
      const SliceSeries lhs = regular_conjugate(fg);
      const SliceSeries rhs = star(regular_conjugate(g), regular_conjugate(f));
      const SliceSeries d = sub(lhs, rhs);
      for (const Octonion& c : d.coeffs())
        conj_antihom = std::max(conj_antihom, norm(c));
    }
    {  // (f*g)^s = f^s g^s
      const std::vector<double> lhs = symmetrize_real(fg);
      const std::vector<double> rhs =
          conv_real(symmetrize_real(f), symmetrize_real(g));
      for (size_t k = 0; k < lhs.size(); ++k)
        sym_product = std::max(
            sym_product, std::abs(lhs[k] - (k < rhs.size() ? rhs[k] : 0.0)));
    }
    {  // f^s has real coefficients
      const SliceSeries raw = star(f, regular_conjugate(f));
      for (const Octonion& c : raw.coeffs())
        sym_real = std::max(sym_real, norm(im(c)));
    }
    {  // f^{-*} * f = 1 + O(w^{N+1})
      const SliceSeries rec = reciprocal_series(f, cfg.degree);
      const SliceSeries prod = star(rec, f);
      for (int k = 0; k <= cfg.degree; ++k)
        recip_star = std::max(
            recip_star, norm(prod.coeff(k) - (k == 0 ? Octonion(1.0)
                                                     : Octonion(0.0))));
    }
    {  // (f*g)^{-*} = g^{-*} * f^{-*} pointwise off the zero sets
      const RegularRational lhs = reciprocal(fg);
      const RegularRational rhs = star(reciprocal(g), reciprocal(f));
      for (int t = 0; t < 4; ++t) {
        const Octonion w = 0.5 * sample(rng, SampleTarget::kBall);
        const std::complex<double> z{re(w), norm(im(w))};
        if (std::abs(eval_complex(lhs.den(), z)) < 1e-4 ||
            std::abs(eval_complex(rhs.den(), z)) < 1e-4)
          continue;
        recip_antihom = std::max(recip_antihom, norm(eval(lhs, w) - eval(rhs, w)));
      }
    }
    {  // convolution * against the splitting-lemma route
      const Frame frame = sample_frame(rng);
      for (int t = 0; t < 100; ++t) {
        const double rad = 0.8 * std::sqrt(rng.uniform());
        const double ang = 2.0 * std::numbers::pi * rng.uniform();
        const double x = rad * std::cos(ang), y = rad * std::sin(ang);
        const Octonion w = Octonion(x) + y * frame.i();
        split_star = std::max(
            split_star,
            norm(eval(fg, w) - star_via_splitting(f, g, frame, {x, y})));
      }
    }
    {  // pointwise product at real points
      const double x = -0.9 + 1.8 * rng.uniform();
      real_point = std::max(
          real_point,
          norm(eval(fg, Octonion(x)) - eval(f, Octonion(x)) * eval(g, Octonion(x))));
    }
    {  // remainder reconstruction and sphere-derivative relations
      const Octonion xi = 0.8 * sample(rng, SampleTarget::kBall);
      const SliceSeries r = remainder(f, xi);
      const SliceSeries back = add(
          star(SliceSeries({-xi, Octonion(1.0)}), r),
          SliceSeries::constant(eval(f, xi)));
      const SliceSeries d = sub(back, f);
      for (const Octonion& c : d.coeffs())
        rec_series = std::max(rec_series, norm(c));
      if (norm(im(xi)) > 0.05) {
        sphere_rem = std::max(
            sphere_rem, norm(eval(r, conj(xi)) - sphere_derivative(f, xi)));
        const Octonion lhs = eval(derivative(f), xi);
        const Octonion rhs = sphere_derivative(f, xi) +
                             (2.0 * im(xi)) * second_remainder(f, xi);
        deriv_rel = std::max(deriv_rel, norm(lhs - rhs));
        const Octonion v = sample(rng, SampleTarget::kSphere);
        const double h = 1e-5;
        const Octonion fd =
            (eval(f, xi + h * v) - eval(f, xi - h * v)) / (2.0 * h);
        dird_fd = std::max(dird_fd, norm(directional_derivative(f, xi, v) - fd));
      }
    }
    {  // rational remainder reconstruction at sampled points
      const RegularRational fr = reciprocal(f);
      const Octonion xi = 0.5 * sample(rng, SampleTarget::kBall);
      const std::complex<double> zxi{re(xi), norm(im(xi))};
      if (std::abs(eval_complex(fr.den(), zxi)) > 1e-3) {
        const RegularRational r = remainder(fr, xi);
        const Octonion w = 0.5 * sample(rng, SampleTarget::kBall);
        const std::complex<double> zw{re(w), norm(im(w))};
        if (std::abs(eval_complex(fr.den(), zw)) > 1e-3) {
          const Octonion lhs = eval(fr, w) - eval(fr, xi);
          const RegularRational lin{SliceSeries({-xi, Octonion(1.0)})};
          const Octonion rhs = eval(star(lin, r), w);
          rec_rational = std::max(rec_rational, norm(lhs - rhs));
        }
      }
    }
    {  // splitting recombination and the norm identity
      const Frame frame = sample_frame(rng);
      const SplitComponents sc = split(f, frame);
      for (int t = 0; t < 4; ++t) {
        const double rad = 0.8 * std::sqrt(rng.uniform());
        const double ang = 2.0 * std::numbers::pi * rng.uniform();
        const double x = rad * std::cos(ang), y = rad * std::sin(ang);
        const Octonion w = Octonion(x) + y * frame.i();
        const Octonion direct = eval(f, w);
        split_recomb = std::max(split_recomb,
                                norm(direct - recombine(sc, {x, y})));
        double sum = 0.0;
        for (const auto& comp : sc.comps)
          sum += std::norm(eval_component(comp, {x, y}));
        split_norm = std::max(split_norm, std::abs(sum - norm_sq(direct)));
      }
    }
    {  // f_u(w) = f(uw) within a slice
      const UnitImaginary i = sample_unit_imaginary(rng);
      const double a = 2.0 * std::numbers::pi * rng.uniform();
      const Octonion u = std::cos(a) * Octonion(1.0) + std::sin(a) * i.value();
      const double rad = 0.8 * std::sqrt(rng.uniform());
      const double ang = 2.0 * std::numbers::pi * rng.uniform();
      const double x = rad * std::cos(ang), y = rad * std::sin(ang);
      const Octonion w = Octonion(x) + y * i.value();
      compose_slice = std::max(
          compose_slice, norm(eval(compose_with_unit(f, u), w) - eval(f, u * w)));
    }
    {  // representation formula
      const UnitImaginary i = sample_unit_imaginary(rng);
      const UnitImaginary j = sample_unit_imaginary(rng);
      const double x = 0.6 * (2.0 * rng.uniform() - 1.0);
      const double y = 0.1 + 0.5 * rng.uniform();
      const Octonion z = Octonion(x) + y * i.value();
      const Octonion w = Octonion(x) + y * j.value();
      repr = std::max(repr, norm(representation_eval(eval(f, z), eval(f, conj(z)),
                                                     i, j) -
                                 eval(f, w)));
    }
  }

  b.add("star-conjugate-antihomomorphism", cfg.tol_series - conj_antihom);
  b.add("symmetrization-of-product", cfg.tol_series - sym_product);
  b.add("symmetrization-real-coefficients", 1e-12 - sym_real);
  b.add("reciprocal-star-identity", cfg.tol_series - recip_star);
  b.add("reciprocal-antihomomorphism", cfg.tol_series - recip_antihom);
  b.add("star-vs-splitting-route", cfg.tol_series - split_star);
  b.add("real-point-pointwise-product", cfg.tol_series - real_point);
  b.add("remainder-reconstruction-series", cfg.tol_series - rec_series);
  b.add("remainder-reconstruction-rational", cfg.tol_series - rec_rational);
  b.add("remainder-sphere-derivative", cfg.tol_series - sphere_rem);
  b.add("derivative-spherical-relation", cfg.tol_series - deriv_rel);
  b.add("split-recombination", cfg.tol_series - split_recomb);
  b.add("split-norm-identity", cfg.tol_series - split_norm);
  b.add("compose-unit-within-slice", cfg.tol_series - compose_slice);
  b.add("directional-derivative-fd", 1e-6 - dird_fd);
  b.add("representation-formula", 1e-9 - repr);
  return std::move(b).finish();
}

// --- schwarz ------------------------------------------------------------------

Report suite_schwarz(const SuiteConfig& cfg) {
  Battery b("schwarz");
  const UnitImaginary I(Octonion::basis(1));
  const UnitImaginary J(Octonion::basis(2));
  const Octonion iv = I.value(), jv = J.value(), ij = iv * jv;

  // Example 3.3 built through the operator toolkit
  const SliceSeries left({Octonion(1.0), 0.5 * iv});
  const SliceSeries right({0.5 * iv, Octonion(-1.0)});
  const RegularRational phi_tail = star(reciprocal(left), RegularRational(right));
  const RegularRational phi(shift(phi_tail.num(), 1), phi_tail.den());
  const RegularRational f = right_multiply(phi, jv);
  const RegularRational closed = make_example_3_3(I, J);
  {
    Rng rng = Rng::derive(cfg.seed, 30);
    double worst = 0.0;
    for (int s = 0; s < 50; ++s) {
      const Octonion w = 0.9 * sample(rng, SampleTarget::kBall);
      worst = std::max(worst, norm(eval(f, w) - eval(closed, w)));
    }
    b.add("example33-matches-closed-form", 1e-12 - worst);
  }
  {
    const Octonion fp = eval(derivative(f), jv);
    const Octonion expect = (4.0 / 3.0) * (Octonion(2.0) - ij);
    b.add("example33-derivative", 1e-9 - norm(fp - expect),
          "f'(J) = (4/3)(2 - IJ)");
    const Octonion r2 = second_remainder(f, jv);
    const Octonion expect_r2 = (2.0 / 3.0) * (iv - 2.0 * jv);
    b.add("example33-second-remainder", 1e-9 - norm(r2 - expect_r2),
          "R_{-J}R_J f(J) = (2/3)(I - 2J)");
    const Octonion expr = fp - bracket(jv, r2);
    b.add("example33-delta-expression", 1e-9 - norm(expr - Octonion(8.0 / 3.0)),
          "f'(J) - [J, R2] = 8/3");
    const BoundaryReport rep = boundary_modulus_derivative(f, jv);
    b.add("example33-boundary-derivative",
          1e-9 - std::max(std::abs(rep.delta - 8.0 / 3.0), rep.imag_residual));
    b.add("example33-fd-crosscheck",
          1e-3 - std::abs(rep.fd_crosscheck - 8.0 / 3.0),
          "one-sided difference, step 1e-4");
  }

  // constructed self-maps with certified contact points
  const int n_maps = std::max(10, cfg.samples / 5);
  double min_margin = 1e300, max_residual = 0.0, max_fd = 0.0;
  for (int s = 0; s < n_maps; ++s) {
    Rng rng = Rng::derive(cfg.seed, 31, s);
    const ContactMap m = sample_contact_self_map(rng, false);
    const BoundaryReport rep = boundary_modulus_derivative(m.f, m.xi);
    min_margin = std::min(min_margin, rep.delta - rep.lower_bound_eq11);
    max_residual = std::max(max_residual, rep.imag_residual);
    max_fd = std::max(max_fd, std::abs(rep.fd_crosscheck - rep.delta));
  }
  b.add("boundary-schwarz-margin", min_margin + 1e-8,
        "delta >= |1-<f(0),f(xi)>|^2/(1-|f(0)|^2) on " + std::to_string(n_maps) +
            " constructed self-maps");
  b.add("boundary-imag-residual", 1e-8 - max_residual);
  b.add("boundary-fd-agreement", 1e-3 - max_fd);

  {  // extremal family achieves equality in the fixed-point bound
    double worst = 0.0;
    Rng rng = Rng::derive(cfg.seed, 32);
    for (double a : {-1.0, -0.5, 0.0, 0.5}) {
      const Octonion xi = sample(rng, SampleTarget::kSphere);
      const RegularRational ext = make_extremal(a, xi);
      const BoundaryReport rep = boundary_modulus_derivative(ext, xi);
      worst = std::max(worst, std::abs(rep.delta - rep.fixed_point_bound));
    }
    b.add("extremal-family-equality", 1e-8 - worst,
          "a in {-1, -0.5, 0, 0.5}");
  }
  {  // Lemma 3.2
    double min_m = 1e300;
    for (int s = 0; s < cfg.samples; ++s) {
      Rng rng = Rng::derive(cfg.seed, 33, s);
      const ContactMap m = sample_contact_self_map(rng, false);
      const Octonion w = 0.95 * sample(rng, SampleTarget::kBall);
      min_m = std::min(min_m, modulus_inequality_check(m.f, w));
    }
    b.add("modulus-inequality", min_m + 1e-9);
  }
  {  // convex combination identity
    double worst = 0.0;
    for (int s = 0; s < cfg.samples; ++s) {
      Rng rng = Rng::derive(cfg.seed, 34, s);
      const UnitImaginary i = sample_unit_imaginary(rng);
      std::vector<Octonion> c;
      for (int k = 0; k <= 6; ++k)
        c.push_back(rng.gaussian() * Octonion(1.0) +
                    rng.gaussian() * i.value());
      const RegularRational g{SliceSeries(std::move(c))};
      const UnitImaginary j = sample_unit_imaginary(rng);
      const double x = rng.gaussian() * 0.4, y = 0.1 + 0.5 * rng.uniform();
      worst = std::max(worst, convex_combination_check(g, x, y, i, j));
    }
    b.add("convex-combination-identity", 1e-10 - worst);
  }
  return std::move(b).finish();
}

// --- quaternion ------------------------------------------------------------------

Report suite_quaternion(const SuiteConfig& cfg) {
  Battery b("quaternion");

  {  // pointwise * for quaternionic functions
    double worst = 0.0, zero_prop = 0.0;
    for (int s = 0; s < cfg.samples; ++s) {
      Rng rng = Rng::derive(cfg.seed, 40, s);
      const SliceSeries f = random_series(rng, 6, true);
      const SliceSeries g = random_series(rng, 6, true);
      const Octonion q = 0.8 * sample_quaternion(rng, SampleTarget::kBall);
      try {
        const PointwiseStarResult r = pointwise_star_check(f, g, q);
        worst = std::max(worst, r.quat_identity);
      } catch (const ZeroAtPoint&) {
        // f(q) = 0 forces f*g(q) = 0 in the quaternions
        zero_prop = std::max(zero_prop, norm(eval(star(f, g), q)));
      }
    }
    b.add("pointwise-star-quaternionic", 1e-9 - std::max(worst, zero_prop));
  }
  {  // camshaft witness: quaternionic (f, w), octonionic g
    bool found = false;
    double dev = 0.0, id1 = 0.0, id2 = 0.0;
    for (int s = 0; s < 4000 && !found; ++s) {
      Rng rng = Rng::derive(cfg.seed, 41, s);
      const SliceSeries f = random_series(rng, 4, true, 0.3);
      const SliceSeries g = random_series(rng, 4, false);
      const Octonion q = 0.7 * sample_quaternion(rng, SampleTarget::kBall);
      PointwiseStarResult r;
      try {
        r = pointwise_star_check(f, g, q);
      } catch (const ZeroAtPoint&) {
        continue;
      }
      if (r.quat_identity > 1e-3 && r.octo_inner_identity <= 1e-10 &&
          r.octo_modulus_identity <= 1e-10) {
        found = true;
        dev = r.quat_identity;
        id1 = r.octo_inner_identity;
        id2 = r.octo_modulus_identity;
      }
    }
    b.add_flag("camshaft-witness", found,
               found ? "deviation " + fmt(dev) + ", inner-id " + fmt(id1) +
                           ", modulus-id " + fmt(id2)
                     : "no witness found");
  }
  {  // inner-product identity for fully octonionic data
    double worst = 0.0;
    for (int s = 0; s < cfg.samples; ++s) {
      Rng rng = Rng::derive(cfg.seed, 42, s);
      const SliceSeries f = random_series(rng, 5, false, 0.3);
      const SliceSeries g = random_series(rng, 5, false);
      const Octonion w = 0.7 * sample(rng, SampleTarget::kBall);
      try {
        worst = std::max(worst,
                         pointwise_star_check(f, g, w).octo_inner_identity);
      } catch (const ZeroAtPoint&) {
      }
    }
    b.add("pointwise-star-inner-octonionic", 1e-10 - worst);
  }
  {  // a = 1/2 real Möbius at xi = 1: delta 3, sharp 3, Osserman 1/3
    const RegularRational f = make_mobius(Octonion(0.5), Octonion(1.0));
    const BoundaryReport rep = quaternionic_bounds(f, Octonion(1.0));
    const double worst = std::max(
        {std::abs(rep.delta - 3.0), std::abs(rep.sharp_bound - 3.0),
         std::abs(rep.osserman_bound - 1.0 / 3.0)});
    b.add("sharp-vs-osserman-mobius-half", 1e-12 - worst,
          "delta = sharp = 3 against Osserman 1/3");
  }
  {  // the sharp bound dominates the Osserman bound instance by instance
    double min_gap = 1e300, min_delta_margin = 1e300;
    const int n_maps = std::max(10, cfg.samples / 10);
    for (int s = 0; s < n_maps; ++s) {
      Rng rng = Rng::derive(cfg.seed, 43, s);
      const ContactMap m = sample_contact_self_map(rng, true);
      const BoundaryReport rep = quaternionic_bounds(m.f, m.xi);
      min_gap = std::min(min_gap, rep.sharp_bound - rep.osserman_bound);
      min_delta_margin = std::min(min_delta_margin, rep.delta - rep.sharp_bound);
    }
    b.add("sharp-improves-osserman", min_gap + 1e-12);
    b.add("sharp-bound-holds", min_delta_margin + 1e-8);
  }
  {  // extremal family of the sharp estimate
    double worst = 0.0;
    for (int s = 0; s < 20; ++s) {
      Rng rng = Rng::derive(cfg.seed, 44, s);
      const Octonion f0 = 0.4 * sample_quaternion(rng, SampleTarget::kBall);
      const Octonion fxi = sample_quaternion(rng, SampleTarget::kSphere);
      const Octonion xi = sample_quaternion(rng, SampleTarget::kSphere);
      const double a = -0.8 + 1.6 * rng.uniform();
      const RegularRational f = make_sharp_extremal(a, f0, fxi, xi);
      const BoundaryReport rep = quaternionic_bounds(f, xi);
      worst = std::max(worst, std::abs(rep.delta - rep.sharp_bound));
    }
    b.add("sharp-extremal-equality", 1e-8 - worst);
  }
  {  // Julia inequality
    double mobius_worst = 0.0;
    Rng rng = Rng::derive(cfg.seed, 45);
    for (int s = 0; s < 20; ++s) {
      const Octonion u = 0.6 * sample_quaternion(rng, SampleTarget::kBall);
      const Octonion v = sample_quaternion(rng, SampleTarget::kSphere);
      const RegularRational f = make_mobius(u, v);
      const Octonion xi = sample_quaternion(rng, SampleTarget::kSphere);
      const BoundaryReport rep = quaternionic_bounds(f, xi);
      const Octonion eta = eval(f, xi);
      for (int t = 0; t < 10; ++t) {
        const Octonion q = 0.9 * sample_quaternion(rng, SampleTarget::kBall);
        const JuliaResult jr = julia_check(f, xi, eta, rep.delta, q);
        mobius_worst = std::max(mobius_worst, std::abs(jr.lhs - jr.rhs));
      }
    }
    b.add("julia-mobius-equality", 1e-9 - mobius_worst,
          "equality throughout for regular Möbius transformations");

    double min_margin = 1e300;
    const int n_maps = std::max(10, cfg.samples / 10);
    for (int s = 0; s < n_maps; ++s) {
      Rng rng2 = Rng::derive(cfg.seed, 46, s);
      const ContactMap m = sample_contact_self_map(rng2, true);
      const BoundaryReport rep = quaternionic_bounds(m.f, m.xi);
      const Octonion eta = eval(m.f, m.xi);
      const Octonion q = 0.9 * sample_quaternion(rng2, SampleTarget::kBall);
      const JuliaResult jr = julia_check(m.f, m.xi, eta, rep.delta, q);
      min_margin = std::min(min_margin, jr.lhs - jr.rhs);
    }
    b.add("julia-self-maps", min_margin + 1e-8);

    const RegularRational fsq = make_monomial_rotation(2, Octonion(1.0));
    const JuliaResult jr =
        julia_check(fsq, Octonion(1.0), Octonion(1.0), 2.0, Octonion(0.5));
    b.add("julia-square-instance",
          1e-12 - std::max(std::abs(jr.lhs - 5.0 / 3.0),
                           std::abs(jr.rhs - 1.5)),
          "lhs 5/3 against rhs 3/2 at q = 1/2");
  }
  {  // T_f and T_{f^c} are mutual inverses and preserve the sphere
    double worst = 0.0;
    for (int s = 0; s < cfg.samples; ++s) {
      Rng rng = Rng::derive(cfg.seed, 47, s);
      const SliceSeries f = random_series(rng, 5, true, 0.3);
      const Octonion q = 0.8 * sample_quaternion(rng, SampleTarget::kBall);
      try {
        const Octonion tq = t_transform(f, q);
        worst = std::max(worst,
                         norm(t_transform(regular_conjugate(f), tq) - q));
        worst = std::max(worst, std::abs(re(tq) - re(q)));
        worst = std::max(worst, std::abs(norm(tq) - norm(q)));
      } catch (const ZeroOfSymmetrization&) {
      }
    }
    b.add("t-transform-roundtrip", 1e-10 - worst);

    Rng rng = Rng::derive(cfg.seed, 48);
    std::vector<Octonion> rc;
    for (int k = 0; k < 5; ++k) rc.emplace_back(rng.gaussian());
    const Octonion q = 0.7 * sample_quaternion(rng, SampleTarget::kBall);
    b.add("t-transform-slice-preserving",
          1e-12 - norm(t_transform(SliceSeries(rc), q) - q),
          "T_f = id for slice preserving f");
  }
  {  // inner boundary estimate and the second-derivative corollary
    double min_margin = 1e300, min_second = 1e300, minda_worst = 0.0;
    const int n_maps = std::max(10, cfg.samples / 20);
    for (int s = 0; s < n_maps; ++s) {
      Rng rng = Rng::derive(cfg.seed, 49, s);
      const ContactMap m = sample_contact_self_map(rng, true);
      const double t = -0.9 + 1.8 * rng.uniform();
      const InnerEstimate est = inner_boundary_estimate(m.f, m.xi, t);
      min_margin = std::min(min_margin, est.margin);
      min_second = std::min(min_second, est.second_derivative_margin);
    }
    {
      Rng rng = Rng::derive(cfg.seed, 50);
      const Octonion xi = sample_quaternion(rng, SampleTarget::kSphere);
      const Octonion fxi = sample_quaternion(rng, SampleTarget::kSphere);
      const RegularRational f = make_minda_extremal(2.5, xi, fxi);
      for (int t = 0; t < 16; ++t) {
        const double tv = -0.9 + 1.8 * rng.uniform();
        minda_worst = std::max(
            minda_worst, std::abs(inner_boundary_estimate(f, xi, tv).margin));
      }
    }
    b.add("inner-boundary-estimate", min_margin + 1e-9);
    b.add("second-derivative-convexity", min_second + 1e-8);
    b.add("inner-extremal-equality", 1e-9 - minda_worst);
  }
  {  // part (ii): f = q^2 is the vanishing-order extremal
    const RegularRational f = make_monomial_rotation(2, Octonion(1.0));
    const BoundaryReport rep = quaternionic_bounds(f, Octonion(1.0));
    const bool ok = rep.extremal_monomial && rep.vanishing_order == 2 &&
                    std::abs(rep.delta - 2.0) <= 1e-12 &&
                    std::abs(rep.part_ii_bound - 2.0) <= 1e-12;
    b.add_flag("vanishing-order-extremal", ok,
               "delta = n = 2 for f = q^2 at xi = 1");
  }
  return std::move(b).finish();
}

// --- diameters ------------------------------------------------------------------

Report suite_diameters(const SuiteConfig& cfg) {
  Battery b("diameters");
  DiameterSampling ds;
  ds.seed = cfg.seed;

  {
    const double d =
        diameters(SliceSeries::identity(), 0.5, DiameterEstimate::Kind::kRegular, ds)
            .value;
    b.add("regular-diameter-identity", 0.01 - std::abs(d - 1.0),
          "f = w at r = 1/2");
  }
  {
    Rng rng = Rng::derive(cfg.seed, 60);
    double worst = 0.0, worst_slice = 0.0;
    for (int s = 0; s < 5; ++s) {
      const Octonion a0 = 0.3 * sample(rng, SampleTarget::kBall);
      const Octonion a1 = sample(rng, SampleTarget::kSphere);
      const SliceSeries f({a0, a1});
      for (double r : {0.25, 0.5, 0.75}) {
        const double d =
            diameters(f, r, DiameterEstimate::Kind::kRegular, ds).value;
        worst = std::max(worst, std::abs(d - 2.0 * r) / (2.0 * r));
        const double dsl =
            diameters(f, r, DiameterEstimate::Kind::kSlice, ds).value;
        worst_slice = std::max(worst_slice, std::abs(dsl - 2.0 * r) / (2.0 * r));
      }
    }
    b.add("affine-regular-diameter", 0.01 - worst, "|a1| = 1 gives 2r");
    b.add("affine-slice-diameter", 0.01 - worst_slice);
  }
  {
    // normalized test maps with analytically known regular diameter 2
    std::vector<SliceSeries> maps;
    maps.push_back(SliceSeries::identity());
    {
      std::vector<Octonion> c(4);
      c[1] = Octonion(1.0 / 1.1);
      c[3] = Octonion(0.1 / 1.1);
      maps.push_back(SliceSeries(std::move(c)));  // (w + w^3/10)/1.1
    }
    {
      std::vector<Octonion> c(6);
      c[1] = 0.7 * Octonion::basis(3);
      c[5] = 0.3 * Octonion::basis(3);
      maps.push_back(SliceSeries(std::move(c)));  // aligned odd powers
    }
    const std::vector<double> grid{0.25, 0.5, 0.75};
    bool bound = true, monotone = true, deriv = true;
    for (const SliceSeries& f : maps) {
      const LandauToeplitzReport rep = landau_toeplitz_check(f, grid, ds);
      bound = bound && rep.bound_holds;
      monotone = monotone && rep.ratio_monotone;
      deriv = deriv && rep.derivative_bound_holds;
    }
    b.add_flag("landau-toeplitz-bound", bound, "dtilde(f(rB)) <= 2r");
    b.add_flag("landau-toeplitz-ratio-monotone", monotone);
    b.add_flag("landau-toeplitz-derivative-bound", deriv, "|f'(0)| <= 1");
  }
  {
    // diam <= dtilde <= 2 diam on f = w + w^2/4
    std::vector<Octonion> c(3);
    c[1] = Octonion(1.0);
    c[2] = Octonion(0.25);
    const SliceSeries f(std::move(c));
    const double dt =
        diameters(f, 0.8, DiameterEstimate::Kind::kRegular, ds).value;
    const double de =
        diameters(f, 0.8, DiameterEstimate::Kind::kEuclidean, ds).value;
    const double m = std::min(dt - de + cfg.tol_sample,
                              2.0 * de - dt + cfg.tol_sample);
    b.add("diameter-sandwich", m, "diam <= dtilde <= 2 diam");
  }
  {
    std::vector<Octonion> c(3);
    c[2] = Octonion::basis(1);
    const CauchyEstimate est = cauchy_estimate_check(SliceSeries(std::move(c)), 2, ds);
    b.add("cauchy-equality-square", 0.02 - std::abs(est.rhs - est.lhs),
          "f = w^2 e1 attains |a_2| = Diam/2");
    const CauchyEstimate id = cauchy_estimate_check(SliceSeries::identity(), 1, ds);
    b.add("cauchy-equality-identity", 0.02 - std::abs(id.rhs - id.lhs));
    std::vector<Octonion> c2(4);
    c2[1] = Octonion(1.0);
    c2[3] = Octonion(0.1);
    const CauchyEstimate strict = cauchy_estimate_check(SliceSeries(std::move(c2)), 3, ds);
    b.add("cauchy-strict", strict.margin - 0.5,
          "far from equality for f = w + w^3/10 at n = 3");
  }
  {
    ExtremumGrid grid;
    grid.seed = cfg.seed;
    const RegularRational half{SliceSeries({Octonion(-0.5), Octonion(1.0)})};
    const ExtremumScanReport rep = extremum_scan(half, grid);
    bool found = false;
    for (const InteriorMinimum& m : rep.real_axis_minima)
      if (std::abs(m.location - 0.5) <= grid.axis_step && m.consistent_with_zero)
        found = true;
    b.add_flag("extremum-interior-zero", found,
               "f = w - 1/2 has a zero-consistent interior minimum");

    std::vector<Octonion> c(3);
    c[1] = Octonion::basis(3);
    c[2] = Octonion(1.0);
    const ExtremumScanReport rep2 =
        extremum_scan(RegularRational{SliceSeries(std::move(c))}, grid);
    b.add_flag("extremum-shell-maximum", rep2.shell_max_on_outer && !rep2.constant);

    const ExtremumScanReport rep3 =
        extremum_scan(RegularRational{SliceSeries::constant(Octonion::basis(2))}, grid);
    b.add_flag("extremum-constant-flag", rep3.constant);
  }
  return std::move(b).finish();
}

// --- growth ---------------------------------------------------------------------

Report suite_growth(const SuiteConfig& cfg) {
  Battery b("growth");
  const UnitImaginary I(Octonion::basis(1));
  const RegularRational koebe = make_koebe(I, 0.0);

  {
    double worst = 0.0;
    for (double r : {0.3, 0.6, 0.9}) {
      const double up = norm(eval(koebe, Octonion(r)));
      const double lo = norm(eval(koebe, Octonion(-r)));
      worst = std::max(worst, std::abs(up - r / ((1 - r) * (1 - r))));
      worst = std::max(worst, std::abs(lo - r / ((1 + r) * (1 + r))));
    }
    b.add("koebe-growth-equality", 1e-9 - worst, "equality at w = +-r");
  }
  {
    double min_margin = 1e300;
    Rng base = Rng::derive(cfg.seed, 70);
    std::vector<RegularRational> family{koebe};
    for (int k = 0; k < 3; ++k)
      family.push_back(make_koebe(sample_unit_imaginary(base),
                                  2.0 * std::numbers::pi * base.uniform()));
    for (int s = 0; s < cfg.samples; ++s) {
      Rng rng = Rng::derive(cfg.seed, 71, s);
      const Octonion w = 0.9 * sample(rng, SampleTarget::kBall);
      if (norm(w) < 1e-3) continue;
      const GrowthMargins m =
          growth_distortion_check(family[s % family.size()], w);
      min_margin = std::min({min_margin, m.growth_lower, m.growth_upper,
                             m.distortion_lower, m.distortion_upper,
                             m.ratio_lower, m.ratio_upper});
    }
    b.add("growth-distortion-bounds", min_margin + 1e-9,
          "all six one-sided margins");
  }
  {
    const Octonion fp0 = eval(derivative(koebe), Octonion(0.0));
    b.add("distortion-pinch-at-origin", 1e-12 - norm(fp0 - Octonion(1.0)),
          "f'(0) = 1");
  }
  {
    double lo = 1e300;
    for (int k = 0; k < 256; ++k) {
      const double th = 2.0 * std::numbers::pi * k / 256;
      const Octonion w =
          0.999 * (std::cos(th) * Octonion(1.0) + std::sin(th) * I.value());
      lo = std::min(lo, norm(eval(koebe, w)));
    }
    Rng rng = Rng::derive(cfg.seed, 72);
    for (int k = 0; k < 200; ++k) {
      const Octonion w = 0.999 * sample(rng, SampleTarget::kSphere);
      lo = std::min(lo, norm(eval(koebe, w)));
    }
    b.add("quarter-covering", lo - 0.249,
          "min |koebe| on |w| = 0.999 stays above 1/4 - eps");
  }
  return std::move(b).finish();
}

// --- zeros ----------------------------------------------------------------------

Report suite_zeros(const SuiteConfig& cfg) {
  Battery b("zeros");
  const UnitImaginary e2(Octonion::basis(2));

  const SliceSeries lin({-Octonion::basis(1), Octonion(1.0)});  // q - e1
  {
    const CountResult r = contour_count(lin, ContourSpec(0, 1, 0.3, e2, 4096));
    b.add_flag("count-linear", r.count == 2 && r.guard < 0.05,
               "q - e1 counts 2 (guard " + fmt(r.guard) + ")");
    b.add("count-linear-slice-deviation", 1e-6 - r.slice_deviation);
  }
  {
    const CountResult r = contour_count(SliceSeries::constant(Octonion(1.0)),
                                        ContourSpec(0.3, 0.4, 0.2, e2, 4096));
    b.add_flag("count-constant", r.count == 0 && r.guard < 0.05);
  }
  {
    const SliceSeries delta_e1({Octonion(1.0), Octonion(0.0), Octonion(1.0)});
    const CountResult r =
        contour_count(delta_e1, ContourSpec(0, 1, 0.3, e2, 4096));
    b.add_flag("count-characteristic-polynomial", r.count == 4 && r.guard < 0.05,
               "q^2 + 1 counts 4");
  }
  {
    const SliceSeries f({Octonion(-0.5), Octonion(1.0)});
    const CountResult r = contour_count(f, ContourSpec(0.5, 0, 0.2, e2, 4096));
    b.add_flag("count-real-zero", r.count == 2 && r.guard < 0.05,
               "q - 1/2 counts 2");
  }
  {
    Rng rng = Rng::derive(cfg.seed, 80);
    const UnitImaginary i1 = sample_unit_imaginary(rng);
    const UnitImaginary i2 = sample_unit_imaginary(rng);
    const CountResult r1 = contour_count(lin, ContourSpec(0, 1, 0.3, i1, 4096));
    const CountResult r2 = contour_count(lin, ContourSpec(0, 1, 0.3, i2, 4096));
    b.add_flag("slice-independence", r1.count == r2.count,
               "counts agree exactly across slices");
  }
  {
    Rng rng = Rng::derive(cfg.seed, 81);
    const Octonion a = Octonion(0.2) + 0.5 * sample_unit_imaginary(rng).value();
    const Octonion c = Octonion(0.2) + 0.5 * sample_unit_imaginary(rng).value();
    const SliceSeries f({-a, Octonion(1.0)});
    const SliceSeries g({-c, Octonion(1.0)});
    const ContourSpec spec(0.2, 0.5, 0.2, e2, 4096);
    const int cf = contour_count(f, spec).count;
    const int cg = contour_count(g, spec).count;
    const int cfg_ = contour_count(star(f, g), spec).count;
    b.add_flag("additivity-under-star", cfg_ == cf + cg,
               fmt(cf) + " + " + fmt(cg) + " = " + fmt(cfg_));
  }
  {
    double worst = 0.0;
    const SliceSeries delta_e1({Octonion(1.0), Octonion(0.0), Octonion(1.0)});
    for (const SliceSeries* f : {&lin, &delta_e1}) {
      const CountResult a = contour_count(*f, ContourSpec(0, 1, 0.3, e2, 4096));
      const CountResult c = contour_count(*f, ContourSpec(0, 1, 0.3, e2, 2048));
      worst = std::max(worst, std::abs(a.raw - c.raw));
    }
    b.add("node-halving-stability", 1e-6 - worst,
          "raw value moves < 1e-6 from M = 4096 to 2048");
  }
  return std::move(b).finish();
}

}  // namespace

// --- test map factories ------------------------------------------------------

ContactMap sample_contact_self_map(Rng& rng, bool quaternionic) {
  // w^n * B * c with one Blaschke factor B; the factor's coefficients live
  // in a slice plane, so |f(xi)| = 1 holds exactly on that slice's boundary
  // circle (everywhere when the factor is real).
  const int n = static_cast<int>(rng.next() % 3);
  const int shape = static_cast<int>(rng.next() % 3);
  const Octonion c = quaternionic ? sample_quaternion(rng, SampleTarget::kSphere)
                                  : sample(rng, SampleTarget::kSphere);

  Octonion a;        // Blaschke zero
  Octonion xi;       // certified contact point
  const double theta = 2.0 * std::numbers::pi * rng.uniform();
  if (shape == 0) {  // real zero: every boundary point is a contact point
    a = Octonion(-0.5 + rng.uniform());
    xi = quaternionic ? sample_quaternion(rng, SampleTarget::kSphere)
                      : sample(rng, SampleTarget::kSphere);
  } else {  // zero in a slice plane; contact on that slice's circle
    const Octonion i = quaternionic
                           ? sample_quaternion_imaginary(rng).value()
                           : sample_unit_imaginary(rng).value();
    const double r = 0.5 * rng.uniform();
    const double phase = 2.0 * std::numbers::pi * rng.uniform();
    a = r * (std::cos(phase) * Octonion(1.0) + std::sin(phase) * i);
    xi = std::cos(theta) * Octonion(1.0) + std::sin(theta) * i;
  }
  RegularRational f = make_mobius(a, c);
  if (n > 0) f = RegularRational(shift(f.num(), n), f.den());
  return {f, xi};
}

RegularRational make_sharp_extremal(double a, const Octonion& f0,
                                    const Octonion& fxi, const Octonion& xi) {
  if (a < -1.0 || a >= 1.0)
    throw BadParameter("sharp extremal: a must lie in [-1, 1)");
  if (norm(f0) >= 1.0 || std::abs(norm(fxi) - 1.0) > kAlgTol ||
      std::abs(norm(xi) - 1.0) > kAlgTol)
    throw BadParameter("sharp extremal: need |f0| < 1 = |fxi| = |xi|");
  const Octonion one(1.0);
  const Octonion v = (inverse(f0 - fxi) * xi) * (one - fxi * conj(f0));
  const Octonion eta =
      (inverse(one - fxi * conj(f0)) * xi) * (one - fxi * conj(f0));
  const RegularRational bl = make_extremal(a, eta);
  // f = (1 - b conj(f0 v))^{-*} * (f0 - b conj(v))
  const RegularRational g1 = affine_in(bl, conj(f0 * v), -1.0);
  RegularRational g2 = right_multiply(bl, conj(v));
  std::vector<Octonion> den_scaled;
  for (double d : bl.den()) den_scaled.push_back(d * f0);
  g2 = RegularRational(sub(SliceSeries(den_scaled), g2.num()), bl.den());
  return star(reciprocal(g1), g2);
}

RegularRational make_minda_extremal(double delta, const Octonion& xi,
                                    const Octonion& fxi) {
  if (delta < 1.0) throw BadParameter("minda extremal: delta must be >= 1");
  const SliceSeries a({-(delta + 1.0) * xi, Octonion(delta - 1.0)});
  const SliceSeries bb({(delta - 1.0) * xi, Octonion(-(delta + 1.0))});
  return right_multiply(star(reciprocal(a), RegularRational(bb)), fxi);
}

// --- dispatcher ----------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "algebra", "series", "schwarz", "quaternion",
      "diameters", "zeros", "growth", "all"};
  return names;
}

Report run_suite(const std::string& name, const SuiteConfig& config) {
  using Runner = std::function<Report(const SuiteConfig&)>;
  static const std::map<std::string, Runner> runners{
      {"algebra", suite_algebra},     {"series", suite_series},
      {"schwarz", suite_schwarz},     {"quaternion", suite_quaternion},
      {"diameters", suite_diameters}, {"zeros", suite_zeros},
      {"growth", suite_growth}};

  if (config.samples < 1)
    throw BadParameter("config: samples must be >= 1");
  if (config.tol_alg <= 0.0 || config.tol_series <= 0.0 ||
      config.tol_sample <= 0.0)
    throw BadParameter("config: tolerances must be positive");
  const auto t0 = std::chrono::steady_clock::now();
  Report out;
  if (name == "all") {
    out.suite = "all";
    out.pass = true;
    for (const std::string& sub : suite_names()) {
      if (sub == "all") continue;
      Report r = run_suite(sub, config);
      for (CaseResult& c : r.cases) {
        c.name = sub + "/" + c.name;
        out.cases.push_back(std::move(c));
      }
      out.pass = out.pass && r.pass;
    }
  } else {
    const auto it = runners.find(name);
    if (it == runners.end()) throw UnknownSuite("unknown suite: " + name);
    out = it->second(config);
  }
  out.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return out;
}

Json report_to_json(const Report& report) {
  Json j;
  j["suite"] = report.suite;
  Json cases = Json::array();
  for (const CaseResult& c : report.cases) {
    Json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["margin"] = c.margin;
    jc["details"] = c.details;
    cases.push_back(jc);
  }
  j["cases"] = cases;
  j["pass"] = report.pass;
  return j;
}

std::string format_report_table(const Report& report) {
  std::ostringstream os;
  os << "suite: " << report.suite << "\n";
  size_t width = 8;
  for (const CaseResult& c : report.cases)
    width = std::max(width, c.name.size());
  for (const CaseResult& c : report.cases) {
    os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    for (size_t k = c.name.size(); k < width + 2; ++k) os << ' ';
    os << "margin " << fmt(c.margin);
    if (!c.details.empty()) os << "  (" << c.details << ")";
    os << "\n";
  }
  os << (report.pass ? "PASS" : "FAIL") << " (" << report.cases.size()
     << " cases, " << fmt(report.runtime_ms) << " ms)\n";
  return os.str();
}

}  // namespace slicecalc
