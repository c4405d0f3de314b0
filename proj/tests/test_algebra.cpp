#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slicecalc/octonion.hpp"
#include "slicecalc/rng.hpp"

using namespace slicecalc;

namespace {
const Octonion e1 = Octonion::basis(1);
const Octonion e2 = Octonion::basis(2);
const Octonion e3 = Octonion::basis(3);
const Octonion e4 = Octonion::basis(4);
const Octonion e5 = Octonion::basis(5);
const Octonion e6 = Octonion::basis(6);
const Octonion e7 = Octonion::basis(7);
}  // namespace

TEST_CASE("multiplication table basics") {
  CHECK(e1 * e2 == e3);
  CHECK(e6 * e1 == e7);
  CHECK(Octonion(1.0) * e5 == e5);
  CHECK(e5 * Octonion(1.0) == e5);
  CHECK(e1 * e1 == Octonion(-1.0));
  // remaining oriented triples
  CHECK(e1 * e4 == e5);
  CHECK(e2 * e4 == e6);
  CHECK(e3 * e4 == e7);
  CHECK(e5 * e3 == e6);
  CHECK(e7 * e2 == e5);
  CHECK(e2 * e1 == -e3);
}

TEST_CASE("cayley-dickson product agrees with the table on every basis pair") {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const Octonion a = Octonion::basis(i);
      const Octonion b = Octonion::basis(j);
      CHECK(norm(a * b - cayley_dickson_mul(a, b)) == 0.0);
    }
}

TEST_CASE("cayley-dickson product agrees on random pairs") {
  double worst = 0.0;
  for (int s = 0; s < 10000; ++s) {
    Rng rng = Rng::derive(7, 0, s);
    const Octonion a = sample(rng, SampleTarget::kAlgebra);
    const Octonion b = sample(rng, SampleTarget::kAlgebra);
    worst = std::max(worst, norm(a * b - cayley_dickson_mul(a, b)) /
                                std::max(1.0, norm(a) * norm(b)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("e5 e6 e7 match their cayley-dickson definitions") {
  CHECK(cayley_dickson_mul(e1, e4) == e5);
  CHECK(cayley_dickson_mul(e2, e4) == e6);
  CHECK(cayley_dickson_mul(e3, e4) == e7);
  CHECK(cayley_dickson_mul(e3, Octonion(1.0)) == e3);
}

TEST_CASE("involutions") {
  CHECK(conj(e1) == -e1);
  CHECK(norm(Octonion(2.0) + e3) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
  const Octonion w = Octonion(0.5) + 2.0 * e2;
  CHECK(re(w) == 0.5);
  CHECK(im(w)[2] == 2.0);
  Rng rng(11);
  for (int s = 0; s < 100; ++s) {
    const Octonion u = sample(rng, SampleTarget::kAlgebra);
    CHECK(norm(conj(conj(u)) - u) == 0.0);
    CHECK(norm(u * conj(u) - Octonion(norm_sq(u))) <= 1e-12 * (1 + norm_sq(u)));
    CHECK(norm(conj(u) * u - Octonion(norm_sq(u))) <= 1e-12 * (1 + norm_sq(u)));
  }
}

TEST_CASE("inner product forms") {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      CHECK(inner(Octonion::basis(i), Octonion::basis(j)) ==
            (i == j ? 1.0 : 0.0));
  Rng rng(12);
  for (int s = 0; s < 200; ++s) {
    const Octonion z = sample(rng, SampleTarget::kAlgebra);
    const Octonion w = sample(rng, SampleTarget::kAlgebra);
    const double scale = std::max(1.0, norm(z) * norm(w));
    CHECK(std::abs(inner(z, w) - re(z * conj(w))) <= 1e-12 * scale);
    CHECK(std::abs(inner(z, w) -
                   0.5 * (norm_sq(z + w) - norm_sq(z) - norm_sq(w))) <=
          1e-11 * scale);
    const Octonion alpha = sample(rng, SampleTarget::kSphere);
    CHECK(std::abs(inner(alpha * z, alpha * w) - inner(z, w)) <= 1e-12 * scale);
    CHECK(std::abs(inner(z * alpha, w * alpha) - inner(z, w)) <= 1e-12 * scale);
  }
}

TEST_CASE("associator and bracket") {
  CHECK(norm(associator(e1, e2, e4) - 2.0 * e7) == 0.0);
  Rng rng(13);
  for (int s = 0; s < 200; ++s) {
    const Octonion u = sample(rng, SampleTarget::kAlgebra);
    const Octonion v = sample(rng, SampleTarget::kAlgebra);
    const Octonion w = sample(rng, SampleTarget::kAlgebra);
    const double scale = std::max(1.0, norm(u) * norm(v) * norm(w));
    const Octonion a = associator(u, v, w);
    CHECK(std::abs(re(a)) <= 1e-10 * scale);
    CHECK(std::abs(inner(u, a)) <= 1e-10 * scale * norm(u));
    CHECK(norm(a + associator(v, u, w)) <= 1e-10 * scale);
    CHECK(norm(a + associator(u, w, v)) <= 1e-10 * scale);
    CHECK(norm(associator(u, u, v)) <= 1e-10 * scale);
    CHECK(norm(associator(u, v, v)) <= 1e-10 * scale);
  }
  // two elements of a common plane generate an associative algebra
  Rng rng2(14);
  const UnitImaginary i = sample_unit_imaginary(rng2);
  const Octonion u = 1.5 + 2.0 * i.value();
  const Octonion v = -0.25 + 0.75 * i.value();
  const Octonion w = sample(rng2, SampleTarget::kAlgebra);
  CHECK(norm(associator(u, v, w)) <= 1e-12 * norm(w) * norm(u) * norm(v));
  // I J = -<I,J> + I ^ J
  const UnitImaginary j = sample_unit_imaginary(rng2);
  const Octonion lhs = i.value() * j.value();
  const Octonion rhs = Octonion(-inner(i.value(), j.value())) +
                       wedge(i.value(), j.value());
  CHECK(norm(lhs - rhs) <= 1e-12);
  CHECK(norm(bracket(i.value(), j.value()) - 2.0 * wedge(i.value(), j.value())) ==
        0.0);
}

TEST_CASE("moufang identities") {
  Rng rng(15);
  for (int s = 0; s < 500; ++s) {
    const Octonion u = sample(rng, SampleTarget::kAlgebra);
    const Octonion v = sample(rng, SampleTarget::kAlgebra);
    const Octonion w = sample(rng, SampleTarget::kAlgebra);
    const double scale = std::max(1.0, norm_sq(u) * norm(v) * norm(w));
    CHECK(norm((u * v * u) * w - u * (v * (u * w))) <= 1e-10 * scale);
    CHECK(norm(w * (u * v * u) - ((w * u) * v) * u) <= 1e-10 * scale);
    CHECK(norm((u * (v * w)) * u - (u * v) * (w * u)) <= 1e-10 * scale);
  }
}

TEST_CASE("norm multiplicativity") {
  Rng rng(16);
  for (int s = 0; s < 1000; ++s) {
    const Octonion z = sample(rng, SampleTarget::kAlgebra);
    const Octonion w = sample(rng, SampleTarget::kAlgebra);
    CHECK(std::abs(norm(z * w) - norm(z) * norm(w)) <=
          1e-12 * std::max(1.0, norm(z) * norm(w)));
  }
}

TEST_CASE("inverse") {
  CHECK(norm(inverse(e1) + e1) == 0.0);
  CHECK(inverse(Octonion(2.0)) == Octonion(0.5));
  CHECK_THROWS_AS(inverse(Octonion(0.0)), ZeroDivisor);
  Rng rng(17);
  for (int s = 0; s < 200; ++s) {
    const Octonion w =
        sample(rng, SampleTarget::kSphere) * (0.01 + 10.0 * rng.uniform());
    CHECK(norm(w * inverse(w) - Octonion(1.0)) <= 1e-12);
    CHECK(norm(inverse(w) * w - Octonion(1.0)) <= 1e-12);
  }
  // scaling survives tiny magnitudes
  const Octonion tiny = 1e-200 * e2;
  CHECK(norm(tiny * inverse(tiny) - Octonion(1.0)) <= 1e-12);
}

TEST_CASE("imaginary unit of a point") {
  CHECK(norm(imaginary_unit_of(Octonion(1.0) + e1).value() - e1) == 0.0);
  CHECK(norm(imaginary_unit_of(Octonion(3.0)).value() - e1) == 0.0);
  const Octonion w = 0.3 + 2.5 * e6;
  CHECK(norm(imaginary_unit_of(w).value() - e6) <= 1e-15);
}

TEST_CASE("unit imaginary validation") {
  CHECK_THROWS_AS(UnitImaginary(Octonion(1.0)), BadParameter);
  CHECK_THROWS_AS(UnitImaginary(0.5 * e1), BadParameter);
  const UnitImaginary i(e4);
  CHECK(norm(i.value() * i.value() + Octonion(1.0)) <= 1e-12);
}

TEST_CASE("frames") {
  CHECK_THROWS_AS(Frame(UnitImaginary(e1), UnitImaginary(e1), UnitImaginary(e4)),
                  BadFrame);
  const Frame f = standard_frame();
  const auto& b = f.basis();
  for (int a = 0; a < 8; ++a)
    for (int c = 0; c < 8; ++c)
      CHECK(std::abs(inner(b[a], b[c]) - (a == c ? 1.0 : 0.0)) <= 1e-12);
  Rng rng(18);
  for (int s = 0; s < 20; ++s) {
    const Frame r = sample_frame(rng);
    const auto& rb = r.basis();
    for (int a = 0; a < 8; ++a)
      for (int c = a + 1; c < 8; ++c)
        CHECK(std::abs(inner(rb[a], rb[c])) <= 1e-12);
    const Frame completed = complete_frame(UnitImaginary(r.i()));
    CHECK(norm(completed.i() - r.i()) <= 1e-12);
  }
}

TEST_CASE("samplers") {
  Rng rng(19);
  for (int s = 0; s < 200; ++s) {
    CHECK(std::abs(norm(sample(rng, SampleTarget::kSphere)) - 1.0) <= 1e-12);
    const Octonion i = sample(rng, SampleTarget::kUnitImaginary);
    CHECK(norm(i * i + Octonion(1.0)) <= 1e-12);
    CHECK(norm(sample(rng, SampleTarget::kBall)) < 1.0);
    const Octonion q = sample_quaternion(rng, SampleTarget::kBall);
    CHECK(is_quaternion(q));
  }
  // determinism: identical derived streams give identical draws
  Rng a = Rng::derive(99, 3, 14);
  Rng b = Rng::derive(99, 3, 14);
  for (int k = 0; k < 16; ++k) CHECK(a.next() == b.next());

  // law of large numbers for the ball sampler
  Octonion mean;
  const int m = 100000;
  for (int s = 0; s < m; ++s) {
    Rng r = Rng::derive(5, 1, s);
    mean += sample(r, SampleTarget::kBall);
  }
  mean /= m;
  CHECK(max_abs_component(mean) <= 5.0 / std::sqrt(m));
}
