#include "slicecalc/octonion.hpp"

namespace slicecalc {

namespace {

// Quaternion product on the (1, e1, e2, e3) subalgebra.
std::array<double, 4> qmul(const std::array<double, 4>& a,
                           const std::array<double, 4>& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

std::array<double, 4> qconj(const std::array<double, 4>& a) {
  return {a[0], -a[1], -a[2], -a[3]};
}

}  // namespace

Octonion cayley_dickson_mul(const Octonion& a, const Octonion& b) {
  const std::array<double, 4> z1{a[0], a[1], a[2], a[3]};
  const std::array<double, 4> z2{a[4], a[5], a[6], a[7]};
  const std::array<double, 4> w1{b[0], b[1], b[2], b[3]};
  const std::array<double, 4> w2{b[4], b[5], b[6], b[7]};
  // (z1 + z2 e4)(w1 + w2 e4) = z1 w1 - conj(w2) z2 + (z2 conj(w1) + w2 z1) e4
  const auto p = qmul(z1, w1);
  const auto q = qmul(qconj(w2), z2);
  const auto r = qmul(z2, qconj(w1));
  const auto s = qmul(w2, z1);
  Octonion out;
  for (int k = 0; k < 4; ++k) {
    out[k] = p[k] - q[k];
    out[k + 4] = r[k] + s[k];
  }
  return out;
}

UnitImaginary imaginary_unit_of(const Octonion& w) {
  Octonion v = im(w);
  const double n = norm(v);
  if (n <= kAlgTol) return UnitImaginary(Octonion::basis(1));
  return UnitImaginary(v / n);
}

Frame::Frame(const UnitImaginary& i, const UnitImaginary& j,
             const UnitImaginary& k)
    : i_(i.value()), j_(j.value()), k_(k.value()) {
  const Octonion ij = i_ * j_;
  const Octonion dirs[4] = {i_, j_, ij, k_};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (std::abs(inner(dirs[a], dirs[b])) > kAlgTol)
        throw BadFrame("I, J, IJ, K are not mutually perpendicular");
  basis_ = {Octonion(1.0), i_, j_, ij, k_, i_ * k_, j_ * k_, ij * k_};
}

Frame standard_frame() {
  return Frame(UnitImaginary(Octonion::basis(1)),
               UnitImaginary(Octonion::basis(2)),
               UnitImaginary(Octonion::basis(4)));
}

Frame complete_frame(const UnitImaginary& i) {
  // Gram-Schmidt against {1, I, IJ-candidates} over the imaginary basis
  // vectors, taking the first candidates that stay well-conditioned.
  const Octonion I = i.value();
  auto project_out = [](Octonion v, const Octonion& u) {
    return v - inner(v, u) * u;
  };
  Octonion J;
  for (int k = 1; k < 8; ++k) {
    Octonion c = project_out(Octonion::basis(k), I);
    if (norm(c) > 0.5) {
      J = c / norm(c);
      break;
    }
  }
  const Octonion IJ = I * J;
  Octonion K;
  for (int k = 1; k < 8; ++k) {
    Octonion c = Octonion::basis(k);
    c = project_out(c, I);
    c = project_out(c, J);
    c = project_out(c, IJ);
    if (norm(c) > 0.5) {
      K = c / norm(c);
      break;
    }
  }
  return Frame(UnitImaginary(I), UnitImaginary(J), UnitImaginary(K));
}

}  // namespace slicecalc
