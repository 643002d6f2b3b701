#include "teichnum/mobius.hpp"

#include <cmath>

#include "teichnum/errors.hpp"

namespace teichnum {

Mobius::Mobius(cplx a, cplx b, cplx c, cplx d) : a_(a), b_(b), c_(c), d_(d) {
  if (std::abs(a * d - b * c) < 1e-300)
    throw singular_input_error("mobius: determinant vanishes");
}

SpherePoint Mobius::apply(const SpherePoint& p) const {
  if (p.infinite) {
    if (std::abs(c_) < 1e-300) return SpherePoint::inf();
    return SpherePoint::at(a_ / c_);
  }
  const cplx den = c_ * p.value + d_;
  if (std::abs(den) < 1e-300) return SpherePoint::inf();
  return SpherePoint::at((a_ * p.value + b_) / den);
}

cplx Mobius::apply_finite(cplx z) const {
  const SpherePoint img = apply(SpherePoint::at(z));
  if (img.infinite) throw singular_input_error("mobius: image at infinity");
  return img.value;
}

Mobius Mobius::inverse() const { return Mobius(d_, -b_, -c_, a_); }

Mobius Mobius::compose(const Mobius& o) const {
  return Mobius(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

Mobius Mobius::three_point(const SpherePoint& p0, const SpherePoint& p1,
                           const SpherePoint& p2) {
  // z -> [z, p1; p0, p2] sends p0 -> 0, p1 -> 1, p2 -> inf
  if (p0 == p1 || p1 == p2 || p0 == p2)
    throw precondition_error("three_point: points must be distinct");
  if (p0.infinite) {
    // z -> (p1 - p2) / (z - p2)
    return Mobius(0.0, p1.value - p2.value, 1.0, -p2.value);
  }
  if (p1.infinite) {
    // z -> (z - p0) / (z - p2)
    return Mobius(1.0, -p0.value, 1.0, -p2.value);
  }
  if (p2.infinite) {
    // z -> (z - p0) / (p1 - p0)
    return Mobius(1.0, -p0.value, 0.0, p1.value - p0.value);
  }
  const cplx z0 = p0.value, z1 = p1.value, z2 = p2.value;
  // (z - z0)(z1 - z2) / ((z - z2)(z1 - z0))
  return Mobius(z1 - z2, -z0 * (z1 - z2), z1 - z0, -z2 * (z1 - z0));
}

cplx cross_ratio(const SpherePoint& z1, const SpherePoint& z2, const SpherePoint& z3,
                 const SpherePoint& z4) {
  const Mobius m = Mobius::three_point(z3, z2, z4);  // z3 -> 0, z2 -> 1, z4 -> inf
  const SpherePoint img = m.apply(z1);
  if (img.infinite) throw singular_input_error("cross_ratio: degenerate configuration");
  return img.value;
}

}  // namespace teichnum
