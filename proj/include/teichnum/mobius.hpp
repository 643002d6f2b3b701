#pragma once

// Mobius transformations of the Riemann sphere with the point at infinity
// handled explicitly, plus the cross-ratio and three-point normalization.

#include <array>
#include <optional>

#include "teichnum/series.hpp"

namespace teichnum {

// A point of the sphere: finite value, or infinity.
struct SpherePoint {
  cplx value{};
  bool infinite = false;

  static SpherePoint inf() { return {cplx(0.0), true}; }
  static SpherePoint at(cplx z) { return {z, false}; }
  bool operator==(const SpherePoint&) const = default;
};

class Mobius {
 public:
  // (a z + b) / (c z + d), ad - bc != 0
  Mobius(cplx a, cplx b, cplx c, cplx d);

  static Mobius identity() { return Mobius(1.0, 0.0, 0.0, 1.0); }
  // the unique map sending p0, p1, p2 to 0, 1, infinity
  static Mobius three_point(const SpherePoint& p0, const SpherePoint& p1,
                            const SpherePoint& p2);

  SpherePoint apply(const SpherePoint& p) const;
  cplx apply_finite(cplx z) const;  // throws if the image is infinite
  Mobius inverse() const;
  Mobius compose(const Mobius& other) const;  // this after other

  cplx a() const { return a_; }
  cplx b() const { return b_; }
  cplx c() const { return c_; }
  cplx d() const { return d_; }

 private:
  cplx a_, b_, c_, d_;
};

// [z1, z2; z3, z4] = (z1-z3)(z2-z4) / ((z1-z4)(z2-z3)), Mobius-invariant.
cplx cross_ratio(const SpherePoint& z1, const SpherePoint& z2, const SpherePoint& z3,
                 const SpherePoint& z4);

}  // namespace teichnum
