#include "doctest.h"
#include "teichnum/verify.hpp"

#include <cmath>
#include <numbers>

#include "teichnum/norms.hpp"

using namespace teichnum;
using std::numbers::pi;

TEST_CASE("standard family stays inside the guards") {
  for (unsigned seed = 1; seed <= 10; ++seed) {
    const PowerSeries f0 = standard_base_map(seed);
    double budget = 0.0;
    for (std::size_t k = 2; k <= 6; ++k) budget += static_cast<double>(k) * std::abs(f0.coeff(k));
    CHECK(budget <= 0.3 + 1e-12);
    CHECK(univalence_check(f0, 512).verdict == UnivalenceVerdict::pass);

    const HolomorphicCurveSpec curve = standard_curve(seed);
    CHECK(bergman_norm(curve.direction) <= 0.1 + 1e-12);
    curve.validate();  // univalence along the whole grid
  }
}

TEST_CASE("curve evaluation recovers the base map at t = 0") {
  const HolomorphicCurveSpec curve = standard_curve(5);
  const PowerSeries f0 = standard_base_map(5);
  const PowerSeries at0 = curve.f_at(0.0);
  for (std::size_t k = 0; k < 16; ++k) CHECK(std::abs(at0.coeff(k) - f0.coeff(k)) < 1e-9);
}

TEST_CASE("check_minkowski") {
  const PowerSeries f = standard_base_map(3);
  std::vector<cplx> hc(8);
  hc[1] = 1.0;
  hc[2] = 0.25;
  const CheckReport rep = check_minkowski(PowerSeries(hc), f);
  CHECK(rep.pass);

  // affine h: both transported and lhs-vs-base collapse, slack ~ 0
  std::vector<cplx> ac(8);
  ac[1] = 2.0;
  const CheckReport affine = check_minkowski(PowerSeries(ac), f);
  CHECK(affine.pass);
  double slack = -1.0, lhs = -1.0, base = -1.0;
  for (const auto& [k, v] : affine.quantities) {
    if (k == "slack") slack = v;
    if (k == "lhs") lhs = v;
    if (k == "base") base = v;
  }
  CHECK(std::abs(lhs - base) < 1e-9);  // A(h) = 0 for affine h
  CHECK(slack >= -1e-10);
}

TEST_CASE("check_hardy_littlewood closed-form instance") {
  // F = z, p = 2, alpha = 0: LHS = pi/2, integral term = iint (1-r^2)^2 dA = pi/3
  std::vector<PowerSeries> fam{PowerSeries::identity(8)};
  const CheckReport rep = check_hardy_littlewood(fam, 2.0, 0.0);
  CHECK(rep.pass);
  double cmax = 0.0;
  for (const auto& [k, v] : rep.quantities)
    if (k == "c_max") cmax = v;
  CHECK(cmax == doctest::Approx((pi / 2.0) / (pi / 3.0)).epsilon(1e-6));
}

TEST_CASE("check_carleson_chain") {
  const CheckReport b2 = check_carleson_chain(2.0);
  CHECK(b2.pass);
  const CheckReport b4 = check_carleson_chain(4.0);
  CHECK(b4.pass);
  CHECK_THROWS_AS(check_carleson_chain(1.0), precondition_error);
}

TEST_CASE("check_ars_embedding closed-form instance") {
  // psi = z, beta = 2: LHS^4 = iint r^4 (1-r^2)^{1/2} dA, RHS = sqrt(pi)
  std::vector<PowerSeries> fam{PowerSeries::identity(8)};
  const CheckReport rep = check_ars_embedding(fam, 2.0);
  CHECK(rep.pass);
  double cmax = 0.0;
  for (const auto& [k, v] : rep.quantities)
    if (k == "c_max") cmax = v;
  // radial integral: 2 pi int r^5 (1-r^2)^{1/2} dr = 2 pi * 8/105
  const double lhs = std::pow(2.0 * pi * 8.0 / 105.0, 0.25);
  CHECK(cmax == doctest::Approx(lhs / std::sqrt(pi)).epsilon(1e-6));
}

TEST_CASE("check_uniform_fprime") {
  const HolomorphicCurveSpec curve = standard_curve(7);
  const CheckReport rep = check_uniform_fprime(curve, 4.0, -0.5);
  CHECK(rep.pass);

  // constant curve: ratio exactly 1
  HolomorphicCurveSpec flat = curve;
  flat.direction = PowerSeries::zero(flat.direction.truncation());
  flat.q_poly = {flat.base.d};
  const CheckReport frep = check_uniform_fprime(flat, 4.0, -0.5);
  CHECK(frep.pass);
  for (const auto& [k, v] : frep.quantities)
    if (k == "ratio") CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("check_wulfs") {
  const HolomorphicCurveSpec curve = standard_curve(9);
  const PowerSeries psi = PowerSeries::identity(8);
  CHECK(check_wulfs(curve, psi, 2.0).pass);
  CHECK(check_wulfs(curve, psi, 4.0).pass);
  CHECK_THROWS_AS(check_wulfs(curve, PowerSeries({cplx(1.0), cplx(0.0)}), 2.0),
                  precondition_error);
}

TEST_CASE("check_left_composition_holo") {
  const HolomorphicCurveSpec curve = standard_curve(11);
  std::vector<cplx> hc(8);
  hc[1] = 1.0;
  hc[2] = 0.25;
  const CheckReport rep = check_left_composition_holo(PowerSeries(hc), curve);
  CHECK(rep.pass);

  // affine h: the coordinate curve is affine in t, CR ratio near zero
  std::vector<cplx> ac(8);
  ac[1] = 1.5;
  const CheckReport affine = check_left_composition_holo(PowerSeries(ac), curve);
  CHECK(affine.pass);
}

TEST_CASE("anti-holomorphic control is flagged") {
  // injected conj(t) dependence must produce CR ratio >> tolerance
  const CRReport anti = cr_stencil(
      [](cplx t) { return cplx(0.2, 0.1) + 0.7 * std::conj(t); }, cplx(0.0), {1e-2, 1e-3});
  CHECK(anti.ratios.back() > 1e3);
}

TEST_CASE("check_qso_closure") {
  const CircleHomeo h1({0.0, 0.02, 0.015}, {0.0, -0.01, 0.02}, 1.0);
  const CircleHomeo h2({0.0, -0.015, 0.01}, {0.0, 0.02, -0.005}, 1.0);
  const CheckReport rep = check_qso_closure(h1, h2);
  CHECK(rep.pass);
}
