#include "doctest.h"
#include "teichnum/welding.hpp"

#include <cmath>
#include <numbers>

using namespace teichnum;
using std::numbers::pi;

namespace {
// disc automorphism h_a(z) = (z + a)/(1 + a z), a real in (-1,1), as a
// circle homeomorphism: the displacement is analytic in theta
CircleHomeo mobius_homeo(double a, std::size_t modes = 24) {
  const std::size_t m = 256;
  std::vector<double> disp(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double t = 2.0 * pi * static_cast<double>(k) / static_cast<double>(m);
    const cplx z = std::polar(1.0, t);
    const cplx w = (z + a) / (1.0 + a * z);
    double d = std::arg(w) - t;
    d = std::remainder(d, 2.0 * pi);
    disp[k] = d;
  }
  return fit_homeo(disp, modes, 0.8);
}
}  // namespace

TEST_CASE("circle homeo basics") {
  const CircleHomeo rot = CircleHomeo::rotation(0.7);
  CHECK(std::abs(rot.eval_angle(0.3) - std::polar(1.0, 1.0)) < 1e-14);
  CHECK(rot.orientation_margin() == doctest::Approx(1.0));

  // the inverse displacement is not a finite trigonometric polynomial;
  // ask for enough modes that the refit error is negligible
  const CircleHomeo h({0.0, 0.05}, {0.0, 0.02}, 1.0);
  const CircleHomeo hi = invert_homeo(h, 32);
  const CircleHomeo id = compose_homeo(h, hi, 32);
  for (int k = 0; k < 16; ++k) {
    const double t = 2.0 * pi * k / 16.0;
    CHECK(std::abs(id.displacement(t)) < 1e-10);
  }

  // composition against pointwise evaluation
  const CircleHomeo g({0.0, -0.03, 0.01}, {0.0, 0.04}, 1.0);
  const CircleHomeo hg = compose_homeo(h, g, 32);
  for (int k = 0; k < 16; ++k) {
    const double t = 2.0 * pi * k / 16.0;
    CHECK(std::abs(hg.eval_angle(t) - h.eval(g.eval_angle(t))) < 1e-10);
  }

  CHECK_THROWS_AS(CircleHomeo({0.0, 2.0}, {0.0}, 1.0), precondition_error);  // 1 + u' < 0
}

TEST_CASE("weld: rotation oracle") {
  const double alpha = 0.35;
  const WeldingPair pair = weld(CircleHomeo::rotation(alpha), 1e-12);
  CHECK(pair.residual < 1e-12);
  // f(z) = e^{-i alpha} z, g(w) = w  (or any common rotation normalization):
  // g o h = f forces g'(inf) = 1, so g = w and f = e^{i alpha} z
  CHECK(std::abs(pair.g.coeff(0) - 1.0) < 1e-10);
  for (std::size_t k = 1; k < pair.g.truncation(); ++k)
    CHECK(std::abs(pair.g.coeff(k)) < 1e-10);
  CHECK(std::abs(pair.f.coeff(1) - std::polar(1.0, alpha)) < 1e-10);
  for (std::size_t k = 2; k < 8; ++k) CHECK(std::abs(pair.f.coeff(k)) < 1e-10);
}

TEST_CASE("weld: Mobius oracle") {
  const double a = 0.2;
  const CircleHomeo h = mobius_homeo(a);
  const WeldingPair pair = weld(h, 1e-9);
  CHECK(pair.residual < 1e-9);
  // the welding of h_a is f = h_a - a (interior), g = w - a (exterior)
  CHECK(std::abs(pair.g.coeff(0) - 1.0) < 1e-8);
  CHECK(std::abs(pair.g.coeff(1) - (-a)) < 1e-7);
  for (std::size_t k = 2; k < 8; ++k) CHECK(std::abs(pair.g.coeff(k)) < 1e-7);
  // h_a(z) - a = (1 - a^2) z / (1 + a z) = (1-a^2) sum (-a)^{k-1} z^k
  for (std::size_t k = 1; k < 8; ++k) {
    const cplx expect = (1.0 - a * a) * std::pow(-a, static_cast<double>(k - 1));
    CHECK(std::abs(pair.f.coeff(k) - expect) < 1e-7);
  }
}

TEST_CASE("weld: initialization independence") {
  const CircleHomeo h({0.0, 0.04, 0.02}, {0.0, -0.03, 0.01}, 1.0);
  const WeldingPair base = weld(h, 1e-10);
  for (unsigned seed : {1u, 2u, 3u, 4u, 5u}) {
    const WeldingPair other = weld(h, 1e-10, 8, 16, seed);
    REQUIRE(other.truncation == base.truncation);
    for (std::size_t k = 0; k < base.f.truncation(); ++k)
      CHECK(std::abs(base.f.coeff(k) - other.f.coeff(k)) < 1e-8);
  }
}

TEST_CASE("welding residual detects a wrong pair") {
  const CircleHomeo h = CircleHomeo::rotation(0.5);
  const WeldingPair pair = weld(h, 1e-12);
  std::vector<cplx> wrong = pair.f.coeffs();
  wrong[1] += 0.01;
  CHECK(welding_residual(PowerSeries(wrong), pair.g, h) > 5e-3);
}

TEST_CASE("build_extension: identity and rotation are conformal") {
  const ExtensionField id = build_extension(CircleHomeo::identity());
  CHECK(id.sup_mu < 1e-14);
  CHECK(id.l2.value < 1e-12);
  const ExtensionField rot = build_extension(CircleHomeo::rotation(0.4));
  CHECK(rot.sup_mu < 1e-14);
}

TEST_CASE("build_extension: dilatation magnitude for one Fourier mode") {
  // u = c cos(theta): at radius R, |u'(theta - i ln R)| peaks at
  // c k cosh(ln R) for mode k=1; check sup|mu| = max |u'/(2+u')|
  const double c = 0.05;
  const CircleHomeo h({0.0, c}, {0.0}, 1.0);
  const ExtensionField ext = build_extension(h);
  const double lnR = std::log(ext.annulus_outer);
  double expect = 0.0;
  for (int k = 0; k < 4096; ++k) {
    const double th = 2.0 * pi * k / 4096.0;
    const cplx du = h.displacement_derivative(cplx(th, -lnR));
    expect = std::max(expect, std::abs(du / (2.0 + du)));
  }
  CHECK(ext.sup_mu == doctest::Approx(expect).epsilon(1e-10));
  CHECK(ext.sup_mu < 1.0);
  CHECK(ext.l2.value > 0.0);
  CHECK(ext.l2.tail_bound < 1.0);
}

TEST_CASE("qs0_certify on a small perturbation") {
  const CircleHomeo h({0.0, 0.03, 0.01}, {0.0, 0.02}, 1.0);
  const QsoCertificate cert = qs0_certify(h);
  CHECK(cert.certified);
  CHECK(cert.sup_mu < 1.0);
  CHECK(cert.welding_residual < 1e-8);
}
