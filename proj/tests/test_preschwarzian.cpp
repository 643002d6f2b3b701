#include "doctest.h"
#include "teichnum/preschwarzian.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace teichnum;
using std::numbers::pi;

namespace {
// Truncated Koebe map z / (1-z)^2 = sum n z^n.
PowerSeries koebe(std::size_t n) {
  std::vector<cplx> c(n);
  for (std::size_t k = 1; k < n; ++k) c[k] = static_cast<double>(k);
  return PowerSeries(std::move(c));
}
}  // namespace

TEST_CASE("pre_schwarzian of the Koebe map") {
  // A(k) = 1/(1+z) + 3/(1-z): coefficients 3 + (-1)^n
  const PowerSeries a = pre_schwarzian(koebe(128));
  for (std::size_t n = 0; n < 32; ++n)
    CHECK(std::abs(a.coeff(n) - (3.0 + (n % 2 == 0 ? 1.0 : -1.0))) < 1e-8);
}

TEST_CASE("pre_schwarzian preconditions") {
  CHECK_THROWS_AS(pre_schwarzian(PowerSeries({cplx(1.0), cplx(1.0)})), precondition_error);
  CHECK_THROWS_AS(pre_schwarzian(PowerSeries({cplx(0.0), cplx(0.0), cplx(1.0)})),
                  precondition_error);
}

TEST_CASE("chi and chi_inverse round trip") {
  std::vector<cplx> c(32);
  c[1] = cplx(2.0, -0.5);
  c[2] = cplx(0.1, 0.05);
  c[3] = cplx(-0.04, 0.02);
  c[5] = cplx(0.01, 0.0);
  const PowerSeries f(c);

  const PreSchwarzianCoords coords = chi(f);
  CHECK(coords.d == c[1]);
  const PowerSeries back = chi_inverse(coords);
  for (std::size_t k = 0; k < 16; ++k) CHECK(std::abs(back.coeff(k) - f.coeff(k)) < 1e-10);

  // and the other direction: chi(chi_inverse(coords)) restores phi
  const PreSchwarzianCoords again = chi(back);
  for (std::size_t k = 0; k < 16; ++k)
    CHECK(std::abs(again.phi.coeff(k) - coords.phi.coeff(k)) < 1e-9);
}

TEST_CASE("transfer_compose matches direct pre-Schwarzian of the composite") {
  std::vector<cplx> hc(48), fc(48);
  hc[1] = 1.0;
  hc[2] = cplx(0.15, 0.1);
  hc[3] = cplx(-0.02, 0.0);
  fc[1] = 0.5;
  fc[2] = cplx(0.05, -0.03);
  const PowerSeries h(hc), f(fc);

  const PowerSeries direct = pre_schwarzian(compose(h, f));
  const PowerSeries transferred = transfer_compose(pre_schwarzian(h), f);
  for (std::size_t k = 0; k < 24; ++k)
    CHECK(std::abs(direct.coeff(k) - transferred.coeff(k)) < 1e-9);
}

TEST_CASE("oqco_membership: bounded coefficients stay members") {
  std::vector<cplx> c(512);
  c[1] = 1.0;
  c[2] = 0.1;
  c[3] = 0.02;
  const MembershipVerdict v = oqco_membership(PowerSeries(c));
  CHECK(v.verdict == Membership::member);
  CHECK(v.norms.size() == v.ladder.size());
  CHECK(std::abs(v.growth_slope) < kDivergenceSlope);
}

TEST_CASE("oqco_membership: Koebe map diverges logarithmically") {
  const MembershipVerdict v = oqco_membership(koebe(512));
  CHECK(v.verdict == Membership::diverging);
  // squared Bergman norm of A(k) grows like 10 pi ln N
  CHECK(v.growth_slope == doctest::Approx(10.0 * pi).epsilon(0.15));
  for (std::size_t k = 1; k < v.norms.size(); ++k) CHECK(v.norms[k] > v.norms[k - 1]);
}

TEST_CASE("univalence_check") {
  // univalent on the closed disc by the coefficient criterion:
  // sum k |c_k| = 0.7 <= 1
  std::vector<cplx> uc(8);
  uc[1] = 1.0;
  uc[2] = cplx(0.15, 0.1);
  uc[3] = cplx(0.0, -0.1);
  const UnivalenceReport ok = univalence_check(PowerSeries(uc), 1024);
  CHECK(ok.verdict == UnivalenceVerdict::pass);
  CHECK(ok.min_boundary_gap > 0.0);

  // f = z + z^2 has f'(-1/2) = 0 inside the disc
  std::vector<cplx> c(8);
  c[1] = 1.0;
  c[2] = 1.0;
  const UnivalenceReport bad = univalence_check(PowerSeries(c), 1024);
  CHECK(bad.verdict == UnivalenceVerdict::fail);
  CHECK(bad.witness.has_value());
}

TEST_CASE("openness_probe around the identity") {
  const OpennessReport rep =
      openness_probe(PowerSeries::identity(32), cplx(0.0), 3.0, {1e-3, 1e-2}, 6, 42u);
  REQUIRE(rep.all_pass.size() == 2);
  CHECK(rep.all_pass[0]);
  CHECK(rep.all_pass[1]);
  CHECK(rep.largest_passing == doctest::Approx(1e-2));
}
