#include "teichnum/rigged.hpp"

#include <cmath>
#include <numbers>

#include "teichnum/errors.hpp"

namespace teichnum {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

std::vector<cplx> circle_points(std::size_t m) {
  std::vector<cplx> z(m);
  for (std::size_t k = 0; k < m; ++k)
    z[k] = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(m));
  return z;
}

void check_separation(const std::vector<std::vector<cplx>>& curves, const char* who) {
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j)
      for (const cplx& p : curves[i])
        for (const cplx& q : curves[j])
          if (std::abs(p - q) < 1e-9)
            throw degeneration_error(std::string(who) + ": boundary curves touch");
}

// pre-Schwarzian of a Mobius map as a power series: A(h) = -2c/(cz+d)
PowerSeries mobius_preschwarzian(const Mobius& m, std::size_t n) {
  std::vector<cplx> coeffs(n);
  const cplx q = -m.c() / m.d();
  cplx pw = -2.0 * m.c() / m.d();
  for (std::size_t k = 0; k < n; ++k) {
    coeffs[k] = pw;
    pw *= q;
  }
  return PowerSeries(std::move(coeffs));
}

// zeta o phi for a Mobius chart map and an interior series
PowerSeries chart_compose(const Mobius& zeta, const PowerSeries& phi, std::size_t n) {
  const PowerSeries p = phi.resized(n);
  std::vector<cplx> numc(n), den(n);
  for (std::size_t k = 0; k < n; ++k) numc[k] = zeta.a() * p.coeff(k);
  numc[0] += zeta.b();
  PowerSeries num(std::move(numc));
  for (std::size_t k = 0; k < n; ++k) den[k] = zeta.c() * p.coeff(k);
  den[0] += zeta.d();
  return divide(num, PowerSeries(std::move(den)));
}
}  // namespace

void BorderedSphere::validate(std::size_t samples) const {
  if (caps.empty()) throw precondition_error("bordered sphere: no caps");
  std::vector<std::vector<cplx>> curves;
  for (const PowerSeries& cap : caps) {
    const UnivalenceReport rep = univalence_check(cap, 1024);
    if (rep.verdict == UnivalenceVerdict::fail)
      throw precondition_error("bordered sphere: cap embedding is not univalent");
    std::vector<cplx> curve(samples);
    for (std::size_t k = 0; k < samples; ++k)
      curve[k] = cap.eval(std::polar(1.0, kTwoPi * static_cast<double>(k) / samples));
    curves.push_back(std::move(curve));
  }
  check_separation(curves, "bordered sphere");
}

void NonOverlappingMaps::validate(std::size_t samples) const {
  if (phi.size() != punctures.size())
    throw precondition_error("maps: puncture count mismatch");
  std::vector<std::vector<cplx>> curves;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (std::abs(phi[i].eval(0.0) - punctures[i]) > 1e-9)
      throw precondition_error("maps: phi_i(0) must equal the puncture");
    std::vector<cplx> curve(samples);
    for (std::size_t k = 0; k < samples; ++k)
      curve[k] = phi[i].eval(std::polar(1.0, kTwoPi * static_cast<double>(k) / samples));
    curves.push_back(std::move(curve));
  }
  check_separation(curves, "maps");
}

SewResult sew_caps(const RiggedSphere& rigged, std::size_t n_modes, double tol) {
  const std::size_t n = rigged.base.caps.size();
  if (rigged.riggings.size() != n)
    throw precondition_error("sew_caps: one rigging per cap required");
  rigged.base.validate();

  const std::size_t M = next_pow2(8 * (n_modes + 1));
  const std::vector<cplx> unit = circle_points(M);

  // current boundary curves of the unsewn caps, parametrized by the rigging
  std::vector<std::vector<cplx>> eta(n, std::vector<cplx>(M));
  std::vector<cplx> centers(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < M; ++m) {
      const double t = kTwoPi * static_cast<double>(m) / static_cast<double>(M);
      eta[i][m] = rigged.base.caps[i].eval(rigged.riggings[i].eval_angle(t));
    }
    centers[i] = rigged.base.caps[i].eval(0.0);
  }

  SewResult out;
  for (std::size_t i = 0; i < n; ++i) {
    double scale = 0.0;
    for (const cplx& p : eta[i]) scale = std::max(scale, std::abs(p - centers[i]));
    SewSolution sol = sew_along(eta[i], unit, centers[i], scale, n_modes);
    if (sol.residual > tol) {
      sol = sew_along(eta[i], unit, centers[i], scale, 2 * n_modes);
      if (sol.residual > tol)
        throw convergence_error("sew_caps: residual above tolerance", sol.residual);
    }

    // push everything already built and everything still pending through G
    for (PowerSeries& phi : out.maps.phi) {
      std::vector<cplx> vals(M);
      for (std::size_t m = 0; m < M; ++m) vals[m] = sol.exterior.eval(phi.eval(unit[m]));
      phi = fit_interior(CircleSamples{std::move(vals), 1.0}, n_modes + 1);
    }
    for (cplx& p : out.maps.punctures) p = sol.exterior.eval(p);
    for (std::size_t j = i + 1; j < n; ++j) {
      for (cplx& p : eta[j]) p = sol.exterior.eval(p);
      centers[j] = sol.exterior.eval(centers[j]);
    }

    out.maps.phi.push_back(sol.cap);
    out.maps.punctures.push_back(sol.cap.eval(0.0));
    out.residuals.push_back(sol.residual);
    out.exterior_maps.push_back(std::move(sol.exterior));
  }
  out.maps.validate();
  return out;
}

NChart default_chart(const NonOverlappingMaps& maps, double radius_factor) {
  NChart chart;
  for (std::size_t i = 0; i < maps.phi.size(); ++i) {
    double reach = 0.0;
    for (std::size_t k = 0; k < 256; ++k) {
      const cplx v = maps.phi[i].eval(std::polar(1.0, kTwoPi * static_cast<double>(k) / 256.0));
      reach = std::max(reach, std::abs(v - maps.punctures[i]));
    }
    double limit = 1e300;
    for (std::size_t j = 0; j < maps.punctures.size(); ++j)
      if (j != i) limit = std::min(limit, 0.45 * std::abs(maps.punctures[i] - maps.punctures[j]));
    const double r = std::min(radius_factor * reach, std::max(limit, reach * (1.0 + 1e-6)));
    DiscChart dc;
    dc.center = maps.punctures[i];
    dc.radius = r;
    dc.map = Mobius(1.0, -maps.punctures[i], 0.0, r);  // (z - p_i)/r
    chart.charts.push_back(dc);
  }
  return chart;
}

std::vector<MembershipVerdict> oqco_on_sphere(const NonOverlappingMaps& maps,
                                              const NChart& chart) {
  if (chart.charts.size() != maps.phi.size())
    throw precondition_error("oqco_on_sphere: chart count mismatch");
  std::vector<MembershipVerdict> out;
  for (std::size_t i = 0; i < maps.phi.size(); ++i) {
    const DiscChart& dc = chart.charts[i];
    for (std::size_t k = 0; k < 256; ++k) {
      const cplx v = maps.phi[i].eval(std::polar(1.0, kTwoPi * static_cast<double>(k) / 256.0));
      if (std::abs(v - dc.center) >= dc.radius)
        throw precondition_error("oqco_on_sphere: map closure escapes its chart domain");
    }
    out.push_back(oqco_membership(chart_compose(dc.map, maps.phi[i], 512)));
  }
  return out;
}

ChartIndependenceReport chart_independence_check(const NonOverlappingMaps& maps,
                                                 const NChart& a, const NChart& b) {
  ChartIndependenceReport rep;
  const auto va = oqco_on_sphere(maps, a);
  const auto vb = oqco_on_sphere(maps, b);
  rep.agree = true;
  for (std::size_t i = 0; i < va.size(); ++i) {
    rep.verdict_a.push_back(va[i].verdict);
    rep.verdict_b.push_back(vb[i].verdict);
    if (va[i].verdict != vb[i].verdict) rep.agree = false;
  }

  // Minkowski bound on the transition eta o zeta^{-1} applied to f = zeta o phi
  rep.minkowski_ok = true;
  rep.worst_slack = 1e300;
  const std::size_t n = 256;
  for (std::size_t i = 0; i < maps.phi.size(); ++i) {
    const Mobius trans = b.charts[i].map.compose(a.charts[i].map.inverse());
    const PowerSeries fa = chart_compose(a.charts[i].map, maps.phi[i], n);
    const PowerSeries fb = chart_compose(b.charts[i].map, maps.phi[i], n);
    const PowerSeries term =
        multiply(compose(mobius_preschwarzian(trans, n), fa), differentiate(fa).resized(n));
    const double lhs = bergman_norm(pre_schwarzian(fb));
    const double rhs = bergman_norm(term) + bergman_norm(pre_schwarzian(fa));
    const double slack = rhs - lhs;
    rep.worst_slack = std::min(rep.worst_slack, slack);
    if (slack < -1e-8) rep.minkowski_ok = false;
  }
  return rep;
}

EquivalenceReport moduli_equivalent(const NonOverlappingMaps& a, const NonOverlappingMaps& b,
                                    double tol, std::size_t samples) {
  if (a.punctures.size() != b.punctures.size())
    throw precondition_error("moduli_equivalent: puncture counts differ");
  if (a.punctures.size() < 3)
    throw unsupported_kind_error("moduli_equivalent: need at least 3 punctures");

  EquivalenceReport rep;
  const Mobius na = Mobius::three_point(SpherePoint::at(a.punctures[0]),
                                        SpherePoint::at(a.punctures[1]),
                                        SpherePoint::at(a.punctures[2]));
  const Mobius nb = Mobius::three_point(SpherePoint::at(b.punctures[0]),
                                        SpherePoint::at(b.punctures[1]),
                                        SpherePoint::at(b.punctures[2]));
  Mobius sigma = nb.inverse().compose(na);
  // normalize the representative to determinant 1
  const cplx det = sigma.a() * sigma.d() - sigma.b() * sigma.c();
  const cplx s = std::sqrt(det);
  sigma = Mobius(sigma.a() / s, sigma.b() / s, sigma.c() / s, sigma.d() / s);
  rep.witness = sigma;

  for (std::size_t i = 0; i < a.punctures.size(); ++i) {
    const double e = std::abs(sigma.apply_finite(a.punctures[i]) - b.punctures[i]);
    rep.worst_puncture_error = std::max(rep.worst_puncture_error, e);
  }
  for (std::size_t i = 0; i < a.phi.size(); ++i) {
    for (std::size_t k = 0; k < samples; ++k) {
      const cplx z = std::polar(1.0, kTwoPi * static_cast<double>(k) / samples);
      const double d = std::abs(sigma.apply_finite(a.phi[i].eval(z)) - b.phi[i].eval(z));
      rep.worst_boundary_distance = std::max(rep.worst_boundary_distance, d);
    }
  }
  rep.equivalent = rep.worst_puncture_error < tol && rep.worst_boundary_distance < tol;
  return rep;
}

}  // namespace teichnum
