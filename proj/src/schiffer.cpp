#include "teichnum/schiffer.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "teichnum/errors.hpp"

namespace teichnum {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

void PuncturedSphereConfig::validate() const {
  if (punctures.size() < 4) throw precondition_error("config: need at least 4 punctures");
  if (epsilon.size() != discs.size())
    throw precondition_error("config: one epsilon per disc required");
  for (std::size_t i = 0; i < punctures.size(); ++i)
    for (std::size_t j = i + 1; j < punctures.size(); ++j) {
      const bool same = punctures[i].infinite
                            ? punctures[j].infinite
                            : (!punctures[j].infinite &&
                               std::abs(punctures[i].value - punctures[j].value) < 1e-12);
      if (same) throw precondition_error("config: punctures must be distinct");
    }
  for (std::size_t i = 0; i < discs.size(); ++i) {
    if (discs[i].radius <= 0.0) throw precondition_error("config: nonpositive disc radius");
    if (std::abs(epsilon[i]) > guard * discs[i].radius * discs[i].radius)
      throw precondition_error("config: epsilon exceeds the injectivity guard");
    for (std::size_t j = i + 1; j < discs.size(); ++j)
      if (std::abs(discs[i].center - discs[j].center) <= discs[i].radius + discs[j].radius)
        throw precondition_error("config: disc closures overlap");
    for (const SpherePoint& p : punctures)
      if (!p.infinite && std::abs(p.value - discs[i].center) <= discs[i].radius)
        throw precondition_error("config: puncture inside a disc closure");
  }
}

CapPair cap_maps(cplx eps) {
  if (std::abs(eps) >= 1.0) throw degeneration_error("cap_maps: |eps| >= 1 degenerates the cap");
  CapPair out{PowerSeries({cplx(1.0), cplx(0.0), eps}, SeriesKind::exterior),
              RealLinearMap{cplx(1.0), eps}};
  // boundary agreement: conj(z) = 1/z on the circle
  for (int k = 0; k < 8; ++k) {
    const cplx z = std::polar(1.0, kTwoPi * k / 8.0);
    if (std::abs(out.v.eval(z) - out.w.apply(z)) > 1e-14)
      throw solver_breakdown_error("cap_maps: boundary mismatch");
  }
  return out;
}

VariedConfig schiffer_vary(const PuncturedSphereConfig& config, std::size_t n_modes) {
  config.validate();
  VariedConfig out;
  out.punctures = config.punctures;

  std::size_t M = 4;
  while (M < 8 * (n_modes + 1)) M <<= 1;

  for (std::size_t i = 0; i < config.discs.size(); ++i) {
    const ParametricDisc& disc = config.discs[i];
    const cplx eps = config.epsilon[i];
    if (std::abs(eps) == 0.0) {
      out.report.exterior_maps.push_back(CapMap{disc.center, disc.radius, {}});
      out.report.residuals.push_back(0.0);
      continue;
    }
    std::vector<cplx> eta(M), xi(M);
    for (std::size_t m = 0; m < M; ++m) {
      const cplx e = std::polar(1.0, kTwoPi * static_cast<double>(m) / static_cast<double>(M));
      eta[m] = disc.center + disc.radius * e;  // boundary of the removed disc
      xi[m] = e + eps / e;                     // the cap curve v^eps(S^1)
    }
    SewSolution sol = sew_along(eta, xi, disc.center, disc.radius, n_modes);
    for (SpherePoint& p : out.punctures) {
      if (p.infinite) continue;  // G(z) = z + O(1/z) fixes infinity
      p.value = sol.exterior.eval(p.value);
    }
    for (std::size_t a = 0; a < out.punctures.size(); ++a)
      for (std::size_t b = a + 1; b < out.punctures.size(); ++b)
        if (!out.punctures[a].infinite && !out.punctures[b].infinite &&
            std::abs(out.punctures[a].value - out.punctures[b].value) < 1e-12)
          throw degeneration_error("schiffer_vary: punctures collided");
    out.report.exterior_maps.push_back(std::move(sol.exterior));
    out.report.residuals.push_back(sol.residual);
  }
  return out;
}

ClassifyingCoordinate classify(const std::vector<SpherePoint>& punctures) {
  if (punctures.size() < 4) throw precondition_error("classify: need at least 4 punctures");
  const Mobius m = Mobius::three_point(punctures[0], punctures[1], punctures[2]);
  ClassifyingCoordinate out;
  for (std::size_t k = 3; k < punctures.size(); ++k) {
    const SpherePoint img = m.apply(punctures[k]);
    if (img.infinite) throw degeneration_error("classify: coordinate at infinity");
    if (std::abs(img.value) < 1e-12 || std::abs(img.value - 1.0) < 1e-12)
      throw degeneration_error("classify: coordinate hit 0 or 1");
    out.lambda.push_back(img.value);
  }
  return out;
}

ClassifyingCoordinate classify(const PuncturedSphereConfig& config) {
  return classify(config.punctures);
}

CRReport cr_stencil(const std::function<cplx(cplx)>& coordinate, cplx eps0,
                    const std::vector<double>& deltas) {
  CRReport rep;
  const cplx iu(0.0, 1.0);
  for (const double d : deltas) {
    const cplx lp = coordinate(eps0 + d), lm = coordinate(eps0 - d);
    const cplx lip = coordinate(eps0 + iu * d), lim = coordinate(eps0 - iu * d);
    const cplx de = ((lp - lm) - iu * (lip - lim)) / (4.0 * d);
    const cplx deb = ((lp - lm) + iu * (lip - lim)) / (4.0 * d);
    rep.deltas.push_back(d);
    rep.d_eps.push_back(de);
    rep.d_epsbar.push_back(deb);
    rep.ratios.push_back(std::abs(de) > 0.0 ? std::abs(deb) / std::abs(de)
                                            : std::numeric_limits<double>::infinity());
  }
  return rep;
}

CRReport holomorphy_probe(const PuncturedSphereConfig& config, std::size_t disc_index,
                          const std::vector<double>& deltas, std::size_t n_modes) {
  if (disc_index >= config.discs.size())
    throw precondition_error("holomorphy_probe: disc index out of range");
  auto coordinate = [&](cplx eps) {
    PuncturedSphereConfig c = config;
    c.epsilon[disc_index] = eps;
    return classify(schiffer_vary(c, n_modes).punctures).lambda.front();
  };
  return cr_stencil(coordinate, config.epsilon[disc_index], deltas);
}

}  // namespace teichnum
