#pragma once

// Schiffer variation of genus-zero punctured spheres: replace parametric
// discs by the caps bounded by v^eps(S^1), re-uniformize by sewing, track
// punctures, and classify the result by cross-ratio coordinates with
// Cauchy-Riemann holomorphy diagnostics.

#include <cstddef>
#include <functional>
#include <vector>

#include "teichnum/mobius.hpp"
#include "teichnum/series.hpp"
#include "teichnum/sewing.hpp"

namespace teichnum {

struct ParametricDisc {
  cplx center{};
  double radius = 1.0;
};

struct PuncturedSphereConfig {
  std::vector<SpherePoint> punctures;  // n >= 4, distinct
  std::vector<ParametricDisc> discs;   // pairwise disjoint closures
  std::vector<cplx> epsilon;           // one entry per disc
  double guard = 0.3;                  // |eps_i| <= guard * r_i^2

  void validate() const;
};

// v^eps(z) = z + eps/z as an exterior-style series, and the real-linear
// interior filling w^eps(z) = z + eps * conj(z).
struct RealLinearMap {
  cplx a{1.0}, b{};  // z -> a z + b conj(z)
  cplx apply(cplx z) const { return a * z + b * std::conj(z); }
};

struct CapPair {
  PowerSeries v;    // exterior series w + eps/w
  RealLinearMap w;  // interior filling
};

CapPair cap_maps(cplx eps);

struct TransitionReport {
  std::vector<CapMap> exterior_maps;  // per disc, in application order
  std::vector<double> residuals;
};

struct VariedConfig {
  std::vector<SpherePoint> punctures;
  TransitionReport report;
};

// Sequentially sew the cap of each disc and push the punctures through the
// exterior uniformizing maps.
VariedConfig schiffer_vary(const PuncturedSphereConfig& config, std::size_t n_modes = 24);

struct ClassifyingCoordinate {
  std::vector<cplx> lambda;  // n - 3 cross-ratio coordinates
};

ClassifyingCoordinate classify(const std::vector<SpherePoint>& punctures);
ClassifyingCoordinate classify(const PuncturedSphereConfig& config);

struct CRReport {
  std::vector<double> deltas;
  std::vector<cplx> d_eps;     // central-difference d lambda / d eps
  std::vector<cplx> d_epsbar;  // d lambda / d conj(eps)
  std::vector<double> ratios;  // |d_epsbar| / |d_eps|
};

// 4-point stencil eps0 +- delta, eps0 +- i delta on an arbitrary
// coordinate function; used directly by tests and by holomorphy_probe.
CRReport cr_stencil(const std::function<cplx(cplx)>& coordinate, cplx eps0,
                    const std::vector<double>& deltas);

// Cauchy-Riemann diagnostics of the first classifying coordinate as a
// function of the chosen disc's eps, around the configured value.
CRReport holomorphy_probe(const PuncturedSphereConfig& config, std::size_t disc_index,
                          const std::vector<double>& deltas = {1e-2, 1e-3},
                          std::size_t n_modes = 24);

}  // namespace teichnum
