#pragma once

// Genus-zero bordered spheres with riggings: sew caps along analytic
// boundary parametrizations, certify non-overlapping refined maps, check
// chart independence of the membership verdict, and decide rigged-moduli
// equivalence up to a Mobius transformation.

#include <cstddef>
#include <vector>

#include "teichnum/circle_homeo.hpp"
#include "teichnum/mobius.hpp"
#include "teichnum/preschwarzian.hpp"
#include "teichnum/series.hpp"
#include "teichnum/sewing.hpp"

namespace teichnum {

struct BorderedSphere {
  std::vector<PowerSeries> caps;  // univalent cap embeddings Psi_i on the disc

  // univalence of each cap and pairwise boundary separation
  void validate(std::size_t samples = 512) const;
};

struct RiggedSphere {
  BorderedSphere base;
  std::vector<CircleHomeo> riggings;  // psi_i = Psi_i o h_i on the circle
};

struct NonOverlappingMaps {
  std::vector<PowerSeries> phi;  // phi_i(0) = punctures[i]
  std::vector<cplx> punctures;

  void validate(std::size_t samples = 512) const;
};

struct SewResult {
  NonOverlappingMaps maps;
  std::vector<double> residuals;  // per-cap sewing residuals
  std::vector<CapMap> exterior_maps;
};

// Sequentially sew a unit-disc cap onto each boundary curve along its
// rigging; previously built maps and curves are pushed through each
// exterior uniformizer.
SewResult sew_caps(const RiggedSphere& rigged, std::size_t n_modes = 32, double tol = 1e-8);

struct DiscChart {
  cplx center{};      // E_i center (must contain closure(phi_i(D)))
  double radius = 1;  // E_i radius
  Mobius map = Mobius::identity();  // zeta_i with zeta_i(p_i) = 0
};

struct NChart {
  std::vector<DiscChart> charts;
};

// the canonical chart zeta_i(z) = (z - p_i)/R_i on discs around the punctures
NChart default_chart(const NonOverlappingMaps& maps, double radius_factor = 1.5);

std::vector<MembershipVerdict> oqco_on_sphere(const NonOverlappingMaps& maps,
                                              const NChart& chart);

struct ChartIndependenceReport {
  std::vector<Membership> verdict_a, verdict_b;
  bool agree = false;
  bool minkowski_ok = false;  // transition-composition norm bound
  double worst_slack = 0.0;
};

ChartIndependenceReport chart_independence_check(const NonOverlappingMaps& maps,
                                                 const NChart& a, const NChart& b);

struct EquivalenceReport {
  bool equivalent = false;
  Mobius witness = Mobius::identity();
  double worst_puncture_error = 0.0;
  double worst_boundary_distance = 0.0;
};

EquivalenceReport moduli_equivalent(const NonOverlappingMaps& a, const NonOverlappingMaps& b,
                                    double tol = 1e-6, std::size_t samples = 512);

}  // namespace teichnum
