#pragma once

// Numerical instances of the analytic inequalities underlying the library:
// Minkowski-type composition bounds, Hardy-Littlewood and embedding
// estimates, Carleson box bounds, uniform integrability along holomorphic
// curves, and Cauchy-Riemann diagnostics of left composition.

#include <string>
#include <utility>
#include <vector>

#include "teichnum/circle_homeo.hpp"
#include "teichnum/preschwarzian.hpp"
#include "teichnum/schiffer.hpp"
#include "teichnum/series.hpp"

namespace teichnum {

struct HolomorphicCurveSpec {
  PreSchwarzianCoords base;   // chi(f_0)
  PowerSeries direction;      // perturbation of the Bergman coordinate
  std::vector<cplx> q_poly;   // scalar path q(t), q(0) = base.d
  std::vector<double> t_grid;

  PowerSeries f_at(cplx t) const;
  void validate() const;  // univalence on the grid, q nonvanishing
};

struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, double>> quantities;
  double tolerance = 0.0;
  bool pass = false;
};

// f_0 = z + sum_{k=2..6} c_k z^k with sum k |c_k| <= 0.3 (univalent by the
// coefficient criterion), q(t) = d_0 (1 + t/10), direction of Bergman norm
// <= 0.1, symmetric t-grid.
HolomorphicCurveSpec standard_curve(unsigned seed, std::size_t truncation = 64);
PowerSeries standard_base_map(unsigned seed, std::size_t truncation = 64);

CheckReport check_minkowski(const PowerSeries& h, const PowerSeries& f);
CheckReport check_hardy_littlewood(const std::vector<PowerSeries>& family, double p,
                                   double alpha);
CheckReport check_carleson_chain(double beta);
CheckReport check_ars_embedding(const std::vector<PowerSeries>& psi_family, double beta);
CheckReport check_uniform_fprime(const HolomorphicCurveSpec& curve, double p, double alpha);
CheckReport check_wulfs(const HolomorphicCurveSpec& curve, const PowerSeries& psi, double beta);
CheckReport check_left_composition_holo(const PowerSeries& h, const HolomorphicCurveSpec& curve,
                                        const std::vector<double>& deltas = {4e-2, 2e-2, 1e-2});
CheckReport check_qso_closure(const CircleHomeo& h1, const CircleHomeo& h2);

// the full suite over the seeded standard family
std::vector<CheckReport> run_verify_suite(std::size_t seeds = 50, unsigned base_seed = 1u);

}  // namespace teichnum
