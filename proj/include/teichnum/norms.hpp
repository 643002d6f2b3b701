#pragma once

// Norms and integral functionals on holomorphic functions of the disc:
// Bergman and hyperbolic-sup norms, Dirichlet and Besov norms, weighted
// |f'|^p integrals, little-Bloch decay profiles, hyperbolic L^2 norms of
// Beltrami fields on the exterior disc, and Carleson box measures.

#include <cstddef>
#include <vector>

#include "teichnum/quadrature.hpp"
#include "teichnum/series.hpp"

namespace teichnum {

struct WeightedIntegralSpec {
  enum class Role { fprime_power, phi_squared, psi_power };
  double p = 2.0;
  double alpha = 0.0;
  Role role = Role::fprime_power;
};

// Exact Parseval evaluation of (iint_D |phi|^2 dA)^{1/2} on the truncation.
double bergman_norm(const PowerSeries& phi);

// (iint_D |psi'|^2 dA)^{1/2}; requires psi(0) = 0.
double dirichlet_norm(const PowerSeries& psi);

struct SupReport {
  double value = 0.0;
  bool converged = false;  // false: value is a lower bound at the grid cap
  std::size_t levels = 0;
};

// sup over D of (1-|z|^2)|phi(z)|, grid-refined until stable to 1e-6.
SupReport sup_hyp_norm(const PowerSeries& phi, std::size_t max_levels = 8);

// Besov norm |f(0)| + (iint |f'|^p (1-|z|^2)^{p-2} dA)^{1/p}, p in (1,inf).
double besov_norm(const PowerSeries& f, double p,
                  std::size_t n_rad = 200, std::size_t n_ang = 512,
                  ExecPolicy policy = ExecPolicy::parallel);

// iint_D |f'|^p (1-|z|^2)^alpha dA.
double weighted_fprime_integral(const PowerSeries& f, const WeightedIntegralSpec& spec,
                                std::size_t n_rad = 200, std::size_t n_ang = 512,
                                ExecPolicy policy = ExecPolicy::parallel);

struct LittleBlochProfile {
  std::vector<double> radii;
  std::vector<double> ring_max;  // max over angle of (1-r^2)|g'|
  bool decays = false;           // monotone decay on the last quartile
};

LittleBlochProfile little_bloch_profile(const PowerSeries& g, std::size_t rungs = 16,
                                        std::size_t n_ang = 512);

// Beltrami field sampled on a polar grid over an annulus strictly outside
// the closed unit disc.  mu is radius-major: mu[i * n_theta + j].
struct BeltramiGrid {
  std::vector<double> radii;
  std::size_t n_theta = 0;
  std::vector<cplx> mu;
  double r_out = 4.0;

  void validate() const;
};

struct HypL2Report {
  double value = 0.0;       // sqrt of the truncated-annulus integral
  double tail_bound = 0.0;  // analytic bound on the |z| > r_out remainder
};

HypL2Report hyp_L2_norm(const BeltramiGrid& grid);
double sup_norm(const BeltramiGrid& grid);

struct CarlesonPoint {
  double r = 0.0;        // |z|
  double box_mass = 0.0; // mu(S(z)) with d mu = (1-|zeta|^2)^w dA
  double bound = 0.0;    // {log (1+r)/(1-r)}^{-1/p'}
};

struct CarlesonReport {
  double best_constant = 0.0;  // smallest C with mu(S(z))^{1/q} <= C * bound
  std::vector<CarlesonPoint> points;
};

// Box masses mu(S(z)) for the weight (1-|zeta|^2)^weight_exp over a radial
// grid, and the smallest constant for the embedding inequality; 1 < p < q.
CarlesonReport carleson_box_measure(double q, double p, double weight_exp = 0.5,
                                    std::size_t grid_points = 64);

}  // namespace teichnum
