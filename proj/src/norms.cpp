#include "teichnum/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace teichnum {

namespace {
constexpr double kPi = std::numbers::pi;
}

double bergman_norm(const PowerSeries& phi) {
  if (!phi.interior()) throw unsupported_kind_error("bergman_norm: interior series required");
  double s = 0.0;
  for (std::size_t n = 0; n < phi.truncation(); ++n)
    s += std::norm(phi.coeff(n)) / static_cast<double>(n + 1);
  return std::sqrt(kPi * s);
}

double dirichlet_norm(const PowerSeries& psi) {
  if (!psi.interior()) throw unsupported_kind_error("dirichlet_norm: interior series required");
  if (std::abs(psi.coeff(0)) > 1e-12)
    throw precondition_error("dirichlet_norm: psi(0) = 0 required");
  double s = 0.0;
  for (std::size_t n = 1; n < psi.truncation(); ++n)
    s += static_cast<double>(n) * std::norm(psi.coeff(n));
  return std::sqrt(kPi * s);
}

SupReport sup_hyp_norm(const PowerSeries& phi, std::size_t max_levels) {
  if (!phi.interior()) throw unsupported_kind_error("sup_hyp_norm: interior series required");
  SupReport report;
  double prev = -1.0;
  std::size_t n_rad = 64, n_ang = 128;
  for (std::size_t level = 0; level < max_levels; ++level) {
    double best = 0.0;
#pragma omp parallel for reduction(max : best) schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n_rad); ++i) {
      // cluster radii toward the boundary where the weight decays
      const double t = static_cast<double>(i) / static_cast<double>(n_rad);
      const double r = 1.0 - (1.0 - t) * (1.0 - t);
      const double w = 1.0 - r * r;
      for (std::size_t j = 0; j < n_ang; ++j) {
        const double th = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n_ang);
        const double v = w * std::abs(phi.eval(cplx(r * std::cos(th), r * std::sin(th))));
        best = std::max(best, v);
      }
    }
    report.value = std::max(report.value, best);
    report.levels = level + 1;
    if (prev >= 0.0 && std::abs(best - prev) < 1e-6) {
      report.converged = true;
      break;
    }
    prev = best;
    n_rad *= 2;
    n_ang *= 2;
  }
  return report;
}

double besov_norm(const PowerSeries& f, double p, std::size_t n_rad, std::size_t n_ang,
                  ExecPolicy policy) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw precondition_error("besov_norm: p in (1, inf) required");
  const double integral = disc_integral_fprime_pow(f, p, p - 2.0, n_rad, n_ang, policy);
  return std::abs(f.coeff(0)) + std::pow(integral, 1.0 / p);
}

double weighted_fprime_integral(const PowerSeries& f, const WeightedIntegralSpec& spec,
                                std::size_t n_rad, std::size_t n_ang, ExecPolicy policy) {
  if (!(spec.p > 0.0)) throw precondition_error("weighted integral: p > 0 required");
  if (!(spec.alpha > -1.0)) throw precondition_error("weighted integral: alpha > -1 required");
  return disc_integral_fprime_pow(f, spec.p, spec.alpha, n_rad, n_ang, policy);
}

LittleBlochProfile little_bloch_profile(const PowerSeries& g, std::size_t rungs,
                                        std::size_t n_ang) {
  const PowerSeries gp = differentiate(g);
  LittleBlochProfile profile;
  profile.radii.resize(rungs);
  profile.ring_max.resize(rungs);
  for (std::size_t k = 0; k < rungs; ++k) {
    // geometric ladder 1 - 2^{-(k+1)} toward the boundary
    const double r = 1.0 - std::pow(2.0, -static_cast<double>(k + 1));
    profile.radii[k] = r;
    double best = 0.0;
    for (std::size_t j = 0; j < n_ang; ++j) {
      const double th = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n_ang);
      best = std::max(best,
                      (1.0 - r * r) * std::abs(gp.eval(cplx(r * std::cos(th), r * std::sin(th)))));
    }
    profile.ring_max[k] = best;
  }
  profile.decays = true;
  for (std::size_t k = rungs - rungs / 4; k + 1 < rungs; ++k)
    if (profile.ring_max[k + 1] > profile.ring_max[k]) profile.decays = false;
  return profile;
}

void BeltramiGrid::validate() const {
  if (radii.empty() || n_theta == 0 || mu.size() != radii.size() * n_theta)
    throw precondition_error("BeltramiGrid: inconsistent dimensions");
  for (double r : radii)
    if (!(r > 1.0)) throw precondition_error("BeltramiGrid: grid must stay outside |z| = 1");
  for (const cplx& m : mu)
    if (!std::isfinite(m.real()) || !std::isfinite(m.imag()))
      throw precondition_error("BeltramiGrid: non-finite sample");
}

HypL2Report hyp_L2_norm(const BeltramiGrid& grid) {
  grid.validate();
  const double dtheta = 2.0 * kPi / static_cast<double>(grid.n_theta);
  // trapezoid in radius over the supplied (possibly non-uniform) rings
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < grid.radii.size(); ++i) {
    auto ring_value = [&](std::size_t row) {
      const double r = grid.radii[row];
      const double w = std::pow(r * r - 1.0, -2.0) * r;
      double s = 0.0;
      for (std::size_t j = 0; j < grid.n_theta; ++j)
        s += std::norm(grid.mu[row * grid.n_theta + j]);
      return w * s * dtheta;
    };
    integral += 0.5 * (ring_value(i) + ring_value(i + 1)) * (grid.radii[i + 1] - grid.radii[i]);
  }
  double sup_last = 0.0;
  const std::size_t last = grid.radii.size() - 1;
  for (std::size_t j = 0; j < grid.n_theta; ++j)
    sup_last = std::max(sup_last, std::abs(grid.mu[last * grid.n_theta + j]));
  HypL2Report report;
  report.value = std::sqrt(integral);
  // int_{r_out}^inf (rho^2-1)^{-2} rho d rho = 1 / (2 (r_out^2 - 1))
  report.tail_bound = sup_last * sup_last * 2.0 * kPi / (2.0 * (grid.r_out * grid.r_out - 1.0));
  return report;
}

double sup_norm(const BeltramiGrid& grid) {
  grid.validate();
  double best = 0.0;
  for (const cplx& m : grid.mu) best = std::max(best, std::abs(m));
  return best;
}

CarlesonReport carleson_box_measure(double q, double p, double weight_exp,
                                    std::size_t grid_points) {
  if (!(1.0 < p && p < q)) throw precondition_error("carleson: need 1 < p < q");
  const double p_dual = p / (p - 1.0);
  CarlesonReport report;
  report.points.reserve(grid_points);
  const GaussRule base = gauss_legendre01(128);
  for (std::size_t k = 0; k < grid_points; ++k) {
    // radii start at 0 (full disc) and accumulate toward 1 where the
    // estimate is delicate
    const double t = static_cast<double>(k) / static_cast<double>(grid_points);
    const double r = 1.0 - std::pow(10.0, -6.0 * t);
    // radial band rho in [r, 1]; substitute u = 1 - rho^2, then u = s^2
    const double s_hi = std::sqrt(1.0 - r * r);
    double radial = 0.0;
    for (std::size_t i = 0; i < base.nodes.size(); ++i) {
      const double s = base.nodes[i] * s_hi;
      radial += base.weights[i] * s_hi * std::pow(s, 2.0 * weight_exp + 1.0);
    }
    const double arc = 2.0 * kPi * std::min(1.0, 1.0 - r);
    CarlesonPoint pt;
    pt.r = r;
    pt.box_mass = arc * radial;
    pt.bound = std::pow(std::log((1.0 + r) / (1.0 - r)), -1.0 / p_dual);
    report.points.push_back(pt);
    report.best_constant =
        std::max(report.best_constant, std::pow(pt.box_mass, 1.0 / q) / pt.bound);
  }
  return report;
}

}  // namespace teichnum
