#include "teichnum/quadrature.hpp"

#include <numbers>

namespace teichnum {

GaussRule gauss_legendre01(std::size_t n) {
  // Newton iteration on Legendre P_n, nodes on [-1,1], then map to [0,1].
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      pp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = 0.5 * (1.0 - x);  // descending x -> ascending node
    rule.weights[i] = 1.0 / ((1.0 - x * x) * pp * pp);
  }
  return rule;
}

GaussRule radial_rule(double alpha, std::size_t n) {
  if (alpha <= -1.0) throw precondition_error("radial_rule: alpha must exceed -1");
  const GaussRule base = gauss_legendre01(n);
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double two_alpha = 2.0 * alpha;
  const bool half_integer = std::abs(two_alpha - std::round(two_alpha)) < 1e-12;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = base.nodes[i], wt = base.weights[i];
    if (half_integer) {
      // u = t^2:  (1/2) int u^alpha F(u) du = int t^{2a+1} F(t^2) dt
      const double u = t * t;
      rule.nodes[i] = std::sqrt(std::max(0.0, 1.0 - u));
      rule.weights[i] = wt * std::pow(t, two_alpha + 1.0);
    } else if (alpha < 0.0) {
      // u = t^{1/(1+alpha)} removes the u^alpha singularity exactly
      const double p = 1.0 / (1.0 + alpha);
      const double u = std::pow(t, p);
      rule.nodes[i] = std::sqrt(std::max(0.0, 1.0 - u));
      rule.weights[i] = wt * 0.5 * p;
    } else {
      const double u = t;
      rule.nodes[i] = std::sqrt(std::max(0.0, 1.0 - u));
      rule.weights[i] = wt * 0.5 * std::pow(u, alpha);
    }
  }
  return rule;
}

double disc_integral(const std::function<double(cplx)>& g, double alpha,
                     std::size_t n_rad, std::size_t n_ang, ExecPolicy policy) {
  const GaussRule rad = radial_rule(alpha, n_rad);
  const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(n_ang);
  double total = 0.0;
  if (policy == ExecPolicy::parallel) {
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n_rad); ++i) {
      double ring = 0.0;
      const double r = rad.nodes[i];
      for (std::size_t j = 0; j < n_ang; ++j) {
        const double th = dtheta * static_cast<double>(j);
        ring += g(cplx(r * std::cos(th), r * std::sin(th)));
      }
      total += rad.weights[i] * ring * dtheta;
    }
  } else {
    for (std::size_t i = 0; i < n_rad; ++i) {
      double ring = 0.0;
      const double r = rad.nodes[i];
      for (std::size_t j = 0; j < n_ang; ++j) {
        const double th = dtheta * static_cast<double>(j);
        ring += g(cplx(r * std::cos(th), r * std::sin(th)));
      }
      total += rad.weights[i] * ring * dtheta;
    }
  }
  return total;
}

double disc_integral_fprime_pow(const PowerSeries& f, double p, double alpha,
                                std::size_t n_rad, std::size_t n_ang, ExecPolicy policy) {
  return disc_integral(
      [&f, p](cplx z) { return std::pow(std::abs(f.eval_derivative(z)), p); }, alpha,
      n_rad, n_ang, policy);
}

}  // namespace teichnum
