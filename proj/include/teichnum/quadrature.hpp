#pragma once

// Polar quadrature over the unit disc with (1-r^2)^alpha radial weights.
// The parallel path is the production one; the serial path is kept as the
// reference implementation for tests and benchmarks.

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "teichnum/errors.hpp"
#include "teichnum/series.hpp"

namespace teichnum {

enum class ExecPolicy { serial, parallel };

struct GaussRule {
  std::vector<double> nodes;    // on (0,1)
  std::vector<double> weights;
};

// Gauss-Legendre rule transplanted to [0,1].
GaussRule gauss_legendre01(std::size_t n);

// Radial rule for  int_0^1 f(r) (1-r^2)^alpha r dr  ~  sum w_i f(r_i),
// valid for alpha > -1.  Endpoint singularities at r=1 are removed by a
// substitution in u = 1-r^2 before applying Gauss-Legendre.
GaussRule radial_rule(double alpha, std::size_t n);

// int_D g(z) (1-|z|^2)^alpha dA for a pointwise-evaluable integrand g.
double disc_integral(const std::function<double(cplx)>& g, double alpha,
                     std::size_t n_rad, std::size_t n_ang,
                     ExecPolicy policy = ExecPolicy::parallel);

// Same quadrature grid specialized to |f'(z)|^p weights, the dominant use.
double disc_integral_fprime_pow(const PowerSeries& f, double p, double alpha,
                                std::size_t n_rad, std::size_t n_ang,
                                ExecPolicy policy = ExecPolicy::parallel);

}  // namespace teichnum
