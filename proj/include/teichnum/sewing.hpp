#pragma once

// Sewing along an analytic curve: given a parametrized boundary curve
// eta(theta) of an exterior region and the matching parametrized curve
// xi(theta) bounding a cap region, find G conformal outside eta (with
// G(z) = z + O(1/z) at infinity) and a polynomial F on the cap so that
// G(eta(theta)) = F(xi(theta)).  This is the workhorse behind Schiffer
// variation and cap sewing; plain conformal welding is the special case
// eta = h(e^{i theta}), xi = e^{i theta}.

#include <cstddef>
#include <vector>

#include "teichnum/series.hpp"

namespace teichnum {

// G(z) = z + sum_j b[j-1] * ((z - center)/scale)^{-j}
struct CapMap {
  cplx center{};
  double scale = 1.0;
  std::vector<cplx> b;

  cplx eval(cplx z) const;
  cplx eval_derivative(cplx z) const;
  bool is_identity(double tol = 0.0) const;
};

struct SewSolution {
  CapMap exterior;        // G
  PowerSeries cap = PowerSeries::zero(2);  // F in the cap coordinate
  double residual = 0.0;  // sup boundary mismatch on a doubled sample set
};

// eta and xi must be sampled at the same power-of-two set of equispaced
// angles.  n_modes is the truncation K of both expansions.
SewSolution sew_along(const std::vector<cplx>& eta, const std::vector<cplx>& xi,
                      cplx center, double scale, std::size_t n_modes);

}  // namespace teichnum
