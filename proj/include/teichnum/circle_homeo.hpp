#pragma once

// Analytic orientation-preserving circle homeomorphisms, represented by a
// real trigonometric displacement u with h(e^{i theta}) = e^{i(theta + u)}.
// Analyticity in a strip |Im theta| < margin makes composition, inversion
// and annulus extension well posed.

#include <cstddef>
#include <vector>

#include "teichnum/series.hpp"

namespace teichnum {

class CircleHomeo {
 public:
  // cos_coeffs[k], sin_coeffs[k] multiply cos(k theta), sin(k theta);
  // sin_coeffs[0] is ignored.  margin > 0 is the analyticity strip width.
  CircleHomeo(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs,
              double margin);

  static CircleHomeo identity(double margin = 1.0);
  static CircleHomeo rotation(double alpha, double margin = 1.0);

  // displacement u and its derivative at a complexified angle
  cplx displacement(cplx theta) const;
  cplx displacement_derivative(cplx theta) const;

  // h(e^{i theta}) = e^{i(theta + u(theta))}
  cplx eval_angle(cplx theta) const;
  // image of a point on the unit circle
  cplx eval(cplx z) const;

  // min over the circle of 1 + u'(theta); positive iff orientation-preserving
  double orientation_margin(std::size_t samples = 1024) const;

  double margin() const { return margin_; }
  std::size_t modes() const { return cos_.size(); }
  const std::vector<double>& cos_coeffs() const { return cos_; }
  const std::vector<double>& sin_coeffs() const { return sin_; }

 private:
  std::vector<double> cos_, sin_;
  double margin_;
};

// h1 o h2, refit to a trigonometric polynomial of n_modes modes by FFT.
CircleHomeo compose_homeo(const CircleHomeo& h1, const CircleHomeo& h2,
                          std::size_t n_modes = 0);

// h^{-1}, via Newton iteration on the lift, refit by FFT.
CircleHomeo invert_homeo(const CircleHomeo& h, std::size_t n_modes = 0);

// Fit the displacement samples u(2 pi k / M) of a circle map to a CircleHomeo.
CircleHomeo fit_homeo(const std::vector<double>& displacement_samples,
                      std::size_t n_modes, double margin);

}  // namespace teichnum
