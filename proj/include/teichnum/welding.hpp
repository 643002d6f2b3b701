#pragma once

// Conformal welding: factor an analytic circle homeomorphism h as
// g o h = f on the unit circle, with f univalent on the disc (f(0) = 0)
// and g univalent outside it (g(w) = w + O(1) near infinity).  Also the
// quasiconformal annulus extension of h and the Oqc_0 certificate built
// from it.

#include <cstddef>

#include "teichnum/circle_homeo.hpp"
#include "teichnum/norms.hpp"
#include "teichnum/series.hpp"

namespace teichnum {

struct WeldingPair {
  PowerSeries f;  // interior, f(0) = 0
  PowerSeries g;  // exterior, g'(inf) = 1
  double residual = 0.0;
  std::size_t iterations = 0;
  std::size_t truncation = 0;
};

// sup over M circle samples of |f(e^{i theta}) - g(h(e^{i theta}))|.
double welding_residual(const PowerSeries& f, const PowerSeries& g, const CircleHomeo& h,
                        std::size_t samples = 2048);

// Solve the welding problem by Newton iteration on the Fourier conditions;
// the truncation ladder doubles until the residual is below tol.  Throws
// convergence_error (carrying the last residual) if max_iter is exhausted.
WeldingPair weld(const CircleHomeo& h, double tol = 1e-10, std::size_t max_iter = 8,
                 std::size_t initial_truncation = 16, unsigned init_seed = 0u);

struct ExtensionField {
  BeltramiGrid grid;      // dilatation of the extension, zero on (1, R)
  double annulus_outer;   // R: conformal on 1 < |z| < R
  double sup_mu = 0.0;
  HypL2Report l2;
};

// Extend h to the exterior disc: conformal on the annulus 1 < |z| < R via
// the complexified angle, radially homogeneous beyond R.  R defaults to
// e^{margin/2}, staying inside the strip of analyticity.
ExtensionField build_extension(const CircleHomeo& h, double r_annulus = 0.0,
                               std::size_t n_rad = 96, std::size_t n_theta = 256);

struct QsoCertificate {
  bool certified = false;
  double sup_mu = 0.0;       // must be < 1
  double l2_value = 0.0;     // hyperbolic L^2 norm of the dilatation
  double l2_tail = 0.0;
  double welding_residual = 0.0;
};

// Certify h as the welding of an asymptotically conformal map: build the
// extension, demand sup|mu| < 1 with finite hyperbolic L^2 energy, and
// check the welding factorization solves to tolerance.
QsoCertificate qs0_certify(const CircleHomeo& h, double tol = 1e-8);

}  // namespace teichnum
