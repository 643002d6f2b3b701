#include "teichnum/welding.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "teichnum/errors.hpp"

namespace teichnum {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

// One pass of the ladder: solve the (K+1)-dimensional Fourier system for
// the exterior coefficients by a Newton step from b_init (the map is
// affine, so a single exact step lands on the solution from any start).
WeldingPair solve_at(const CircleHomeo& h, std::size_t K, const Eigen::VectorXcd& b_init) {
  const std::size_t M = next_pow2(8 * (K + 1));
  std::vector<cplx> eta(M);
  for (std::size_t m = 0; m < M; ++m)
    eta[m] = h.eval_angle(kTwoPi * static_cast<double>(m) / static_cast<double>(M));

  // row k is the coefficient of e^{-ik theta}; column j the power eta^{-j}
  Eigen::MatrixXcd A(K + 1, K + 1);
  Eigen::VectorXcd gamma(K + 1);
  std::vector<cplx> buf(M);
  std::vector<cplx> pw(M, cplx(1.0));
  for (std::size_t j = 0; j <= K; ++j) {
    buf = pw;
    fft(buf, -1);
    for (std::size_t k = 0; k <= K; ++k)
      A(k, j) = buf[(M - k) % M] / static_cast<double>(M);
    for (std::size_t m = 0; m < M; ++m) pw[m] /= eta[m];
  }
  for (std::size_t m = 0; m < M; ++m) buf[m] = eta[m];
  fft(buf, -1);
  for (std::size_t k = 0; k <= K; ++k) gamma(k) = buf[(M - k) % M] / static_cast<double>(M);

  const auto qr = A.colPivHouseholderQr();
  const Eigen::VectorXcd residual0 = gamma + A * b_init;
  const Eigen::VectorXcd b = b_init - qr.solve(residual0);
  if (!b.allFinite()) throw solver_breakdown_error("weld: singular Fourier system");

  std::vector<cplx> gc(K + 2);
  gc[0] = 1.0;
  for (std::size_t j = 0; j <= K; ++j) gc[j + 1] = b(j);
  PowerSeries g(std::move(gc), SeriesKind::exterior);

  for (std::size_t m = 0; m < M; ++m) buf[m] = g.eval(eta[m]);
  fft(buf, -1);
  std::vector<cplx> fc(K + 1);
  for (std::size_t n = 1; n <= K; ++n) fc[n] = buf[n] / static_cast<double>(M);
  PowerSeries f(std::move(fc));

  WeldingPair out{std::move(f), std::move(g), 0.0, 0, K + 1};
  out.residual = welding_residual(out.f, out.g, h, 2 * M);
  return out;
}
}  // namespace

double welding_residual(const PowerSeries& f, const PowerSeries& g, const CircleHomeo& h,
                        std::size_t samples) {
  double worst = 0.0;
  for (std::size_t m = 0; m < samples; ++m) {
    const double t = kTwoPi * static_cast<double>(m) / static_cast<double>(samples);
    const cplx z = std::polar(1.0, t);
    const double d = std::abs(f.eval(z) - g.eval(h.eval_angle(t)));
    if (d > worst) worst = d;
  }
  return worst;
}

WeldingPair weld(const CircleHomeo& h, double tol, std::size_t max_iter,
                 std::size_t initial_truncation, unsigned init_seed) {
  std::size_t K = std::max<std::size_t>(initial_truncation, 4);
  double last_residual = 1e300;
  for (std::size_t it = 0; it < max_iter; ++it) {
    Eigen::VectorXcd init = Eigen::VectorXcd::Zero(K + 1);
    if (init_seed != 0) {
      std::mt19937_64 rng(init_seed);
      std::uniform_real_distribution<double> d(-1.0, 1.0);
      for (Eigen::Index j = 0; j < init.size(); ++j) init(j) = cplx(d(rng), d(rng));
    }
    WeldingPair pair = solve_at(h, K, init);
    pair.iterations = it + 1;
    last_residual = pair.residual;
    if (pair.residual < tol) return pair;
    K *= 2;
  }
  throw convergence_error("weld: residual did not reach tolerance", last_residual);
}

ExtensionField build_extension(const CircleHomeo& h, double r_annulus, std::size_t n_rad,
                               std::size_t n_theta) {
  double R = r_annulus;
  if (R <= 0.0) R = std::min(std::exp(h.margin() / 2.0), 2.0);
  if (std::log(R) >= h.margin())
    throw precondition_error("build_extension: annulus exceeds the analyticity strip");

  ExtensionField ext;
  ext.annulus_outer = R;
  ext.grid.n_theta = n_theta;
  ext.grid.r_out = 4.0;
  ext.grid.radii.resize(n_rad);
  ext.grid.mu.assign(n_rad * n_theta, cplx(0.0));
  for (std::size_t i = 0; i < n_rad; ++i) {
    const double t = (static_cast<double>(i) + 0.5) / static_cast<double>(n_rad);
    ext.grid.radii[i] = 1.0 + (ext.grid.r_out - 1.0) * t;
  }

  // mu vanishes on the conformal annulus; beyond R the radially homogeneous
  // continuation has the radius-independent dilatation below
  const double lnR = std::log(R);
  std::vector<cplx> mu_theta(n_theta);
  double sup = 0.0;
  for (std::size_t j = 0; j < n_theta; ++j) {
    const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(n_theta);
    const cplx wR(theta, -lnR);
    const cplx du = h.displacement_derivative(wR);
    const cplx mu = -std::polar(1.0, 2.0 * theta) * du / (2.0 + du);
    mu_theta[j] = mu;
    sup = std::max(sup, std::abs(mu));
  }
  for (std::size_t i = 0; i < n_rad; ++i) {
    if (ext.grid.radii[i] <= R) continue;
    for (std::size_t j = 0; j < n_theta; ++j) ext.grid.mu[i * n_theta + j] = mu_theta[j];
  }
  ext.sup_mu = sup;
  ext.l2 = hyp_L2_norm(ext.grid);
  return ext;
}

QsoCertificate qs0_certify(const CircleHomeo& h, double tol) {
  QsoCertificate cert;
  const ExtensionField ext = build_extension(h);
  cert.sup_mu = ext.sup_mu;
  cert.l2_value = ext.l2.value;
  cert.l2_tail = ext.l2.tail_bound;
  try {
    const WeldingPair pair = weld(h, tol);
    cert.welding_residual = pair.residual;
  } catch (const convergence_error& e) {
    cert.welding_residual = e.last_residual;
    return cert;
  }
  cert.certified = cert.sup_mu < 1.0 && std::isfinite(cert.l2_value) &&
                   cert.welding_residual < tol;
  return cert;
}

}  // namespace teichnum
