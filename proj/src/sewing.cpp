#include "teichnum/sewing.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "teichnum/errors.hpp"

namespace teichnum {

cplx CapMap::eval(cplx z) const {
  const cplx w = (z - center) / scale;
  if (std::abs(w) <= 1e-14) throw singular_input_error("cap map: pole at evaluation point");
  cplx acc = 0.0;
  const cplx iw = 1.0 / w;
  for (std::size_t j = b.size(); j-- > 0;) acc = (acc + b[j]) * iw;
  return z + acc;
}

cplx CapMap::eval_derivative(cplx z) const {
  const cplx w = (z - center) / scale;
  if (std::abs(w) <= 1e-14) throw singular_input_error("cap map: pole at evaluation point");
  cplx acc = 0.0;
  const cplx iw = 1.0 / w;
  for (std::size_t j = b.size(); j-- > 0;)
    acc = acc * iw - static_cast<double>(j + 1) * b[j] * std::pow(iw, static_cast<double>(j + 2));
  return 1.0 + acc / scale;
}

bool CapMap::is_identity(double tol) const {
  for (const cplx& v : b)
    if (std::abs(v) > tol) return false;
  return true;
}

SewSolution sew_along(const std::vector<cplx>& eta, const std::vector<cplx>& xi, cplx center,
                      double scale, std::size_t n_modes) {
  const std::size_t M = eta.size();
  if (M != xi.size() || M < 4 || (M & (M - 1)) != 0)
    throw configuration_error("sew_along: need matching power-of-two sample sets");
  if (M < 4 * (n_modes + 1))
    throw configuration_error("sew_along: too few samples for the requested truncation");
  const std::size_t K = n_modes;

  // columns: exterior powers w^{-1}..w^{-K}, then cap powers xi^0..xi^K;
  // rows: all M Fourier modes of the boundary mismatch
  Eigen::MatrixXcd A(M, 2 * K + 1);
  Eigen::VectorXcd rhs(M);
  std::vector<cplx> buf(M);

  std::vector<cplx> w(M), pw(M);
  for (std::size_t m = 0; m < M; ++m) {
    w[m] = (eta[m] - center) / scale;
    if (std::abs(w[m]) < 1e-12) throw singular_input_error("sew_along: curve hits the center");
    pw[m] = 1.0;
  }
  for (std::size_t j = 1; j <= K; ++j) {
    for (std::size_t m = 0; m < M; ++m) pw[m] /= w[m];
    buf = pw;
    fft(buf, -1);
    for (std::size_t m = 0; m < M; ++m) A(m, j - 1) = buf[m] / static_cast<double>(M);
  }
  pw.assign(M, cplx(1.0));
  for (std::size_t k = 0; k <= K; ++k) {
    buf = pw;
    fft(buf, -1);
    for (std::size_t m = 0; m < M; ++m) A(m, K + k) = -buf[m] / static_cast<double>(M);
    if (k < K)
      for (std::size_t m = 0; m < M; ++m) pw[m] *= xi[m];
  }
  buf = eta;
  fft(buf, -1);
  for (std::size_t m = 0; m < M; ++m) rhs(m) = -buf[m] / static_cast<double>(M);

  const Eigen::VectorXcd sol = A.colPivHouseholderQr().solve(rhs);
  if (!sol.allFinite()) throw solver_breakdown_error("sew_along: least-squares breakdown");

  SewSolution out;
  out.exterior.center = center;
  out.exterior.scale = scale;
  out.exterior.b.resize(K);
  for (std::size_t j = 0; j < K; ++j) out.exterior.b[j] = sol(j);
  std::vector<cplx> fc(K + 1);
  for (std::size_t k = 0; k <= K; ++k) fc[k] = sol(K + k);
  out.cap = PowerSeries(std::move(fc));

  double worst = 0.0;
  for (std::size_t m = 0; m < M; ++m) {
    const double d = std::abs(out.exterior.eval(eta[m]) - out.cap.eval(xi[m]));
    if (d > worst) worst = d;
  }
  out.residual = worst;
  return out;
}

}  // namespace teichnum
