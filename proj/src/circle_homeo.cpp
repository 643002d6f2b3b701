#include "teichnum/circle_homeo.hpp"

#include <cmath>
#include <numbers>

#include "teichnum/errors.hpp"

namespace teichnum {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}
}  // namespace

CircleHomeo::CircleHomeo(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs,
                         double margin)
    : cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)), margin_(margin) {
  if (margin_ <= 0.0) throw precondition_error("homeo: analyticity margin must be positive");
  if (sin_.size() < cos_.size()) sin_.resize(cos_.size(), 0.0);
  if (cos_.size() < sin_.size()) cos_.resize(sin_.size(), 0.0);
  if (cos_.empty()) {
    cos_.push_back(0.0);
    sin_.push_back(0.0);
  }
  for (double v : cos_)
    if (!std::isfinite(v)) throw precondition_error("homeo: non-finite coefficient");
  for (double v : sin_)
    if (!std::isfinite(v)) throw precondition_error("homeo: non-finite coefficient");
  if (orientation_margin() <= 0.0)
    throw precondition_error("homeo: 1 + u' must stay positive (orientation)");
}

CircleHomeo CircleHomeo::identity(double margin) { return CircleHomeo({0.0}, {0.0}, margin); }

CircleHomeo CircleHomeo::rotation(double alpha, double margin) {
  return CircleHomeo({alpha}, {0.0}, margin);
}

cplx CircleHomeo::displacement(cplx theta) const {
  cplx u = cos_[0];
  for (std::size_t k = 1; k < cos_.size(); ++k) {
    const cplx kt = static_cast<double>(k) * theta;
    u += cos_[k] * std::cos(kt) + sin_[k] * std::sin(kt);
  }
  return u;
}

cplx CircleHomeo::displacement_derivative(cplx theta) const {
  cplx du = 0.0;
  for (std::size_t k = 1; k < cos_.size(); ++k) {
    const double kk = static_cast<double>(k);
    const cplx kt = kk * theta;
    du += kk * (sin_[k] * std::cos(kt) - cos_[k] * std::sin(kt));
  }
  return du;
}

cplx CircleHomeo::eval_angle(cplx theta) const {
  return std::exp(cplx(0.0, 1.0) * (theta + displacement(theta)));
}

cplx CircleHomeo::eval(cplx z) const {
  const double r = std::abs(z);
  if (std::abs(r - 1.0) > 1e-9)
    throw precondition_error("homeo: eval expects a point on the unit circle");
  return eval_angle(std::arg(z)) * r;  // r absorbs 1 + O(1e-9) rounding
}

double CircleHomeo::orientation_margin(std::size_t samples) const {
  double worst = 1e300;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(samples);
    const double v = 1.0 + displacement_derivative(t).real();
    if (v < worst) worst = v;
  }
  return worst;
}

CircleHomeo fit_homeo(const std::vector<double>& displacement_samples, std::size_t n_modes,
                      double margin) {
  const std::size_t m = displacement_samples.size();
  if (m < 2 * n_modes || (m & (m - 1)) != 0)
    throw configuration_error("fit_homeo: need a power-of-two sample count >= 2 * modes");
  std::vector<cplx> buf(m);
  for (std::size_t k = 0; k < m; ++k) buf[k] = displacement_samples[k];
  fft(buf, -1);
  std::vector<double> c(n_modes + 1, 0.0), s(n_modes + 1, 0.0);
  const double inv = 1.0 / static_cast<double>(m);
  c[0] = buf[0].real() * inv;
  for (std::size_t k = 1; k <= n_modes && k < m / 2; ++k) {
    // real series: coefficient of cos is 2 Re c_k, of sin is -2 Im c_k
    c[k] = 2.0 * buf[k].real() * inv;
    s[k] = -2.0 * buf[k].imag() * inv;
  }
  return CircleHomeo(std::move(c), std::move(s), margin);
}

CircleHomeo compose_homeo(const CircleHomeo& h1, const CircleHomeo& h2, std::size_t n_modes) {
  if (n_modes == 0) n_modes = 2 * std::max(h1.modes(), h2.modes());
  const std::size_t m = next_pow2(8 * (n_modes + 1));
  std::vector<double> samples(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(m);
    const double u2 = h2.displacement(t).real();
    samples[k] = u2 + h1.displacement(t + u2).real();
  }
  return fit_homeo(samples, n_modes, std::min(h1.margin(), h2.margin()));
}

CircleHomeo invert_homeo(const CircleHomeo& h, std::size_t n_modes) {
  if (n_modes == 0) n_modes = 2 * h.modes();
  const double floor = h.orientation_margin();
  if (floor <= 0.0) throw precondition_error("invert_homeo: not orientation-preserving");
  const std::size_t m = next_pow2(8 * (n_modes + 1));
  std::vector<double> samples(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(m);
    // solve s + u(s) = t for the lift; Newton with a monotone target
    double s = t;
    for (int it = 0; it < 100; ++it) {
      const double f = s + h.displacement(s).real() - t;
      if (std::abs(f) < 1e-14) break;
      s -= f / (1.0 + h.displacement_derivative(s).real());
      if (it == 99) throw convergence_error("invert_homeo: lift Newton stalled", std::abs(f));
    }
    samples[k] = s - t;
  }
  return fit_homeo(samples, n_modes, h.margin());
}

}  // namespace teichnum
