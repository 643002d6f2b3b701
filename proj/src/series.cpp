#include "teichnum/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace teichnum {

namespace {

void check_finite(const std::vector<cplx>& coeffs) {
  for (const cplx& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw precondition_error("series coefficient is not finite");
  }
}

double mass(const std::vector<cplx>& v, std::size_t from, std::size_t to) {
  double s = 0.0;
  for (std::size_t i = from; i < to && i < v.size(); ++i) s += std::abs(v[i]);
  return s;
}

}  // namespace

PowerSeries::PowerSeries(std::vector<cplx> coeffs, SeriesKind kind)
    : coeffs_(std::move(coeffs)), kind_(kind) {
  if (coeffs_.size() < 2) throw precondition_error("series truncation must be >= 2");
  check_finite(coeffs_);
}

PowerSeries PowerSeries::zero(std::size_t n, SeriesKind kind) {
  return PowerSeries(std::vector<cplx>(std::max<std::size_t>(n, 2)), kind);
}

PowerSeries PowerSeries::identity(std::size_t n) {
  std::vector<cplx> c(std::max<std::size_t>(n, 2));
  c[1] = 1.0;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::monomial(std::size_t n, std::size_t p, cplx c) {
  std::vector<cplx> v(std::max<std::size_t>({n, p + 1, 2}));
  v[p] = c;
  return PowerSeries(std::move(v));
}

cplx PowerSeries::eval(cplx z) const {
  if (kind_ == SeriesKind::interior) {
    cplx acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
    return acc;
  }
  // exterior: sum coeffs[k] z^{1-k} = z * P(1/z) with P(u)=sum coeffs[k] u^k
  cplx u = 1.0 / z;
  cplx acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * u + coeffs_[i];
  return acc * z;
}

cplx PowerSeries::eval_derivative(cplx z) const {
  if (kind_ == SeriesKind::interior) {
    cplx acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 1;)
      acc = acc * z + coeffs_[i] * static_cast<double>(i);
    return acc;
  }
  // d/dz sum c_k z^{1-k} = sum c_k (1-k) z^{-k}
  cplx u = 1.0 / z;
  cplx acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * u + coeffs_[i] * (1.0 - static_cast<double>(i));
  return acc;
}

PowerSeries PowerSeries::resized(std::size_t n) const {
  std::vector<cplx> c(coeffs_.begin(),
                      coeffs_.begin() + std::min(coeffs_.size(), std::max<std::size_t>(n, 2)));
  c.resize(std::max<std::size_t>(n, 2));
  PowerSeries out(std::move(c), kind_);
  SeriesDiag d = diag_;
  if (n < coeffs_.size() && mass(coeffs_, n, coeffs_.size()) > 0.0) d.truncation_loss = true;
  out.set_diag(d);
  return out;
}

bool is_power_of_two(std::size_t m) { return m >= 2 && (m & (m - 1)) == 0; }

void fft(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  if (!is_power_of_two(n)) throw configuration_error("fft size must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const cplx wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w = 1.0;
      for (std::size_t k = 0; k < len / 2; ++k) {
        cplx u = a[i + k];
        cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

PowerSeries differentiate(const PowerSeries& s) {
  if (!s.interior()) throw unsupported_kind_error("differentiate: interior series required");
  const std::size_t n = s.truncation();
  std::vector<cplx> c(n);
  for (std::size_t k = 1; k < n; ++k) c[k - 1] = s.coeff(k) * static_cast<double>(k);
  return PowerSeries(std::move(c));
}

PowerSeries integrate0(const PowerSeries& s) {
  if (!s.interior()) throw unsupported_kind_error("integrate0: interior series required");
  const std::size_t n = s.truncation();
  std::vector<cplx> c(n);
  for (std::size_t k = 0; k + 1 < n; ++k) c[k + 1] = s.coeff(k) / static_cast<double>(k + 1);
  PowerSeries out(std::move(c));
  SeriesDiag d;
  d.truncation_loss = std::abs(s.coeff(n - 1)) > 0.0;  // would produce z^n
  out.set_diag(d);
  return out;
}

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b) {
  if (!a.interior() || !b.interior())
    throw unsupported_kind_error("multiply: interior series required");
  const std::size_t n = std::max(a.truncation(), b.truncation());
  std::vector<cplx> full(2 * n - 1);
  for (std::size_t i = 0; i < a.truncation(); ++i) {
    if (a.coeff(i) == cplx(0.0)) continue;
    for (std::size_t j = 0; j < b.truncation(); ++j) full[i + j] += a.coeff(i) * b.coeff(j);
  }
  double kept = mass(full, 0, n), dropped = mass(full, n, full.size());
  full.resize(n);
  PowerSeries out(std::move(full));
  SeriesDiag d;
  d.tail_mass = (kept + dropped) > 0.0 ? dropped / (kept + dropped) : 0.0;
  d.truncation_loss = dropped > 0.0;
  out.set_diag(d);
  return out;
}

PowerSeries divide(const PowerSeries& a, const PowerSeries& b) {
  if (!a.interior() || !b.interior())
    throw unsupported_kind_error("divide: interior series required");
  if (std::abs(b.coeff(0)) < 1e-300)
    throw singular_input_error("divide: denominator has vanishing constant term");
  const std::size_t n = std::max(a.truncation(), b.truncation());
  std::vector<cplx> c(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = a.coeff(k);
    for (std::size_t j = 0; j < k; ++j) acc -= c[j] * b.coeff(k - j);
    c[k] = acc / b.coeff(0);
  }
  return PowerSeries(std::move(c));
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (!inner.interior()) throw unsupported_kind_error("compose: interior inner required");
  const std::size_t n = std::max(outer.truncation(), inner.truncation());
  std::size_t m = 4;
  while (m < 4 * n) m <<= 1;
  CircleSamples samples = sample_circle(inner, 1.0, m);
  double sup = 0.0;
  for (const cplx& v : samples.values) sup = std::max(sup, std::abs(v));
  if (sup > 1.0 + 1e-12)
    throw composition_domain_error("compose: |inner| exceeds 1 on the sample circle");
  std::vector<cplx> vals(m);
  for (std::size_t k = 0; k < m; ++k) vals[k] = outer.eval(samples.values[k]);
  // refit and report the aliased tail as the error estimate
  fft(vals, -1);
  for (cplx& v : vals) v /= static_cast<double>(m);
  double kept = mass(vals, 0, n), dropped = mass(vals, n, m);
  std::vector<cplx> c(vals.begin(), vals.begin() + n);
  PowerSeries out(std::move(c));
  SeriesDiag d;
  d.tail_mass = (kept + dropped) > 0.0 ? dropped / (kept + dropped) : 0.0;
  d.truncation_loss = d.tail_mass > kTailMassThreshold;
  out.set_diag(d);
  return out;
}

PowerSeries exp_series(const PowerSeries& s) {
  if (!s.interior()) throw unsupported_kind_error("exp_series: interior series required");
  const std::size_t n = s.truncation();
  const cplx scale = std::exp(s.coeff(0));
  std::vector<cplx> e(n);
  e[0] = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    cplx acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * s.coeff(j) * e[k - j];
    e[k] = acc / static_cast<double>(k);
  }
  for (cplx& v : e) v *= scale;
  return PowerSeries(std::move(e));
}

PowerSeries log_deriv(const PowerSeries& s) {
  if (!s.interior()) throw unsupported_kind_error("log_deriv: interior series required");
  if (std::abs(s.coeff(0)) < 1e-300)
    throw singular_input_error("log_deriv: s(0) = 0");
  return divide(differentiate(s), s);
}

CircleSamples sample_circle(const PowerSeries& s, double r, std::size_t m) {
  if (!is_power_of_two(m)) throw configuration_error("sample_circle: M must be a power of two");
  if (m < 2 * s.truncation())
    throw configuration_error("sample_circle: aliasing guard requires M >= 2N");
  if (!(r > 0.0 && r <= 1.0)) throw precondition_error("sample_circle: radius in (0,1] required");
  if (!s.interior()) throw unsupported_kind_error("sample_circle: interior series required");
  std::vector<cplx> a(m);
  double rn = 1.0;
  for (std::size_t k = 0; k < s.truncation(); ++k) {
    a[k] = s.coeff(k) * rn;
    rn *= r;
  }
  fft(a, +1);  // values[k] = sum a_n (r w^k)^n with w = e^{2pi i/M}
  return CircleSamples{std::move(a), r};
}

PowerSeries fit_interior(const CircleSamples& samples, std::size_t n_out) {
  const std::size_t m = samples.values.size();
  if (!is_power_of_two(m)) throw configuration_error("fit_interior: M must be a power of two");
  if (m < 2 * n_out) throw configuration_error("fit_interior: aliasing guard requires M >= 2N");
  std::vector<cplx> a = samples.values;
  fft(a, -1);
  const double r = samples.radius;
  double rn = 1.0;
  std::vector<cplx> c(n_out);
  for (std::size_t k = 0; k < n_out; ++k) {
    c[k] = a[k] / (static_cast<double>(m) * rn);
    rn *= r;
  }
  return PowerSeries(std::move(c));
}

}  // namespace teichnum
