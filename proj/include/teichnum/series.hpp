#pragma once

// Truncated power series arithmetic on the disc and at infinity.
// This is the single function representation the rest of the library
// consumes: interior series model holomorphic maps of the unit disc,
// exterior series model maps of the complement normalized at infinity.

#include <complex>
#include <cstddef>
#include <vector>

#include "teichnum/errors.hpp"

namespace teichnum {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultTruncation = 256;
inline constexpr std::size_t kDefaultSamples = 1024;
inline constexpr double kTailMassThreshold = 1e-10;

enum class SeriesKind { interior, exterior };

// Diagnostics carried alongside a computed series.  tail_mass is the
// relative coefficient mass dropped by truncation; truncation_loss is set
// when a nonzero top coefficient had to be discarded (e.g. by integrate0).
struct SeriesDiag {
  double tail_mass = 0.0;
  bool truncation_loss = false;
};

class PowerSeries {
 public:
  // Interior: coeffs[n] multiplies z^n.
  // Exterior: coeffs[k] multiplies w^{1-k}, so coeffs[0] is the leading
  // coefficient of w and equals G'(inf).
  PowerSeries(std::vector<cplx> coeffs, SeriesKind kind = SeriesKind::interior);

  static PowerSeries zero(std::size_t n, SeriesKind kind = SeriesKind::interior);
  static PowerSeries identity(std::size_t n);  // f(z) = z
  // Monomial c * z^p (interior).
  static PowerSeries monomial(std::size_t n, std::size_t p, cplx c = 1.0);

  SeriesKind kind() const { return kind_; }
  bool interior() const { return kind_ == SeriesKind::interior; }
  std::size_t truncation() const { return coeffs_.size(); }
  const std::vector<cplx>& coeffs() const { return coeffs_; }

  cplx coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : cplx(0.0); }

  // Point evaluation of the truncation (Horner).  Exterior series expect
  // |z| >= 1 for the expansion to be meaningful but evaluate anywhere
  // away from 0.
  cplx eval(cplx z) const;
  cplx eval_derivative(cplx z) const;

  PowerSeries resized(std::size_t n) const;

  const SeriesDiag& diag() const { return diag_; }
  void set_diag(SeriesDiag d) { diag_ = d; }

 private:
  std::vector<cplx> coeffs_;
  SeriesKind kind_;
  SeriesDiag diag_;
};

// Boundary samples at the M-th roots of unity (times a radius), M a power
// of two so the fast transform applies.
struct CircleSamples {
  std::vector<cplx> values;
  double radius = 1.0;
};

bool is_power_of_two(std::size_t m);

// In-place radix-2 FFT.  sign=-1: forward DFT sum f_n e^{-2pi i nk/M};
// sign=+1: inverse transform (unnormalized).
void fft(std::vector<cplx>& a, int sign);

PowerSeries differentiate(const PowerSeries& s);
PowerSeries integrate0(const PowerSeries& s);

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b);
// Truncated quotient a/b; requires b(0) != 0.
PowerSeries divide(const PowerSeries& a, const PowerSeries& b);

// Truncated composition outer(inner) via circle sampling and refit.
// inner must be interior with sup|inner| <= 1 on the sample circle.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

PowerSeries exp_series(const PowerSeries& s);
// s'/s, requires s(0) != 0.
PowerSeries log_deriv(const PowerSeries& s);

// Forward evaluation at M scaled roots of unity; M power of two, M >= 2N.
CircleSamples sample_circle(const PowerSeries& s, double r, std::size_t m);
// Left inverse of sample_circle on band-limited data, truncated to n_out.
PowerSeries fit_interior(const CircleSamples& samples, std::size_t n_out);

}  // namespace teichnum
