#include "teichnum/preschwarzian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace teichnum {

PowerSeries pre_schwarzian(const PowerSeries& f) {
  if (!f.interior()) throw unsupported_kind_error("pre_schwarzian: interior series required");
  if (std::abs(f.coeff(0)) > 1e-12)
    throw precondition_error("pre_schwarzian: f(0) = 0 required");
  if (std::abs(f.coeff(1)) < 1e-300) throw precondition_error("pre_schwarzian: f'(0) = 0");
  const PowerSeries fp = differentiate(f);
  return divide(differentiate(fp), fp);
}

PreSchwarzianCoords chi(const PowerSeries& f) {
  return PreSchwarzianCoords(pre_schwarzian(f), f.coeff(1));
}

PowerSeries chi_inverse(const PreSchwarzianCoords& coords) {
  const PowerSeries inner = integrate0(coords.phi);
  const PowerSeries expo = exp_series(inner);
  PowerSeries f = integrate0(expo);
  std::vector<cplx> c = f.coeffs();
  for (cplx& v : c) v *= coords.d;
  PowerSeries out(std::move(c));
  SeriesDiag d;
  d.truncation_loss = inner.diag().truncation_loss || f.diag().truncation_loss;
  out.set_diag(d);
  return out;
}

PowerSeries transfer_compose(const PowerSeries& a_h, const PowerSeries& f) {
  const PowerSeries outer_part = compose(a_h, f);
  const PowerSeries product = multiply(outer_part, differentiate(f));
  const PowerSeries a_f = pre_schwarzian(f);
  std::vector<cplx> c(std::max(product.truncation(), a_f.truncation()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = product.coeff(k) + a_f.coeff(k);
  return PowerSeries(std::move(c));
}

MembershipVerdict oqco_membership(const PowerSeries& f, std::vector<std::size_t> ladder) {
  const PowerSeries a = pre_schwarzian(f);
  MembershipVerdict verdict;
  // the quotient's top coefficients carry truncation-edge artifacts (the
  // truncated f' acquires zeros near |z| = 1); keep rungs below the edge
  const std::size_t usable = a.truncation() - std::max<std::size_t>(2, a.truncation() / 64);
  for (std::size_t n : ladder) {
    n = std::min(n, usable);
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      s += std::norm(a.coeff(k)) / static_cast<double>(k + 1);
    verdict.ladder.push_back(n);
    verdict.norms.push_back(std::sqrt(std::numbers::pi * s));
  }
  // regress squared norm against ln N
  const std::size_t m = verdict.norms.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double x = std::log(static_cast<double>(verdict.ladder[i]));
    const double y = verdict.norms[i] * verdict.norms[i];
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double denom = static_cast<double>(m) * sxx - sx * sx;
  verdict.growth_slope = denom != 0.0 ? (static_cast<double>(m) * sxy - sx * sy) / denom : 0.0;
  const double last = verdict.norms.back() * verdict.norms.back();
  const double prev = verdict.norms[m - 2] * verdict.norms[m - 2];
  const double increment = last > 0.0 ? (last - prev) / last : 0.0;
  if (verdict.growth_slope > kDivergenceSlope)
    verdict.verdict = Membership::diverging;
  else if (increment < kStableIncrement)
    verdict.verdict = Membership::member;
  else
    verdict.verdict = Membership::inconclusive;
  return verdict;
}

UnivalenceReport univalence_check(const PowerSeries& f, std::size_t m) {
  if (!f.interior()) throw unsupported_kind_error("univalence_check: interior series required");
  UnivalenceReport report;
  report.samples = m;

  // f' must not vanish on an interior polar grid
  const PowerSeries fp = differentiate(f);
  for (double r : {0.1, 0.3, 0.5, 0.7, 0.85, 0.95}) {
    for (std::size_t j = 0; j < 256; ++j) {
      const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / 256.0;
      if (std::abs(fp.eval(std::polar(r, th))) < 1e-12) {
        report.verdict = UnivalenceVerdict::fail;
        const cplx z = std::polar(r, th);
        report.witness = {z, z};
        return report;
      }
    }
  }

  const double r = 1.0 - 1.0 / static_cast<double>(m);
  std::vector<cplx> w(m), z(m);
  double scale = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
    z[k] = std::polar(r, th);
    w[k] = f.eval(z[k]);
    scale = std::max(scale, std::abs(w[k]));
  }
  if (scale == 0.0) scale = 1.0;

  // adjacent samples are legitimately close; skip a small arc around i
  const std::size_t guard = 1;
  double min_gap = 1e300;
  std::size_t wi = 0, wj = 0;
#pragma omp parallel
  {
    double local_min = 1e300;
    std::size_t li = 0, lj = 0;
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
      for (std::size_t j = static_cast<std::size_t>(i) + 1 + guard; j < m; ++j) {
        if (j >= m - guard && i == 0) continue;  // wraparound neighbor
        const double d = std::abs(w[static_cast<std::size_t>(i)] - w[j]);
        if (d < local_min) {
          local_min = d;
          li = static_cast<std::size_t>(i);
          lj = j;
        }
      }
    }
#pragma omp critical
    if (local_min < min_gap) {
      min_gap = local_min;
      wi = li;
      wj = lj;
    }
  }
  report.min_boundary_gap = min_gap / scale;

  // winding of the boundary image about f(0): must be exactly one
  const cplx center = f.eval(cplx(0.0));
  double winding = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const cplx a = w[k] - center, b = w[(k + 1) % m] - center;
    winding += std::arg(b / a);
  }
  const long turns = std::lround(winding / (2.0 * std::numbers::pi));

  if (report.min_boundary_gap < 1e-9 || turns != 1) {
    report.verdict = UnivalenceVerdict::fail;
    report.witness = {z[wi], z[wj]};
  } else if (report.min_boundary_gap < 1e-6) {
    report.verdict = UnivalenceVerdict::inconclusive;
    report.witness = {z[wi], z[wj]};
  } else {
    report.verdict = UnivalenceVerdict::pass;
  }
  return report;
}

OpennessReport openness_probe(const PowerSeries& f, cplx e_center, double e_radius,
                              const std::vector<double>& deltas, std::size_t trials,
                              unsigned seed) {
  const PreSchwarzianCoords base = chi(f);
  OpennessReport report;
  report.deltas = deltas;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (double delta : deltas) {
    bool all_ok = true;
    for (std::size_t t = 0; t < trials && all_ok; ++t) {
      std::vector<cplx> dir(base.phi.truncation());
      for (std::size_t k = 0; k < std::min<std::size_t>(dir.size(), 9); ++k)
        dir[k] = cplx(gauss(rng), gauss(rng));
      PowerSeries direction(std::move(dir));
      const double norm = bergman_norm(direction);
      if (norm == 0.0) continue;
      std::vector<cplx> phi_c = base.phi.coeffs();
      for (std::size_t k = 0; k < phi_c.size(); ++k)
        phi_c[k] += direction.coeff(k) * (delta / norm);
      const PowerSeries g = chi_inverse(PreSchwarzianCoords(PowerSeries(std::move(phi_c)), base.d));
      if (univalence_check(g, 1024).verdict != UnivalenceVerdict::pass) {
        all_ok = false;
        break;
      }
      for (std::size_t j = 0; j < 512; ++j) {
        const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / 512.0;
        if (std::abs(g.eval(std::polar(1.0 - 1.0 / 1024.0, th)) - e_center) >= e_radius) {
          all_ok = false;
          break;
        }
      }
    }
    report.all_pass.push_back(all_ok);
    if (all_ok) report.largest_passing = std::max(report.largest_passing, delta);
  }
  return report;
}

}  // namespace teichnum
