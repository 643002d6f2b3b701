#include "teichnum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "teichnum/errors.hpp"
#include "teichnum/norms.hpp"
#include "teichnum/quadrature.hpp"
#include "teichnum/welding.hpp"

namespace teichnum {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx eval_poly(const std::vector<cplx>& c, cplx t) {
  cplx acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
  return acc;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// strip the constant term: the pre-Schwarzian ignores translations
PowerSeries drop_constant(const PowerSeries& h) {
  std::vector<cplx> c = h.coeffs();
  c[0] = 0.0;
  return PowerSeries(std::move(c));
}

double curve_sup_on_circle(const PowerSeries& f) {
  double sup = 0.0;
  for (std::size_t k = 0; k < 512; ++k)
    sup = std::max(sup, std::abs(f.eval(std::polar(1.0, kTwoPi * k / 512.0))));
  return sup;
}

// f(z) -> f(s z): pre-shrink the inner map so that its image closure lies
// inside the unit disc (Schwarz: sup |f(s z)| <= s sup |f| when f(0) = 0)
PowerSeries shrink_arg(const PowerSeries& f, double s) {
  std::vector<cplx> c(f.truncation());
  double pw = 1.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] = f.coeff(k) * pw;
    pw *= s;
  }
  return PowerSeries(std::move(c));
}
}  // namespace

PowerSeries HolomorphicCurveSpec::f_at(cplx t) const {
  std::vector<cplx> c(base.phi.truncation());
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = base.phi.coeff(k) + t * direction.coeff(k);
  const cplx q = eval_poly(q_poly, t);
  if (std::abs(q) < 1e-12) throw singular_input_error("curve: q(t) vanishes");
  return chi_inverse(PreSchwarzianCoords(PowerSeries(std::move(c)), q));
}

void HolomorphicCurveSpec::validate() const {
  if (std::abs(eval_poly(q_poly, 0.0) - base.d) > 1e-12)
    throw precondition_error("curve: q(0) must equal f_0'(0)");
  for (const double t : t_grid) {
    const UnivalenceReport rep = univalence_check(f_at(t), 1024);
    if (rep.verdict == UnivalenceVerdict::fail)
      throw solver_breakdown_error("curve: univalence lost on the t-grid");
  }
}

PowerSeries standard_base_map(unsigned seed, std::size_t truncation) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double mags[5], total = 0.0;
  for (int k = 0; k < 5; ++k) {
    mags[k] = unif(rng);
    total += static_cast<double>(k + 2) * mags[k];
  }
  const double budget = 0.3 * (0.25 + 0.75 * unif(rng));
  std::vector<cplx> c(truncation);
  c[1] = 1.0;
  for (int k = 0; k < 5; ++k)
    c[k + 2] = std::polar(mags[k] * budget / total, kTwoPi * unif(rng));
  return PowerSeries(std::move(c));
}

HolomorphicCurveSpec standard_curve(unsigned seed, std::size_t truncation) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const PowerSeries f0 = standard_base_map(seed, truncation);
  const PreSchwarzianCoords coords = chi(f0);

  std::vector<cplx> dir(truncation);
  for (int k = 0; k < 8; ++k) dir[k] = std::polar(unif(rng), kTwoPi * unif(rng));
  PowerSeries direction(std::move(dir));
  const double norm = bergman_norm(direction);
  const double target = 0.1 * (0.25 + 0.75 * unif(rng));
  std::vector<cplx> scaled = direction.coeffs();
  for (cplx& v : scaled) v *= target / norm;

  HolomorphicCurveSpec curve{coords, PowerSeries(std::move(scaled)),
                             {coords.d, coords.d / 10.0},
                             {-0.1, -0.075, -0.05, -0.025, 0.0, 0.025, 0.05, 0.075, 0.1}};
  return curve;
}

CheckReport check_minkowski(const PowerSeries& h, const PowerSeries& f) {
  CheckReport rep;
  rep.name = "minkowski";
  rep.tolerance = 1e-8;
  const double sup = curve_sup_on_circle(f);
  PowerSeries f_in = f;
  if (sup > 0.95) {
    if (std::abs(f.coeff(0)) > 1e-12)
      throw precondition_error("minkowski: image closure not inside the domain of h");
    f_in = shrink_arg(f, 0.95 / sup);  // an equally valid instance of the bound
  }
  const UnivalenceReport uh = univalence_check(h.resized(std::max<std::size_t>(h.truncation(), 8)));
  if (uh.verdict == UnivalenceVerdict::fail)
    throw precondition_error("minkowski: h is not one-to-one");

  const std::size_t n = std::max(f_in.truncation(), h.truncation());
  const PowerSeries hf = compose(drop_constant(h).resized(2 * n), f_in.resized(2 * n));
  const double lhs = bergman_norm(pre_schwarzian(hf));
  const PowerSeries ah = pre_schwarzian(drop_constant(h).resized(2 * n));
  const PowerSeries pulled = multiply(compose(ah, f_in.resized(2 * n)),
                                      differentiate(f_in.resized(2 * n)).resized(2 * n));
  const double first = bergman_norm(pulled);  // (iint_{f(D)} |A(h)|^2 dA)^{1/2}
  const double second = bergman_norm(pre_schwarzian(f_in));
  rep.quantities = {{"lhs", lhs}, {"transported", first}, {"base", second},
                    {"slack", first + second - lhs}};
  rep.pass = lhs <= first + second + rep.tolerance;
  return rep;
}

CheckReport check_hardy_littlewood(const std::vector<PowerSeries>& family, double p,
                                   double alpha) {
  if (p <= 0.0 || alpha <= -1.0)
    throw precondition_error("hardy-littlewood: need p > 0, alpha > -1");
  CheckReport rep;
  rep.name = "hardy_littlewood";
  rep.tolerance = 10.0;  // admissible max/min spread of the empirical constant
  double cmin = 1e300, cmax = 0.0;
  for (const PowerSeries& F : family) {
    const PowerSeries G = integrate0(F.resized(F.truncation() + 1));
    WeightedIntegralSpec lhs_spec{p, alpha};
    const double lhs = weighted_fprime_integral(G, lhs_spec);
    WeightedIntegralSpec rhs_spec{p, p + alpha};
    const double rhs =
        weighted_fprime_integral(F, rhs_spec) + std::pow(std::abs(F.eval(0.0)), p);
    if (lhs == 0.0) continue;  // 0 <= 0, no constant to record
    const double c = lhs / rhs;
    cmin = std::min(cmin, c);
    cmax = std::max(cmax, c);
  }
  rep.quantities = {{"c_min", cmin}, {"c_max", cmax},
                    {"spread", cmax > 0.0 ? cmax / cmin : 1.0}};
  rep.pass = cmax > 0.0 && std::isfinite(cmax) && cmax / cmin < rep.tolerance;
  return rep;
}

CheckReport check_carleson_chain(double beta) {
  if (beta <= 1.0) throw precondition_error("carleson: beta > 1 required");
  CheckReport rep;
  rep.name = "carleson_chain";
  rep.tolerance = 1e-9;

  const auto f = [beta](double r) {
    return std::pow(1.0 - r * r, 1.5 / beta) * std::log((1.0 + r) / (1.0 - r));
  };
  // coarse grid max, then golden-section refinement
  double best_r = 0.0, best = 0.0;
  for (int k = 0; k <= 2000; ++k) {
    const double r = (1.0 - 1e-8) * k / 2000.0;
    if (f(r) > best) best = f(r), best_r = r;
  }
  double a = std::max(0.0, best_r - 1e-3), b = std::min(1.0 - 1e-8, best_r + 1e-3);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  for (int it = 0; it < 80; ++it) {
    if (f(x1) < f(x2)) {
      a = x1;
      x1 = x2;
      x2 = a + gr * (b - a);
    } else {
      b = x2;
      x2 = x1;
      x1 = b - gr * (b - a);
    }
  }
  const double fmax = f(0.5 * (a + b));

  // boundary decay over the last decades of the grid
  bool decays = true;
  double prev = f(1.0 - 1e-3);
  for (int k = 4; k <= 8; ++k) {
    const double v = f(1.0 - std::pow(10.0, -k));
    if (v > prev) decays = false;
    prev = v;
  }

  // annulus box bound for the weight (1-|zeta|^2)^{1/2}
  const CarlesonReport boxes = carleson_box_measure(2.0 * beta, 2.0);
  bool boxes_ok = true;
  double worst_ratio = 0.0;
  for (const CarlesonPoint& pt : boxes.points) {
    const double bound = 4.0 * std::numbers::pi * std::pow(1.0 - pt.r * pt.r, 1.5) / 3.0;
    worst_ratio = std::max(worst_ratio, pt.box_mass / bound);
    if (pt.box_mass > bound * (1.0 + 1e-9)) boxes_ok = false;
  }

  rep.quantities = {{"chain_max", fmax}, {"f_at_0", f(0.0)},
                    {"tail_decay", decays ? 1.0 : 0.0}, {"box_ratio_max", worst_ratio}};
  rep.pass = std::isfinite(fmax) && f(0.0) == 0.0 && decays && boxes_ok;
  return rep;
}

CheckReport check_ars_embedding(const std::vector<PowerSeries>& psi_family, double beta) {
  CheckReport rep;
  rep.name = "ars_embedding";
  rep.tolerance = 10.0;
  double cmin = 1e300, cmax = 0.0;
  for (const PowerSeries& psi : psi_family) {
    if (std::abs(psi.eval(0.0)) > 1e-12)
      throw precondition_error("ars: psi(0) = 0 required");
    const double lhs = std::pow(
        disc_integral([&](cplx z) { return std::pow(std::abs(psi.eval(z)), 2.0 * beta); }, 0.5,
                      200, 256),
        1.0 / (2.0 * beta));
    const double rhs = dirichlet_norm(psi);
    if (rhs == 0.0) continue;
    const double c = lhs / rhs;
    cmin = std::min(cmin, c);
    cmax = std::max(cmax, c);
  }
  rep.quantities = {{"c_min", cmin}, {"c_max", cmax},
                    {"spread", cmax > 0.0 ? cmax / cmin : 1.0}};
  rep.pass = cmax > 0.0 && std::isfinite(cmax) && cmax / cmin < rep.tolerance;
  return rep;
}

CheckReport check_uniform_fprime(const HolomorphicCurveSpec& curve, double p, double alpha) {
  CheckReport rep;
  rep.name = "uniform_fprime";
  rep.tolerance = 2.0;
  std::vector<double> vals;
  for (const double t : curve.t_grid) {
    const PowerSeries ft = curve.f_at(t);
    const UnivalenceReport u = univalence_check(ft, 1024);
    if (u.verdict == UnivalenceVerdict::fail) {
      rep.quantities = {{"failing_t", t}};
      rep.pass = false;
      return rep;
    }
    WeightedIntegralSpec spec{p, alpha};
    vals.push_back(weighted_fprime_integral(ft, spec));
  }
  const double mx = *std::max_element(vals.begin(), vals.end());
  const double med = median(vals);
  rep.quantities = {{"max", mx}, {"median", med}, {"ratio", mx / med}};
  rep.pass = mx <= rep.tolerance * med;
  return rep;
}

CheckReport check_wulfs(const HolomorphicCurveSpec& curve, const PowerSeries& psi, double beta) {
  if (beta <= 1.0) throw precondition_error("wulfs: beta > 1 required");
  if (std::abs(psi.eval(0.0)) > 1e-12) throw precondition_error("wulfs: psi(0) = 0 required");
  CheckReport rep;
  rep.name = "wulfs";
  rep.tolerance = 2.0;
  std::vector<double> vals;
  for (const double t : curve.t_grid) {
    const PowerSeries ft = curve.f_at(t);
    vals.push_back(disc_integral(
        [&](cplx z) {
          const double fp = std::abs(ft.eval_derivative(z));
          return fp * fp * std::pow(std::abs(psi.eval(z)), beta);
        },
        0.0, 200, 256));
  }
  const double mx = *std::max_element(vals.begin(), vals.end());
  const double med = median(vals);
  rep.quantities = {{"max", mx}, {"median", med}, {"ratio", med > 0.0 ? mx / med : 1.0}};
  rep.pass = med == 0.0 ? mx == 0.0 : mx <= rep.tolerance * med;
  return rep;
}

CheckReport check_left_composition_holo(const PowerSeries& h, const HolomorphicCurveSpec& curve,
                                        const std::vector<double>& deltas) {
  CheckReport rep;
  rep.name = "left_composition_holo";
  rep.tolerance = 1e-3;

  const std::size_t n = 2 * curve.base.phi.truncation();
  // one fixed argument shrink for every t keeps the curve holomorphic in t
  // while forcing the image of every f_t into the domain of h
  double sup_max = 1.0;
  const double dmax = *std::max_element(deltas.begin(), deltas.end());
  for (const cplx t : {cplx(0.0), cplx(dmax), cplx(-dmax), cplx(0.0, dmax), cplx(0.0, -dmax)})
    sup_max = std::max(sup_max, curve_sup_on_circle(curve.f_at(t)));
  const double s = 0.9 / sup_max;
  const auto coords_at = [&](cplx t) {
    const PowerSeries ft = shrink_arg(curve.f_at(t), s).resized(n);
    return chi(compose(drop_constant(h).resized(n), ft));
  };

  // Cauchy-Riemann stencils on point evaluations of the Bergman element
  const std::vector<cplx> probes{cplx(0.3, 0.0), cplx(-0.2, 0.4), cplx(0.0, 0.5)};
  double worst_final = 0.0;
  bool decreasing = true;
  for (const cplx& z : probes) {
    const CRReport cr = cr_stencil(
        [&](cplx t) { return coords_at(t).phi.eval(z); }, cplx(0.0), deltas);
    worst_final = std::max(worst_final, cr.ratios.back());
    for (std::size_t k = 1; k < cr.ratios.size(); ++k)
      if (cr.ratios[k] > 2.0 * cr.ratios[k - 1] && cr.ratios[k] > rep.tolerance)
        decreasing = false;
  }
  const CRReport crd =
      cr_stencil([&](cplx t) { return coords_at(t).d; }, cplx(0.0), deltas);
  worst_final = std::max(worst_final, crd.ratios.back());

  // squared Taylor remainder of the coordinate curve scales like |t|^3
  const PreSchwarzianCoords alpha0 = coords_at(0.0);
  const double dfine = deltas.back();
  const PreSchwarzianCoords ap = coords_at(dfine), am = coords_at(-dfine);
  std::vector<cplx> dot(n);
  for (std::size_t k = 0; k < n; ++k)
    dot[k] = (ap.phi.coeff(k) - am.phi.coeff(k)) / (2.0 * dfine);
  const cplx ddot = (ap.d - am.d) / (2.0 * dfine);

  std::vector<double> ladder_ratio;
  for (const double d : deltas) {
    const PreSchwarzianCoords at = coords_at(d);
    std::vector<cplx> remc(n);
    for (std::size_t k = 0; k < n; ++k)
      remc[k] = at.phi.coeff(k) - alpha0.phi.coeff(k) - d * dot[k];
    const double b = bergman_norm(PowerSeries(std::move(remc)));
    const double rem2 = b * b + std::norm(at.d - alpha0.d - d * ddot);
    ladder_ratio.push_back(rem2 / (d * d * d));
  }
  // ratios below the floor are roundoff of an (analytically) zero
  // remainder, amplified by the 1/delta^3 normalization
  constexpr double kNoiseFloor = 1e-12;
  bool cubic_ok = true;
  for (std::size_t k = 1; k < ladder_ratio.size(); ++k)
    if (ladder_ratio[k] > 3.0 * ladder_ratio[k - 1] && ladder_ratio[k] > kNoiseFloor)
      cubic_ok = false;

  rep.quantities = {{"cr_ratio_final", worst_final},
                    {"remainder_ratio_final", ladder_ratio.back()},
                    {"remainder_ratio_first", ladder_ratio.front()},
                    {"cr_decreasing", decreasing ? 1.0 : 0.0}};
  rep.pass = worst_final < rep.tolerance && decreasing && cubic_ok;
  return rep;
}

CheckReport check_qso_closure(const CircleHomeo& h1, const CircleHomeo& h2) {
  CheckReport rep;
  rep.name = "qso_closure";
  rep.tolerance = 1e-8;
  const QsoCertificate c1 = qs0_certify(h1);
  const QsoCertificate c2 = qs0_certify(h2);
  if (!c1.certified || !c2.certified)
    throw precondition_error("qso_closure: inputs are not certified");
  const QsoCertificate cc = qs0_certify(compose_homeo(h1, h2));
  const QsoCertificate ci = qs0_certify(invert_homeo(h1));
  rep.quantities = {{"composition_sup_mu", cc.sup_mu},
                    {"composition_residual", cc.welding_residual},
                    {"inverse_sup_mu", ci.sup_mu},
                    {"inverse_residual", ci.welding_residual}};
  rep.pass = cc.certified && ci.certified;
  return rep;
}

std::vector<CheckReport> run_verify_suite(std::size_t seeds, unsigned base_seed) {
  std::vector<CheckReport> out;

  std::vector<PowerSeries> family, psi_family;
  for (std::size_t s = 0; s < seeds; ++s) {
    family.push_back(standard_base_map(base_seed + static_cast<unsigned>(s)));
    // Dirichlet-normalized psi with psi(0) = 0
    std::mt19937_64 rng(base_seed + 7919u * static_cast<unsigned>(s));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<cplx> c(16);
    for (std::size_t k = 1; k < 8; ++k) c[k] = std::polar(unif(rng), kTwoPi * unif(rng));
    PowerSeries psi(std::move(c));
    const double dn = dirichlet_norm(psi);
    std::vector<cplx> cs = psi.coeffs();
    for (cplx& v : cs) v /= dn;
    psi_family.push_back(PowerSeries(std::move(cs)));
  }

  // h = w + w^2/4: univalent on the disc, nontrivial pre-Schwarzian
  std::vector<cplx> hc(8);
  hc[1] = 1.0;
  hc[2] = 0.25;
  const PowerSeries h(hc);

  for (std::size_t s = 0; s < seeds; ++s)
    out.push_back(check_minkowski(h, family[s]));
  out.push_back(check_hardy_littlewood(family, 2.0, 0.0));
  out.push_back(check_hardy_littlewood(family, 2.0, 0.5));
  out.push_back(check_carleson_chain(2.0));
  out.push_back(check_carleson_chain(4.0));
  out.push_back(check_ars_embedding(psi_family, 2.0));

  for (std::size_t s = 0; s < seeds; ++s) {
    const HolomorphicCurveSpec curve = standard_curve(base_seed + static_cast<unsigned>(s));
    out.push_back(check_uniform_fprime(curve, 4.0, -0.5));
    out.push_back(check_wulfs(curve, psi_family[s], 2.0));
    out.push_back(check_wulfs(curve, psi_family[s], 4.0));
    if (s % 10 == 0) out.push_back(check_left_composition_holo(h, curve));
  }

  const CircleHomeo h1({0.0, 0.02, 0.015}, {0.0, -0.01, 0.02}, 1.0);
  const CircleHomeo h2({0.0, -0.015, 0.01}, {0.0, 0.02, -0.005}, 1.0);
  out.push_back(check_qso_closure(h1, h2));
  return out;
}

}  // namespace teichnum
