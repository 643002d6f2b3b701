// Acceptance harness: one numbered criterion per invocation
// (--criterion N), printing a single pass/fail line with the measured
// quantities.  Exit status 0 on pass, 1 on fail, 2 on usage errors.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "teichnum/norms.hpp"
#include "teichnum/preschwarzian.hpp"
#include "teichnum/rigged.hpp"
#include "teichnum/schiffer.hpp"
#include "teichnum/verify.hpp"
#include "teichnum/welding.hpp"

using namespace teichnum;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return std::string(buf);
}

double urand(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// ---- criterion 1: Parseval vs 2-D quadrature on seeded polynomials ----

Outcome criterion1() {
  double worst = 0.0;
  for (unsigned seed = 1; seed <= 100; ++seed) {
    std::mt19937_64 rng(seed * 7919ull + 11ull);
    const std::size_t deg = 8 + static_cast<std::size_t>(rng() % 57);  // <= 64
    std::vector<cplx> c(deg + 1);
    for (std::size_t n = 0; n <= deg; ++n)
      c[n] = cplx(urand(rng, -1.0, 1.0), urand(rng, -1.0, 1.0)) / double(n + 1);
    const PowerSeries phi(std::move(c));
    const double parseval = bergman_norm(phi);
    // bergman_norm integrates |phi|^2; route phi through the f' form
    const PowerSeries f = integrate0(phi.resized(phi.truncation() + 1));
    WeightedIntegralSpec spec;
    spec.p = 2.0;
    spec.alpha = 0.0;
    const double quad = std::sqrt(weighted_fprime_integral(f, spec, 256, 512));
    const double rel = std::abs(parseval - quad) / parseval;
    if (rel > worst) worst = rel;
  }
  return {worst < 1e-8, fmt("worst relative gap %.3e (limit 1e-8) on 100 polynomials", worst)};
}

// ---- criterion 2: chi round trips on the standard family ----

Outcome criterion2() {
  double worst = 0.0;
  for (unsigned seed = 1; seed <= 50; ++seed) {
    const PowerSeries f = standard_base_map(seed);
    const PreSchwarzianCoords coords = chi(f);
    const PowerSeries back = chi_inverse(coords);
    for (std::size_t n = 0; n < f.truncation(); ++n)
      worst = std::max(worst, std::abs(back.coeff(n) - f.coeff(n)));
    const PreSchwarzianCoords again = chi(back);
    for (std::size_t n = 0; n + 2 < coords.phi.truncation(); ++n)
      worst = std::max(worst, std::abs(again.phi.coeff(n) - coords.phi.coeff(n)));
    worst = std::max(worst, std::abs(again.d - coords.d));
  }
  return {worst < 1e-9, fmt("worst round-trip coefficient error %.3e (limit 1e-9), 50 seeds", worst)};
}

// ---- criterion 3: composition transfer rule ----

// rescale f(z) -> f(s z) so the composition stays inside the disc
PowerSeries shrink(const PowerSeries& f, double s) {
  std::vector<cplx> c(f.truncation());
  double pw = 1.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] = f.coeff(k) * pw;
    pw *= s;
  }
  return PowerSeries(std::move(c));
}

Outcome criterion3() {
  double worst = 0.0;
  for (unsigned seed = 1; seed <= 50; ++seed) {
    const PowerSeries f = shrink(standard_base_map(seed, 128), 0.6);
    const PowerSeries h = shrink(standard_base_map(seed + 500, 128), 0.6);
    const PowerSeries direct = pre_schwarzian(compose(h, f));
    const PowerSeries via_rule = transfer_compose(pre_schwarzian(h), f);
    for (std::size_t n = 0; n < 48; ++n)
      worst = std::max(worst, std::abs(direct.coeff(n) - via_rule.coeff(n)));
  }
  return {worst < 1e-10, fmt("worst transfer-rule residual %.3e (limit 1e-10), 50 pairs", worst)};
}

// ---- criterion 4: the inclusion-topology example family ----

PowerSeries remark_family(double t, std::size_t n) {
  const double scale = 1.0 / std::sqrt(std::abs(std::log(1.0 - t)));
  std::vector<cplx> c(n, cplx(0.0));
  double pw = 1.0;
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    c[k] = scale * pw;
    pw *= t * t;
  }
  return PowerSeries(std::move(c));
}

Outcome criterion4() {
  const std::vector<double> ts = {0.9, 0.99, 0.999};
  std::vector<double> a12, a1inf;
  for (double t : ts) {
    const PowerSeries f = remark_family(t, 8192);
    a12.push_back(bergman_norm(f));
    a1inf.push_back(sup_hyp_norm(f).value);
  }
  const bool decreasing = a12[1] < a12[0] && a12[2] < a12[1] && a12[2] < 0.5;
  const bool sup_limit = std::abs(a1inf[2] - pi / 2.0) <= 0.05 * (pi / 2.0);
  return {decreasing && sup_limit,
          fmt("A12 norms %.4f, %.4f, %.4f (want decreasing toward 0); "
              "sup norm at t=0.999 is %.4f (want pi/2 = %.4f within 5%%)",
              a12[0], a12[1], a12[2], a1inf[2], pi / 2.0)};
}

// ---- criterion 5: Koebe divergence slope ----

Outcome criterion5() {
  const std::size_t n = 1024;
  std::vector<cplx> kc(n, cplx(0.0));
  for (std::size_t k = 1; k < n; ++k) kc[k] = static_cast<double>(k);
  const MembershipVerdict v = oqco_membership(PowerSeries(std::move(kc)));
  const double rel = std::abs(v.growth_slope - 10.0 * pi) / (10.0 * pi);
  const bool diverging = v.verdict == Membership::diverging;
  return {rel < 0.1 && diverging,
          fmt("slope %.4f vs 10*pi = %.4f (rel %.3e, limit 0.1), verdict %s",
              v.growth_slope, 10.0 * pi, rel, diverging ? "diverging" : "not diverging")};
}

// ---- criteria 6/7: welding family ----

CircleHomeo mobius_homeo(double a, std::size_t modes = 32) {
  const std::size_t m = 256;
  std::vector<double> disp(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double t = 2.0 * pi * static_cast<double>(k) / static_cast<double>(m);
    const cplx z = std::polar(1.0, t);
    disp[k] = std::remainder(std::arg((z + a) / (1.0 + a * z)) - t, 2.0 * pi);
  }
  return fit_homeo(disp, modes, 0.8);
}

CircleHomeo perturbation_homeo(unsigned seed) {
  std::mt19937_64 rng(seed * 2654435761ull + 3ull);
  std::vector<double> cc(5, 0.0), sc(5, 0.0);
  for (std::size_t k = 1; k < 5; ++k) {
    cc[k] = urand(rng, -1.0, 1.0);
    sc[k] = urand(rng, -1.0, 1.0);
  }
  double total = 0.0;
  for (std::size_t k = 1; k < 5; ++k) total += std::abs(cc[k]) + std::abs(sc[k]);
  const double scale = 0.09 / total;  // sup|u| <= sum of magnitudes <= 0.09
  for (std::size_t k = 1; k < 5; ++k) {
    cc[k] *= scale;
    sc[k] *= scale;
  }
  return CircleHomeo(std::move(cc), std::move(sc), 1.0);
}

Outcome criterion6() {
  double worst_coeff = 0.0;
  // rotation oracle: f = e^{i alpha} z, g = w
  const double alpha = 0.7;
  const WeldingPair rot = weld(CircleHomeo::rotation(alpha), 1e-12);
  worst_coeff = std::max(worst_coeff, std::abs(rot.f.coeff(1) - std::polar(1.0, alpha)));
  for (std::size_t k = 2; k < rot.f.truncation(); ++k)
    worst_coeff = std::max(worst_coeff, std::abs(rot.f.coeff(k)));
  worst_coeff = std::max(worst_coeff, std::abs(rot.g.coeff(0) - 1.0));
  for (std::size_t k = 1; k < rot.g.truncation(); ++k)
    worst_coeff = std::max(worst_coeff, std::abs(rot.g.coeff(k)));

  // Mobius oracle: f = h_a - a, g = w - a
  const double a = 0.2;
  const WeldingPair mob = weld(mobius_homeo(a), 1e-12);
  worst_coeff = std::max(worst_coeff, std::abs(mob.g.coeff(0) - 1.0));
  worst_coeff = std::max(worst_coeff, std::abs(mob.g.coeff(1) - (-a)));
  for (std::size_t k = 2; k < mob.g.truncation(); ++k)
    worst_coeff = std::max(worst_coeff, std::abs(mob.g.coeff(k)));
  for (std::size_t k = 1; k < mob.f.truncation(); ++k) {
    const cplx expect = (1.0 - a * a) * std::pow(-a, static_cast<double>(k - 1));
    worst_coeff = std::max(worst_coeff, std::abs(mob.f.coeff(k) - expect));
  }

  double worst_res = 0.0, worst_init = 0.0;
  for (unsigned seed = 1; seed <= 20; ++seed) {
    const CircleHomeo h = perturbation_homeo(seed);
    const WeldingPair base = weld(h, 1e-9);
    worst_res = std::max(worst_res, base.residual);
    for (unsigned init : {1u, 2u}) {
      const WeldingPair other = weld(h, 1e-9, 8, 16, init);
      for (std::size_t k = 0; k < base.f.truncation(); ++k)
        worst_init = std::max(worst_init, std::abs(base.f.coeff(k) - other.f.coeff(k)));
    }
  }
  const bool pass = worst_coeff < 1e-10 && worst_res < 1e-8 && worst_init < 1e-6;
  return {pass, fmt("oracle coefficient error %.3e (limit 1e-10); residual %.3e (limit 1e-8); "
                    "initialization spread %.3e (limit 1e-6) over 20 homeomorphisms",
                    worst_coeff, worst_res, worst_init)};
}

Outcome criterion7() {
  double worst_mu = 0.0;
  bool all_member = true, all_finite = true, all_certified = true;
  for (unsigned seed = 1; seed <= 20; ++seed) {
    const CircleHomeo h = perturbation_homeo(seed);
    const ExtensionField ext = build_extension(h);
    worst_mu = std::max(worst_mu, ext.sup_mu);
    if (!std::isfinite(ext.l2.value) || !std::isfinite(ext.l2.tail_bound)) all_finite = false;
    const WeldingPair pair = weld(h, 1e-10);
    const MembershipVerdict v = oqco_membership(pair.f);
    if (v.verdict != Membership::member) all_member = false;
    const QsoCertificate cert = qs0_certify(h);
    if (!cert.certified) all_certified = false;
    if ((cert.certified) != (v.verdict == Membership::member)) all_certified = false;
  }
  const bool pass = worst_mu < 1.0 && all_finite && all_member && all_certified;
  return {pass, fmt("sup|mu| %.4f (limit 1), L2 finite %s, welded maps member %s, "
                    "certificates agree %s, 20 homeomorphisms",
                    worst_mu, all_finite ? "yes" : "no", all_member ? "yes" : "no",
                    all_certified ? "yes" : "no")};
}

// ---- criterion 8: Schiffer holomorphy ----

Outcome criterion8() {
  PuncturedSphereConfig config;
  config.punctures = {SpherePoint::at(cplx(0.0)), SpherePoint::at(cplx(1.0)), SpherePoint::inf(),
                      SpherePoint::at(cplx(0.3, 0.7))};
  config.discs = {ParametricDisc{cplx(-1.5, -1.5), 0.5}};
  config.epsilon = {cplx(0.0)};
  const CRReport rep = holomorphy_probe(config, 0, {2e-3, 1e-3});
  const double r_coarse = rep.ratios[0], r_fine = rep.ratios[1];
  const double deriv = std::abs(rep.d_eps[1]);
  const bool pass = r_fine < 1e-3 && r_fine < r_coarse && deriv > 1e-6;
  return {pass, fmt("CR ratio %.3e at delta 1e-3 (limit 1e-3), %.3e at 2e-3 (must exceed it); "
                    "|d lambda / d eps| = %.4f (must be nonzero)",
                    r_fine, r_coarse, deriv)};
}

// ---- criterion 9: rigged two-cap spheres under random charts ----

Outcome criterion9() {
  double worst_res = 0.0;
  bool all_member = true, all_valid = true;
  for (unsigned seed = 1; seed <= 10; ++seed) {
    std::mt19937_64 rng(seed * 48271ull + 7ull);
    RiggedSphere r;
    for (int side : {-1, 1}) {
      std::vector<cplx> c(16, cplx(0.0));
      c[0] = cplx(2.0 * side, urand(rng, -0.2, 0.2));
      c[1] = 0.5 * std::polar(1.0, urand(rng, -0.3, 0.3));
      c[2] = cplx(urand(rng, -0.02, 0.02), urand(rng, -0.02, 0.02));
      r.base.caps.push_back(PowerSeries(std::move(c)));
      const double w = urand(rng, 0.005, 0.03);
      r.riggings.push_back(CircleHomeo({0.0, w, urand(rng, -0.01, 0.01)},
                                       {0.0, -w / 2, urand(rng, -0.01, 0.01)}, 1.0));
    }
    const SewResult res = sew_caps(r);
    for (double rr : res.residuals) worst_res = std::max(worst_res, rr);
    try {
      res.maps.validate();
    } catch (const std::exception&) {
      all_valid = false;
    }
    for (int chart_trial = 0; chart_trial < 5; ++chart_trial) {
      const NChart chart = default_chart(res.maps, urand(rng, 1.2, 1.9));
      for (const MembershipVerdict& v : oqco_on_sphere(res.maps, chart))
        if (v.verdict != Membership::member) all_member = false;
    }
  }
  const bool pass = worst_res < 1e-8 && all_valid && all_member;
  return {pass, fmt("worst sewing residual %.3e (limit 1e-8), non-overlap %s, members under "
                    "5 random charts each %s, 10 spheres",
                    worst_res, all_valid ? "yes" : "no", all_member ? "yes" : "no")};
}

// ---- criterion 10: full verification suite ----

Outcome criterion10() {
  const std::vector<CheckReport> reports = run_verify_suite(50, 1u);
  std::size_t failed = 0;
  std::string first_fail;
  for (const CheckReport& r : reports)
    if (!r.pass) {
      ++failed;
      if (first_fail.empty()) first_fail = r.name;
    }
  return {failed == 0,
          failed == 0 ? fmt("all %zu checks pass", reports.size())
                      : fmt("%zu of %zu checks fail (first: %s)", failed, reports.size(),
                            first_fail.c_str())};
}

}  // namespace

int main(int argc, char** argv) {
  int criterion = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      criterion = std::atoi(argv[i + 1]);
      ++i;
    }
  }
  if (criterion < 1 || criterion > 10) {
    std::fprintf(stderr, "usage: acceptance --criterion N   (N in 1..10)\n");
    return 2;
  }
  Outcome (*table[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                          criterion6, criterion7, criterion8, criterion9, criterion10};
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = table[criterion - 1]();
  } catch (const std::exception& e) {
    out = {false, fmt("exception: %s", e.what())};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("criterion %d: %s — %s [%.2f s]\n", criterion, out.pass ? "PASS" : "FAIL",
              out.detail.c_str(), secs);
  return out.pass ? 0 : 1;
}
