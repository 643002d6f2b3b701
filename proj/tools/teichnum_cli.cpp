// Batch front end: run norms, weldings, Schiffer sweeps, sewings and the
// verification suite from JSON configuration files and emit JSON/CSV
// reports.  Exit status: 0 all pass flags true, 1 numeric failure,
// 2 parse/configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <omp.h>
#include <string>

#include "CLI11.hpp"
#include "teichnum/json_io.hpp"
#include "teichnum/norms.hpp"
#include "teichnum/verify.hpp"

using namespace teichnum;

namespace {

struct Options {
  std::string input, output;
  std::size_t truncation = kDefaultTruncation;
  std::size_t samples = kDefaultSamples;
  double tol = 1e-8;
  unsigned seed = 1;
  int jobs = 0;
};

void add_common(CLI::App* cmd, Options& opt, bool needs_input = true) {
  auto* in = cmd->add_option("--input", opt.input, "input JSON file");
  if (needs_input) in->required();
  cmd->add_option("--output", opt.output, "output JSON file")->required();
  cmd->add_option("--truncation", opt.truncation, "series truncation N");
  cmd->add_option("--samples", opt.samples, "circle sample count M");
  cmd->add_option("--tol", opt.tol, "solver tolerance");
  cmd->add_option("--seed", opt.seed, "random seed");
  cmd->add_option("--jobs", opt.jobs, "worker threads (default: TEICHNUM_JOBS or all cores)");
}

void apply_jobs(const Options& opt) {
  int jobs = opt.jobs;
  if (jobs <= 0) {
    if (const char* env = std::getenv("TEICHNUM_JOBS")) jobs = std::atoi(env);
  }
  if (jobs > 0) omp_set_num_threads(jobs);
}

std::string csv_path(const std::string& json_path) {
  const auto dot = json_path.find_last_of('.');
  return (dot == std::string::npos ? json_path : json_path.substr(0, dot)) + ".csv";
}

int run_norm(const Options& opt) {
  const PowerSeries phi = series_from_json(load_json(opt.input));
  const SupReport sup = sup_hyp_norm(phi);
  json out{{"norm", bergman_norm(phi)},
           {"converged", sup.converged},
           {"grid", json{{"sup_hyp", sup.value}, {"levels", sup.levels}}}};
  save_json(opt.output, out);
  return 0;
}

int run_chi(const Options& opt) {
  const PowerSeries f = series_from_json(load_json(opt.input)).resized(opt.truncation);
  const PreSchwarzianCoords coords = chi(f);
  const MembershipVerdict verdict = oqco_membership(f);
  json out{{"phi", to_json(coords.phi)}, {"d", complex17(coords.d)},
           {"membership", to_json(verdict)}};
  save_json(opt.output, out);
  return 0;
}

int run_weld(const Options& opt) {
  const CircleHomeo h = homeo_from_json(load_json(opt.input));
  const WeldingPair pair = weld(h, opt.tol);
  json out = to_json(pair);
  out["pass"] = pair.residual < opt.tol;
  save_json(opt.output, out);
  return pair.residual < opt.tol ? 0 : 1;
}

int run_schiffer_sweep(const Options& opt) {
  const PuncturedSphereConfig config = config_from_json(load_json(opt.input));
  const std::vector<double> deltas{1e-2, 3e-3, 1e-3};
  const CRReport cr = holomorphy_probe(config, 0, deltas);

  std::ofstream csv(csv_path(opt.output));
  csv << "eps_re,eps_im,lambda_re,lambda_im,residual\n";
  for (const double d : deltas) {
    for (const cplx step : {cplx(d, 0), cplx(-d, 0), cplx(0, d), cplx(0, -d)}) {
      PuncturedSphereConfig c = config;
      c.epsilon[0] += step;
      const VariedConfig varied = schiffer_vary(c);
      const cplx lambda = classify(varied.punctures).lambda.front();
      double res = 0.0;
      for (const double r : varied.report.residuals) res = std::max(res, r);
      csv << format_number(c.epsilon[0].real()) << ',' << format_number(c.epsilon[0].imag())
          << ',' << format_number(lambda.real()) << ',' << format_number(lambda.imag()) << ','
          << format_number(res) << '\n';
    }
  }

  const bool pass = cr.ratios.back() < 1e-3 && std::abs(cr.d_eps.back()) > 0.0;
  json ratios = json::array(), d_eps = json::array();
  for (std::size_t k = 0; k < cr.deltas.size(); ++k) {
    ratios.push_back(cr.ratios[k]);
    d_eps.push_back(complex17(cr.d_eps[k]));
  }
  save_json(opt.output, json{{"deltas", deltas}, {"cr_ratios", ratios},
                             {"d_lambda_d_eps", d_eps}, {"pass", pass}});
  return pass ? 0 : 1;
}

int run_sew(const Options& opt) {
  const RiggedSphere rigged = rigged_from_json(load_json(opt.input));
  const SewResult result = sew_caps(rigged, 32, opt.tol);
  json punctures = json::array(), phi = json::array();
  bool pass = true;
  for (const cplx& p : result.maps.punctures) punctures.push_back(complex17(p));
  for (const PowerSeries& f : result.maps.phi) phi.push_back(to_json(f));
  for (const double r : result.residuals) pass = pass && r < opt.tol;
  save_json(opt.output, json{{"punctures", punctures}, {"phi", phi},
                             {"residuals", result.residuals}, {"pass", pass}});
  return pass ? 0 : 1;
}

NonOverlappingMaps maps_from_json(const json& j) {
  NonOverlappingMaps maps;
  for (const json& s : j.at("phi")) maps.phi.push_back(series_from_json(s));
  for (const json& p : j.at("punctures"))
    maps.punctures.push_back(cplx(p.at(0).get<double>(), p.at(1).get<double>()));
  return maps;
}

int run_equiv(const Options& opt) {
  const json in = load_json(opt.input);
  const NonOverlappingMaps a = maps_from_json(in.at("a"));
  const NonOverlappingMaps b = maps_from_json(in.at("b"));
  const EquivalenceReport rep = moduli_equivalent(a, b, opt.tol);
  save_json(opt.output, to_json(rep));
  return rep.equivalent ? 0 : 1;
}

int run_verify_suite_cmd(const Options& opt) {
  std::size_t seeds = 50;
  unsigned base_seed = opt.seed;
  if (!opt.input.empty()) {
    const json manifest = load_json(opt.input);
    if (manifest.contains("seeds")) seeds = manifest.at("seeds").get<std::size_t>();
    if (manifest.contains("base_seed")) base_seed = manifest.at("base_seed").get<unsigned>();
  }
  const std::vector<CheckReport> reports = run_verify_suite(seeds, base_seed);

  std::ofstream csv(csv_path(opt.output));
  csv << "name,pass,tolerance,details\n";
  json out = json::array();
  bool all_pass = true;
  for (const CheckReport& rep : reports) {
    out.push_back(to_json(rep));
    all_pass = all_pass && rep.pass;
    csv << rep.name << ',' << (rep.pass ? "1" : "0") << ',' << format_number(rep.tolerance)
        << ',';
    for (std::size_t q = 0; q < rep.quantities.size(); ++q) {
      if (q) csv << ';';
      csv << rep.quantities[q].first << '=' << format_number(rep.quantities[q].second);
    }
    csv << '\n';
  }
  save_json(opt.output, json{{"reports", out}, {"pass", all_pass}});
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"teichnum: numerical conformal welding, Schiffer variation and cap sewing"};
  app.require_subcommand(1);

  Options opt;
  auto* norm = app.add_subcommand("norm", "Bergman / hyperbolic-sup norms of a series");
  add_common(norm, opt);
  auto* chi_cmd = app.add_subcommand("chi", "pre-Schwarzian coordinates and membership");
  add_common(chi_cmd, opt);
  auto* weld_cmd = app.add_subcommand("weld", "conformal welding of a circle homeomorphism");
  add_common(weld_cmd, opt);
  auto* sweep = app.add_subcommand("schiffer-sweep", "Schiffer variation stencil sweep");
  add_common(sweep, opt);
  auto* sew = app.add_subcommand("sew", "sew caps onto a rigged sphere");
  add_common(sew, opt);
  auto* equiv = app.add_subcommand("equiv", "rigged-moduli equivalence of two configurations");
  add_common(equiv, opt);
  auto* suite = app.add_subcommand("verify-suite", "run the verification suite");
  add_common(suite, opt, /*needs_input=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    apply_jobs(opt);
    if (norm->parsed()) return run_norm(opt);
    if (chi_cmd->parsed()) return run_chi(opt);
    if (weld_cmd->parsed()) return run_weld(opt);
    if (sweep->parsed()) return run_schiffer_sweep(opt);
    if (sew->parsed()) return run_sew(opt);
    if (equiv->parsed()) return run_equiv(opt);
    if (suite->parsed()) return run_verify_suite_cmd(opt);
  } catch (const configuration_error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
