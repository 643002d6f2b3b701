#include "teichnum/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "teichnum/errors.hpp"

namespace teichnum {

namespace {
// recursive printer with fixed 17-significant-digit numbers so that equal
// inputs give byte-identical artifacts
void dump17(const json& j, std::ostream& os) {
  switch (j.type()) {
    case json::value_t::object: {
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',';
        first = false;
        os << json(it.key()).dump() << ':';
        dump17(it.value(), os);
      }
      os << '}';
      break;
    }
    case json::value_t::array: {
      os << '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ',';
        dump17(j[i], os);
      }
      os << ']';
      break;
    }
    case json::value_t::number_float:
      os << format_number(j.get<double>());
      break;
    default:
      os << j.dump();
  }
}

std::string verdict_name(Membership v) {
  switch (v) {
    case Membership::member: return "member";
    case Membership::diverging: return "diverging";
    default: return "inconclusive";
  }
}
}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json number17(double v) { return json(v); }

json complex17(cplx v) { return json::array({v.real(), v.imag()}); }

static cplx complex_from(const json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2)
    throw configuration_error("json: complex values are [re, im] pairs");
  return cplx(j[0].get<double>(), j[1].get<double>());
}

json to_json(const PowerSeries& s) {
  json coeffs = json::array();
  for (const cplx& c : s.coeffs()) coeffs.push_back(complex17(c));
  return json{{"kind", s.interior() ? "interior" : "exterior"}, {"coeffs", coeffs}};
}

PowerSeries series_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "interior" && kind != "exterior")
    throw configuration_error("json: series kind must be interior or exterior");
  std::vector<cplx> coeffs;
  for (const json& c : j.at("coeffs")) coeffs.push_back(complex_from(c));
  return PowerSeries(std::move(coeffs),
                     kind == "interior" ? SeriesKind::interior : SeriesKind::exterior);
}

json to_json(const CircleHomeo& h) {
  json disp = json::array();
  for (std::size_t k = 0; k < h.modes(); ++k)
    disp.push_back(json::array({h.cos_coeffs()[k], h.sin_coeffs()[k]}));
  return json{{"displacement", disp}, {"margin", h.margin()}};
}

CircleHomeo homeo_from_json(const json& j) {
  std::vector<double> c, s;
  for (const json& pair : j.at("displacement")) {
    if (!pair.is_array() || pair.size() != 2)
      throw configuration_error("json: displacement entries are [cos, sin] pairs");
    c.push_back(pair[0].get<double>());
    s.push_back(pair[1].get<double>());
  }
  return CircleHomeo(std::move(c), std::move(s), j.at("margin").get<double>());
}

json to_json(const WeldingPair& pair) {
  return json{{"f", to_json(pair.f)},
              {"g", to_json(pair.g)},
              {"residual", pair.residual},
              {"iterations", pair.iterations},
              {"truncation", pair.truncation}};
}

json to_json(const PuncturedSphereConfig& c) {
  json punctures = json::array();
  for (const SpherePoint& p : c.punctures)
    punctures.push_back(p.infinite ? json("inf") : complex17(p.value));
  json discs = json::array();
  for (const ParametricDisc& d : c.discs)
    discs.push_back(json{{"center", complex17(d.center)}, {"radius", d.radius}});
  json eps = json::array();
  for (const cplx& e : c.epsilon) eps.push_back(complex17(e));
  return json{{"punctures", punctures}, {"discs", discs}, {"epsilon", eps}};
}

PuncturedSphereConfig config_from_json(const json& j) {
  PuncturedSphereConfig c;
  for (const json& p : j.at("punctures")) {
    if (p.is_string() && p.get<std::string>() == "inf")
      c.punctures.push_back(SpherePoint::inf());
    else
      c.punctures.push_back(SpherePoint::at(complex_from(p)));
  }
  for (const json& d : j.at("discs"))
    c.discs.push_back(ParametricDisc{complex_from(d.at("center")), d.at("radius").get<double>()});
  for (const json& e : j.at("epsilon")) c.epsilon.push_back(complex_from(e));
  if (j.contains("guard")) c.guard = j.at("guard").get<double>();
  return c;
}

json to_json(const RiggedSphere& r) {
  json caps = json::array(), riggings = json::array();
  for (const PowerSeries& cap : r.base.caps) caps.push_back(to_json(cap));
  for (const CircleHomeo& h : r.riggings) riggings.push_back(to_json(h));
  return json{{"caps", caps}, {"riggings", riggings}};
}

RiggedSphere rigged_from_json(const json& j) {
  RiggedSphere r;
  for (const json& cap : j.at("caps")) r.base.caps.push_back(series_from_json(cap));
  for (const json& h : j.at("riggings")) r.riggings.push_back(homeo_from_json(h));
  return r;
}

json to_json(const CheckReport& rep) {
  json q = json::object();
  for (const auto& [key, value] : rep.quantities) q[key] = value;
  return json{{"name", rep.name}, {"quantities", q}, {"tolerance", rep.tolerance},
              {"pass", rep.pass}};
}

json to_json(const MembershipVerdict& v) {
  return json{{"ladder", v.ladder},
              {"norms", v.norms},
              {"verdict", verdict_name(v.verdict)},
              {"growth_slope", v.growth_slope}};
}

json to_json(const EquivalenceReport& rep) {
  return json{{"equivalent", rep.equivalent},
              {"mobius", json::array({complex17(rep.witness.a()), complex17(rep.witness.b()),
                                      complex17(rep.witness.c()), complex17(rep.witness.d())})},
              {"puncture_error", rep.worst_puncture_error},
              {"boundary_distance", rep.worst_boundary_distance}};
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw configuration_error("cannot open input file: " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw configuration_error("JSON parse error in " + path + ": " + e.what());
  }
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw configuration_error("cannot open output file: " + path);
  std::ostringstream ss;
  dump17(j, ss);
  out << ss.str() << '\n';
}

}  // namespace teichnum
