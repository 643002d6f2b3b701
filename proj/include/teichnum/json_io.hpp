#pragma once

// JSON interchange for series, circle homeomorphisms, punctured-sphere
// configurations and rigged spheres, plus fixed-precision numeric
// serialization so identical inputs produce byte-identical artifacts.

#include <string>

#include "json.hpp"
#include "teichnum/circle_homeo.hpp"
#include "teichnum/rigged.hpp"
#include "teichnum/schiffer.hpp"
#include "teichnum/series.hpp"
#include "teichnum/verify.hpp"
#include "teichnum/welding.hpp"

namespace teichnum {

using json = nlohmann::ordered_json;

// doubles rendered with 17 significant digits, deterministically
std::string format_number(double v);
json number17(double v);
json complex17(cplx v);

json to_json(const PowerSeries& s);
PowerSeries series_from_json(const json& j);

json to_json(const CircleHomeo& h);
CircleHomeo homeo_from_json(const json& j);

json to_json(const WeldingPair& pair);

json to_json(const PuncturedSphereConfig& c);
PuncturedSphereConfig config_from_json(const json& j);

json to_json(const RiggedSphere& r);       // caps + riggings
RiggedSphere rigged_from_json(const json& j);

json to_json(const CheckReport& rep);
json to_json(const MembershipVerdict& v);
json to_json(const EquivalenceReport& rep);

// parse with parse errors rethrown as configuration_error
json load_json(const std::string& path);
void save_json(const std::string& path, const json& j);

}  // namespace teichnum
