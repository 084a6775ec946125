#pragma once

// JSON encodings of scenarios and reports.  Objects use sorted keys, so equal
// inputs serialize to identical bytes.

#include "cmdihedral/congruence.hpp"

#include <json.hpp>

#include <string>

namespace cmdihedral::json_io {

using json = nlohmann::json;

/// Small integers as numbers, anything beyond 64 bits as a decimal string.
json integer(Integer const & x);
json ideal(IdealRep const & I);
json prediction(SerrePrediction const & p);
json report(CongruenceReport const & r);
json character(HeckeSpec const & s);
json scenario_result(Scenario const & s, ScenarioResult const & r);
json search_result(Scenario const & s, SearchResult const & r);
json class_group(QuadraticField const & K);

/// Parses a scenario document; throws domain_error on any schema violation.
Scenario parse_scenario(json const & doc);
Scenario parse_scenario_text(std::string const & text);

}  // namespace cmdihedral::json_io
