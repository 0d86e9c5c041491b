#pragma once

#include "missmass/applications.hpp"
#include "missmass/bounds.hpp"
#include "missmass/distributions.hpp"
#include "missmass/estimators.hpp"
#include "missmass/oracles.hpp"
#include "missmass/separation.hpp"
#include "missmass/stats.hpp"
#include "missmass/wasserstein.hpp"

#include <json.hpp>

#include <string>

namespace missmass {

using Json = nlohmann::ordered_json;

Json to_json(const Estimate& e);
Json to_json(const SeparationReport& r);
Json to_json(const BoundReport& r);
Json to_json(const OracleEstimate& e);
Json to_json(const WassersteinReport& r);
Json to_json(const CodingReport& r);
Json to_json(const Summary& s);
Json to_json(const MetricSpace& space);
Json to_json(const DistributionSpec& spec);

/// Accepts every spec kind by name, plus the shorthands
/// {"kind":"discrete_uniform","k":K} and {"kind":"zipf","k":K}.
DistributionSpec distribution_from_json(const Json& j);

/// Serialises with every floating-point number printed to 17 significant
/// digits. indent < 0 gives a single line.
std::string dump_json(const Json& j, int indent = 2);

} // namespace missmass
