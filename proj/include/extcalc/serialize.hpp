#pragma once

#include <json.hpp>

#include "extcalc/ddt_pointwise.hpp"
#include "extcalc/dhym_pointwise.hpp"
#include "extcalc/flat_torus_complex.hpp"
#include "extcalc/kform.hpp"

namespace extcalc {

using Json = nlohmann::ordered_json;

/// theta reduced to (-pi, pi].
double reduce_angle(double theta);

Json to_json(const Form& f);
/// Throws ContractViolation on a malformed record.
Form form_from_json(const Json& j);

Json to_json(const DdtReport& r);
Json to_json(const DhymReport& r);
Json to_json(const CohomologySummary& s);

}  // namespace extcalc
