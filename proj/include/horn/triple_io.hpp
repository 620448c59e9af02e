#pragma once

#include <json.hpp>

#include "horn/reduction.hpp"
#include "horn/spectra.hpp"
#include "horn/triple.hpp"

namespace horn {

// {"n":..,"r":..,"I":[..],"J":[..],"K":[..],"variant":"tilde"|"classic"},
// index lists ascending.
nlohmann::json triple_to_json(const HornTriple& t, Variant v);
HornTriple triple_from_json(const nlohmann::json& j);
Variant variant_of_json(const nlohmann::json& j);

nlohmann::json chain_to_json(const ReductionChain& chain, Variant v);

nlohmann::json slack_report_to_json(const SlackReport& report);

}  // namespace horn
