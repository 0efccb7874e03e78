#pragma once

#include <nlohmann/json.hpp>

#include "relpoly/cutset.hpp"
#include "relpoly/exact.hpp"
#include "relpoly/kgrip.hpp"

namespace relpoly {

/// {"N", "kind", "S"/"F", "C"}; counts are decimal strings so arbitrary
/// precision survives.
nlohmann::ordered_json coefficients_to_json(const exact::ReliabilityCoefficients& c);
exact::ReliabilityCoefficients coefficients_from_json(const nlohmann::json& j);

/// {"C", "residual", "rounded", "probes"} plus "max_deviation" and "warnings".
nlohmann::ordered_json recovery_to_json(const cutset::CutRecovery& r);

/// {"strategy", "k", "added", "seed"?}.
nlohmann::ordered_json plan_to_json(const kgrip::AugmentationPlan& plan);

}  // namespace relpoly
