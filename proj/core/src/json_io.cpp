#include "relpoly/json_io.hpp"

#include <cstdint>
#include <limits>
#include <string>

#include "relpoly/errors.hpp"

namespace relpoly {
namespace {

nlohmann::ordered_json decimal_strings(const std::vector<BigInt>& counts) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& c : counts) out.push_back(c.str());
    return out;
}

std::vector<BigInt> parse_decimal_strings(const nlohmann::json& j) {
    std::vector<BigInt> out;
    for (const auto& item : j) {
        const auto text = item.get<std::string>();
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
            throw FormatError("coefficient '" + text + "' is not a nonnegative decimal integer");
        }
        out.emplace_back(text);
    }
    return out;
}

}  // namespace

nlohmann::ordered_json coefficients_to_json(const exact::ReliabilityCoefficients& c) {
    nlohmann::ordered_json j;
    j["N"] = c.node_count;
    if (c.kind == exact::CoefficientKind::node) {
        j["kind"] = "node";
        j["S"] = decimal_strings(c.connected);
    } else {
        j["kind"] = "link";
        j["L"] = c.order;
        j["F"] = decimal_strings(c.connected);
    }
    j["C"] = decimal_strings(c.cuts);
    return j;
}

exact::ReliabilityCoefficients coefficients_from_json(const nlohmann::json& j) {
    try {
        const auto n = j.at("N").get<std::size_t>();
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "node") return exact::ReliabilityCoefficients::from_node_counts(n, parse_decimal_strings(j.at("S")));
        if (kind == "link") return exact::ReliabilityCoefficients::from_link_counts(n, parse_decimal_strings(j.at("F")));
        throw FormatError("unknown coefficient kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed coefficient JSON: ") + e.what());
    }
}

nlohmann::ordered_json recovery_to_json(const cutset::CutRecovery& r) {
    nlohmann::ordered_json j;
    if (r.rounded) {
        auto counts = nlohmann::ordered_json::array();
        for (const auto& c : r.rounded_counts) {
            if (c >= 0 && c <= std::numeric_limits<std::int64_t>::max()) {
                counts.push_back(c.convert_to<std::int64_t>());
            } else {
                counts.push_back(c.str());
            }
        }
        j["C"] = counts;
    } else {
        j["C"] = r.counts;
    }
    j["residual"] = r.residual;
    j["rounded"] = r.rounded;
    j["probes"] = r.probes;
    if (r.rounded) j["max_deviation"] = r.max_rounding_deviation;
    j["warnings"] = r.warnings;
    return j;
}

nlohmann::ordered_json plan_to_json(const kgrip::AugmentationPlan& plan) {
    nlohmann::ordered_json j;
    j["strategy"] = std::string(kgrip::strategy_name(plan.strategy));
    j["k"] = plan.k;
    auto added = nlohmann::ordered_json::array();
    for (const auto& [u, v] : plan.added) added.push_back({u, v});
    j["added"] = added;
    if (plan.seed) j["seed"] = plan.seed->value;
    return j;
}

}  // namespace relpoly
