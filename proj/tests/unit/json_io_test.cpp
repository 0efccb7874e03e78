#include <gtest/gtest.h>

#include "relpoly/errors.hpp"
#include "relpoly/exact.hpp"
#include "relpoly/json_io.hpp"
#include "relpoly/kgrip.hpp"

namespace relpoly {
namespace {

TEST(JsonIo, NodeCoefficientsRoundTrip) {
    const auto c = exact::family_node_coefficients({exact::Family::complete, 40});
    const auto j = coefficients_to_json(c);
    EXPECT_EQ(j["kind"], "node");
    EXPECT_EQ(j["N"], 40);
    EXPECT_EQ(j["S"][20], "137846528820");
    EXPECT_EQ(coefficients_from_json(nlohmann::json::parse(j.dump())), c);
}

TEST(JsonIo, LinkCoefficientsRoundTrip) {
    const auto c = exact::enumerate_link_coefficients(exact::family_graph({exact::Family::cycle, 5}));
    const auto j = coefficients_to_json(c);
    EXPECT_EQ(j["kind"], "link");
    EXPECT_EQ(j["L"], 5);
    EXPECT_EQ(j.dump(), R"({"N":5,"kind":"link","L":5,"F":["1","5","0","0","0","0"],"C":["0","0","10","10","5","1"]})");
    EXPECT_EQ(coefficients_from_json(nlohmann::json::parse(j.dump())), c);
}

TEST(JsonIo, RejectsMalformedCoefficients) {
    EXPECT_THROW(coefficients_from_json(nlohmann::json::parse(R"({"N":2,"kind":"node","S":["0","x","1"],"C":["0","0","1"]})")),
                 FormatError);
    EXPECT_THROW(coefficients_from_json(nlohmann::json::parse(R"({"N":2,"kind":"wire"})")), FormatError);
    EXPECT_THROW(coefficients_from_json(nlohmann::json::parse(R"({"kind":"node"})")), FormatError);
}

TEST(JsonIo, PlanSchema) {
    kgrip::AugmentationPlan plan{kgrip::Strategy::random, 2, {{0, 3}, {1, 2}}, RngSeed{7}};
    EXPECT_EQ(plan_to_json(plan).dump(), R"({"strategy":"random","k":2,"added":[[0,3],[1,2]],"seed":7})");
    plan.seed.reset();
    EXPECT_FALSE(plan_to_json(plan).contains("seed"));
}

}  // namespace
}  // namespace relpoly
