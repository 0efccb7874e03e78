#include <gtest/gtest.h>

#include <cmath>

#include "relpoly/errors.hpp"
#include "relpoly/numeric.hpp"
#include "relpoly/rng.hpp"
#include "relpoly/union_find.hpp"

namespace relpoly {
namespace {

TEST(Numeric, Binomial) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(5, 7), 0);
    EXPECT_EQ(binomial(100, 50), BigInt("100891344545564193334812497256"));
    EXPECT_NEAR(log_binomial(10, 3), std::log(120.0), 1e-14);
    EXPECT_NEAR(log_binomial(1000, 500), std::lgamma(1001.0) - 2 * std::lgamma(501.0), 1e-9);
}

TEST(Numeric, RatioToDoubleHandlesHugeOperands) {
    const BigInt big = binomial(2000, 1000);
    EXPECT_DOUBLE_EQ(ratio_to_double(big, big * 4), 0.25);
    EXPECT_DOUBLE_EQ(ratio_to_double(3, 4), 0.75);
}

TEST(Numeric, BinomialMixtureMatchesDirectSum) {
    const std::vector<double> w{0.0, 0.1, 0.4, 0.9, 1.0};
    for (double x : {0.0, 0.1, 0.37, 0.5, 0.99, 1.0}) {
        double direct = 0.0;
        for (int k = 0; k <= 4; ++k) {
            direct += static_cast<double>(binomial(4, k)) * w[k] * std::pow(x, k) * std::pow(1 - x, 4 - k);
        }
        EXPECT_NEAR(binomial_mixture(w, x), direct, 1e-15);
    }
    const std::vector<double> ones(301, 1.0);
    EXPECT_NEAR(binomial_mixture(ones, 0.3), 1.0, 1e-12);
}

TEST(Numeric, RequireProbability) {
    EXPECT_NO_THROW(require_probability(0.0));
    EXPECT_NO_THROW(require_probability(1.0));
    EXPECT_THROW(require_probability(-0.01), DomainError);
    EXPECT_THROW(require_probability(std::nan("")), DomainError);
    EXPECT_EQ(clamp_unit(1.0000001), 1.0);
    EXPECT_EQ(clamp_unit(-1e-17), 0.0);
}

TEST(Rng, StreamsAreReproducibleAndDistinct) {
    Rng a(stream_seed(RngSeed{1}, 0));
    Rng b(stream_seed(RngSeed{1}, 0));
    Rng c(stream_seed(RngSeed{1}, 1));
    const auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
}

TEST(Rng, UniformIndexStaysInRange) {
    Rng rng = make_rng(RngSeed{4});
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; ++i) ++hits[uniform_index(rng, 7)];
    for (int h : hits) EXPECT_GT(h, 800);
    for (int i = 0; i < 1000; ++i) {
        const double u = uniform_unit(rng);
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}

TEST(UnionFind, TracksComponents) {
    UnionFind uf(5);
    for (int i = 0; i < 5; ++i) uf.activate();
    EXPECT_EQ(uf.components(), 5u);
    uf.unite(0, 1);
    uf.unite(1, 0);
    uf.unite(3, 4);
    EXPECT_EQ(uf.components(), 3u);
    EXPECT_EQ(uf.find(0), uf.find(1));
    EXPECT_NE(uf.find(2), uf.find(3));
    uf.reset();
    EXPECT_EQ(uf.components(), 0u);
}

}  // namespace
}  // namespace relpoly
