#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "relpoly/graph.hpp"
#include "relpoly/rng.hpp"

namespace relpoly::kgrip {

enum class Strategy { lowest, highest, random };

std::string_view strategy_name(Strategy s);
Strategy parse_strategy(std::string_view name);

/// k non-links added to a base graph.
struct AugmentationPlan {
    Strategy strategy = Strategy::lowest;
    std::size_t k = 0;
    /// In insertion order, each as (u, v) with u < v.
    std::vector<Link> added;
    std::optional<RngSeed> seed;

    /// a_i: number of added links at node i. Sums to 2k.
    std::vector<std::size_t> degree_change(std::size_t node_count) const;
};

struct Augmentation {
    Graph graph;
    AugmentationPlan plan;
};

/// 1 - phi_D(1-p) = (1/N) sum_i (1 - (1-p)^(d_i)); both stochastic
/// approximations increase with it.
double objective(const Graph& g, double p);

/// Change of sum_i (1 - (1-p)^(d_i)) when one added-link endpoint moves from a
/// node of current degree deg_n to a node of current degree deg_m:
/// p((1-p)^deg_m - (1-p)^(deg_n - 1)). Positive iff deg_n - 1 > deg_m.
double restructuring_delta(std::size_t deg_m, std::size_t deg_n, double p);

/// Non-links available: C(N,2) - L.
std::size_t addable_pairs(const Graph& g);

/// Repeatedly links the lowest-degree node to the lowest-degree node it is not
/// yet adjacent to; ties go to the smaller id and degrees are refreshed after
/// every link. A node adjacent to everything is skipped in favour of the next.
Augmentation greedy_lowest_degree_addition(const Graph& g, std::size_t k);

/// Same scan with degrees in descending order.
Augmentation highest_degree_addition(const Graph& g, std::size_t k);

/// k uniform draws without replacement from the non-links.
Augmentation random_pairing_addition(const Graph& g, std::size_t k, RngSeed seed);

Augmentation augment(const Graph& g, std::size_t k, Strategy strategy, RngSeed seed = {});

}  // namespace relpoly::kgrip
