#include "relpoly/kgrip.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "relpoly/errors.hpp"
#include "relpoly/numeric.hpp"

namespace relpoly::kgrip {
namespace {

Link ordered(NodeId a, NodeId b) { return a < b ? Link{a, b} : Link{b, a}; }

void require_capacity(const Graph& g, std::size_t k) {
    const std::size_t available = addable_pairs(g);
    if (k > available) {
        throw CapacityError("cannot add " + std::to_string(k) + " links: only " + std::to_string(available) +
                            " non-links remain");
    }
}

enum class Order { ascending, descending };

Augmentation degree_scan(const Graph& g, std::size_t k, Order order, Strategy tag) {
    require_capacity(g, k);
    const std::size_t n = g.node_count();
    auto degree = g.degrees();
    std::set<Link> added_set;
    AugmentationPlan plan{.strategy = tag, .k = k, .added = {}, .seed = std::nullopt};
    const auto linked = [&](NodeId a, NodeId b) { return g.has_link(a, b) || added_set.count(ordered(a, b)) > 0; };

    std::vector<NodeId> nodes(n);
    for (std::size_t step = 0; step < k; ++step) {
        std::iota(nodes.begin(), nodes.end(), NodeId{0});
        std::sort(nodes.begin(), nodes.end(), [&](NodeId a, NodeId b) {
            if (degree[a] != degree[b]) return order == Order::ascending ? degree[a] < degree[b] : degree[a] > degree[b];
            return a < b;
        });
        bool done = false;
        for (NodeId i : nodes) {
            for (NodeId j : nodes) {
                if (j == i || linked(i, j)) continue;
                const auto link = ordered(i, j);
                added_set.insert(link);
                plan.added.push_back(link);
                ++degree[i];
                ++degree[j];
                done = true;
                break;
            }
            if (done) break;
        }
        // Capacity was checked up front, so some pair is always addable.
        if (!done) throw CapacityError("no addable pair left");
    }
    Graph augmented = g.with_links(plan.added);
    return {std::move(augmented), std::move(plan)};
}

}  // namespace

std::string_view strategy_name(Strategy s) {
    switch (s) {
    case Strategy::lowest: return "lowest";
    case Strategy::highest: return "highest";
    case Strategy::random: return "random";
    }
    return "?";
}

Strategy parse_strategy(std::string_view name) {
    if (name == "lowest") return Strategy::lowest;
    if (name == "highest") return Strategy::highest;
    if (name == "random") return Strategy::random;
    throw DomainError("unknown strategy '" + std::string(name) + "'");
}

std::vector<std::size_t> AugmentationPlan::degree_change(std::size_t node_count) const {
    std::vector<std::size_t> a(node_count, 0);
    for (const auto& [u, v] : added) {
        ++a.at(u);
        ++a.at(v);
    }
    return a;
}

double objective(const Graph& g, double p) {
    require_probability(p);
    const std::size_t n = g.node_count();
    if (n == 0) throw DomainError("objective of an empty graph");
    double sum = 0.0;
    for (NodeId u = 0; u < n; ++u) sum += 1.0 - std::pow(1.0 - p, static_cast<double>(g.degree(u)));
    return sum / static_cast<double>(n);
}

double restructuring_delta(std::size_t deg_m, std::size_t deg_n, double p) {
    require_probability(p);
    if (deg_n == 0) throw DomainError("restructuring needs a link endpoint at the source node");
    const double q = 1.0 - p;
    return p * (std::pow(q, static_cast<double>(deg_m)) - std::pow(q, static_cast<double>(deg_n - 1)));
}

std::size_t addable_pairs(const Graph& g) {
    const std::size_t n = g.node_count();
    return n * (n - (n > 0 ? 1 : 0)) / 2 - g.link_count();
}

Augmentation greedy_lowest_degree_addition(const Graph& g, std::size_t k) {
    return degree_scan(g, k, Order::ascending, Strategy::lowest);
}

Augmentation highest_degree_addition(const Graph& g, std::size_t k) {
    return degree_scan(g, k, Order::descending, Strategy::highest);
}

Augmentation random_pairing_addition(const Graph& g, std::size_t k, RngSeed seed) {
    require_capacity(g, k);
    const std::size_t n = g.node_count();
    auto rng = make_rng(seed);
    AugmentationPlan plan{.strategy = Strategy::random, .k = k, .added = {}, .seed = seed};

    const std::size_t available = addable_pairs(g);
    constexpr std::size_t kEnumerateLimit = std::size_t{1} << 22;
    if (available <= kEnumerateLimit || 2 * k > available) {
        std::vector<Link> candidates;
        candidates.reserve(available);
        for (NodeId u = 0; u < n; ++u) {
            for (NodeId v = u + 1; v < n; ++v) {
                if (!g.has_link(u, v)) candidates.emplace_back(u, v);
            }
        }
        // Partial Fisher-Yates: the first k slots are a uniform k-sample.
        for (std::size_t i = 0; i < k; ++i) {
            const auto j = i + uniform_index(rng, candidates.size() - i);
            std::swap(candidates[i], candidates[j]);
            plan.added.push_back(candidates[i]);
        }
    } else {
        // Sparse regime: rejection keeps memory proportional to k.
        std::set<Link> taken;
        while (plan.added.size() < k) {
            const auto u = static_cast<NodeId>(uniform_index(rng, n));
            const auto v = static_cast<NodeId>(uniform_index(rng, n));
            if (u == v || g.has_link(u, v)) continue;
            const auto link = ordered(u, v);
            if (taken.insert(link).second) plan.added.push_back(link);
        }
    }
    Graph augmented = g.with_links(plan.added);
    return {std::move(augmented), std::move(plan)};
}

Augmentation augment(const Graph& g, std::size_t k, Strategy strategy, RngSeed seed) {
    switch (strategy) {
    case Strategy::lowest: return greedy_lowest_degree_addition(g, k);
    case Strategy::highest: return highest_degree_addition(g, k);
    case Strategy::random: return random_pairing_addition(g, k, seed);
    }
    throw DomainError("unknown strategy");
}

}  // namespace relpoly::kgrip
