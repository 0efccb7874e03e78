#include "relpoly/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "relpoly/errors.hpp"

namespace relpoly {

Graph generate_er(std::size_t node_count, double link_probability, RngSeed seed) {
    if (node_count == 0) throw DomainError("ER graph needs at least one node");
    if (!(link_probability >= 0.0 && link_probability <= 1.0)) {
        throw DomainError("link probability " + std::to_string(link_probability) + " outside [0, 1]");
    }
    auto rng = make_rng(seed);
    std::vector<Link> links;
    for (NodeId u = 0; u + 1 < node_count; ++u) {
        for (NodeId v = u + 1; v < node_count; ++v) {
            if (uniform_unit(rng) < link_probability) links.emplace_back(u, v);
        }
    }
    return Graph(node_count, links);
}

Graph generate_rgg(std::size_t node_count, double radius, RngSeed seed) {
    if (node_count == 0) throw DomainError("RGG needs at least one node");
    if (!(radius >= 0.0)) throw DomainError("RGG radius must be nonnegative");
    auto rng = make_rng(seed);
    std::vector<double> xs(node_count), ys(node_count);
    for (std::size_t i = 0; i < node_count; ++i) {
        xs[i] = uniform_unit(rng);
        ys[i] = uniform_unit(rng);
    }
    const double r2 = radius * radius;
    std::vector<Link> links;
    for (NodeId u = 0; u + 1 < node_count; ++u) {
        for (NodeId v = u + 1; v < node_count; ++v) {
            const double dx = xs[u] - xs[v];
            const double dy = ys[u] - ys[v];
            if (dx * dx + dy * dy < r2) links.emplace_back(u, v);
        }
    }
    return Graph(node_count, links);
}

Graph generate_ba(std::size_t node_count, std::size_t links_per_node, RngSeed seed) {
    const std::size_t m = links_per_node;
    if (m == 0) throw DomainError("BA needs at least one link per new node");
    if (node_count <= m) {
        throw DomainError("BA needs N > m (N=" + std::to_string(node_count) + ", m=" + std::to_string(m) + ")");
    }
    auto rng = make_rng(seed);
    std::vector<Link> links;
    // Every link contributes both endpoints, so a uniform pick is degree-proportional.
    std::vector<NodeId> endpoints;
    for (NodeId u = 0; u < m; ++u) {
        for (NodeId v = u + 1; v < m; ++v) {
            links.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }
    std::vector<NodeId> targets;
    for (NodeId t = static_cast<NodeId>(m); t < node_count; ++t) {
        targets.clear();
        while (targets.size() < m) {
            const NodeId pick = endpoints.empty()
                                    ? static_cast<NodeId>(uniform_index(rng, t))
                                    : endpoints[uniform_index(rng, endpoints.size())];
            if (std::find(targets.begin(), targets.end(), pick) == targets.end()) targets.push_back(pick);
        }
        for (NodeId target : targets) {
            links.emplace_back(target, t);
            endpoints.push_back(target);
            endpoints.push_back(t);
        }
    }
    return Graph(node_count, links);
}

Graph generate_lattice(std::span<const std::size_t> dims) {
    if (dims.size() != 2 && dims.size() != 3) {
        throw DomainError("lattice needs 2 or 3 dimensions, got " + std::to_string(dims.size()));
    }
    for (auto d : dims) {
        if (d == 0) throw DomainError("lattice dimensions must be positive");
    }
    const std::size_t d1 = dims[0];
    const std::size_t d2 = dims[1];
    const std::size_t d3 = dims.size() == 3 ? dims[2] : 1;
    const auto id = [&](std::size_t x, std::size_t y, std::size_t z) {
        return static_cast<NodeId>(x + d1 * (y + d2 * z));
    };
    std::vector<Link> links;
    for (std::size_t z = 0; z < d3; ++z) {
        for (std::size_t y = 0; y < d2; ++y) {
            for (std::size_t x = 0; x < d1; ++x) {
                if (x + 1 < d1) links.emplace_back(id(x, y, z), id(x + 1, y, z));
                if (y + 1 < d2) links.emplace_back(id(x, y, z), id(x, y + 1, z));
                if (z + 1 < d3) links.emplace_back(id(x, y, z), id(x, y, z + 1));
            }
        }
    }
    return Graph(d1 * d2 * d3, links);
}

}  // namespace relpoly
