#include "relpoly/graph.hpp"

#include <algorithm>
#include <string>

#include "relpoly/errors.hpp"

namespace relpoly {

Graph::Graph(std::size_t node_count, std::span<const Link> links) : adjacency_(node_count) {
    for (const auto& [u, v] : links) {
        if (u >= node_count || v >= node_count) {
            throw DomainError("link (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") references a node outside 0.." +
                              std::to_string(node_count == 0 ? 0 : node_count - 1));
        }
        if (u == v) throw DomainError("self-loop at node " + std::to_string(u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        degree_sum += nbrs.size();
    }
    link_count_ = degree_sum / 2;
}

bool Graph::has_link(NodeId u, NodeId v) const {
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Link> Graph::links() const {
    std::vector<Link> out;
    out.reserve(link_count_);
    for (NodeId u = 0; u < adjacency_.size(); ++u) {
        for (NodeId v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> out;
    out.reserve(adjacency_.size());
    for (const auto& nbrs : adjacency_) out.push_back(nbrs.size());
    return out;
}

Graph Graph::with_links(std::span<const Link> extra) const {
    auto all = links();
    all.insert(all.end(), extra.begin(), extra.end());
    return Graph(node_count(), all);
}

bool is_connected(const Graph& g, std::span<const NodeId> subset) {
    const std::size_t n = g.node_count();
    std::vector<char> in_subset(n, 0);
    std::size_t members = 0;
    for (NodeId u : subset) {
        if (u >= n) throw DomainError("node id " + std::to_string(u) + " out of range");
        if (!in_subset[u]) {
            in_subset[u] = 1;
            ++members;
        }
    }
    if (members == 0) return false;

    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack{subset.front()};
    seen[subset.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        for (NodeId v : g.neighbors(u)) {
            if (in_subset[v] && !seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == members;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

std::size_t component_count(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack;
    std::size_t components = 0;
    for (NodeId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++components;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            for (NodeId v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
    }
    return components;
}

}  // namespace relpoly
