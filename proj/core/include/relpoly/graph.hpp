#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace relpoly {

using NodeId = std::uint32_t;
using Link = std::pair<NodeId, NodeId>;

/// Immutable simple undirected graph on nodes 0..N-1.
///
/// Adjacency lists are sorted and symmetric; self-loops and parallel links
/// are rejected or collapsed at construction.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from a link list. Duplicate and reversed links collapse;
    /// self-loops and out-of-range ids raise DomainError.
    Graph(std::size_t node_count, std::span<const Link> links);

    static Graph empty(std::size_t node_count) { return Graph(node_count, {}); }

    std::size_t node_count() const noexcept { return adjacency_.size(); }
    std::size_t link_count() const noexcept { return link_count_; }

    std::span<const NodeId> neighbors(NodeId u) const { return adjacency_.at(u); }
    std::size_t degree(NodeId u) const { return adjacency_.at(u).size(); }
    bool has_link(NodeId u, NodeId v) const;

    /// Links as (u, v) with u < v, sorted lexicographically.
    std::vector<Link> links() const;
    std::vector<std::size_t> degrees() const;

    /// New graph with the extra links; the receiver is unchanged.
    Graph with_links(std::span<const Link> extra) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<NodeId>> adjacency_;
    std::size_t link_count_ = 0;
};

/// True iff the subgraph induced by `subset` has exactly one connected
/// component. The empty subset is disconnected; a singleton is connected.
bool is_connected(const Graph& g, std::span<const NodeId> subset);

/// Connectivity of the whole graph under the same convention.
bool is_connected(const Graph& g);

/// Number of connected components (0 for the empty graph).
std::size_t component_count(const Graph& g);

}  // namespace relpoly
