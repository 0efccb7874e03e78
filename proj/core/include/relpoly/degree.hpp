#pragma once

#include <cstddef>
#include <map>

#include "relpoly/graph.hpp"

namespace relpoly {

/// Empirical degree distribution Pr[D = j] = n_j / N, stored as exact counts.
class DegreeDistribution {
public:
    /// Throws DomainError for the empty graph.
    explicit DegreeDistribution(const Graph& g);

    std::size_t node_count() const noexcept { return node_count_; }
    std::size_t max_degree() const noexcept;

    /// n_j, the number of nodes with degree j (0 when absent).
    std::size_t count(std::size_t degree) const;
    double probability(std::size_t degree) const;

    /// Sorted map degree -> n_j over the observed degrees.
    const std::map<std::size_t, std::size_t>& counts() const noexcept { return counts_; }

    /// Probability generating function E[z^D]; z must lie in [0, 1].
    double pgf(double z) const;

private:
    std::size_t node_count_ = 0;
    std::map<std::size_t, std::size_t> counts_;
};

inline DegreeDistribution degree_distribution(const Graph& g) { return DegreeDistribution(g); }

inline double pgf_eval(const DegreeDistribution& d, double z) { return d.pgf(z); }

}  // namespace relpoly
