#include "relpoly/degree.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "relpoly/errors.hpp"

namespace relpoly {

DegreeDistribution::DegreeDistribution(const Graph& g) : node_count_(g.node_count()) {
    if (node_count_ == 0) throw DomainError("degree distribution of an empty graph");
    for (NodeId u = 0; u < node_count_; ++u) ++counts_[g.degree(u)];
}

std::size_t DegreeDistribution::max_degree() const noexcept {
    return counts_.empty() ? 0 : counts_.rbegin()->first;
}

std::size_t DegreeDistribution::count(std::size_t degree) const {
    const auto it = counts_.find(degree);
    return it == counts_.end() ? 0 : it->second;
}

double DegreeDistribution::probability(std::size_t degree) const {
    return static_cast<double>(count(degree)) / static_cast<double>(node_count_);
}

double DegreeDistribution::pgf(double z) const {
    if (!(z >= 0.0 && z <= 1.0)) {
        throw DomainError("pgf argument " + std::to_string(z) + " outside [0, 1]");
    }
    // std::pow(0.0, 0) is 1, which is the 0^0 convention needed for Pr[D=0].
    // Dividing first keeps a single-degree distribution at exactly z^d.
    double sum = 0.0;
    for (const auto& [degree, n] : counts_) {
        sum += static_cast<double>(n) / static_cast<double>(node_count_) * std::pow(z, static_cast<double>(degree));
    }
    return std::min(1.0, sum);
}

}  // namespace relpoly
