#include <cmath>
#include <string>

#include "relpoly/errors.hpp"
#include "relpoly/exact.hpp"

namespace relpoly::exact {
namespace {

void require_size(GraphFamily f) {
    const auto min = family_min_nodes(f.family);
    if (f.n < min) {
        throw DomainError(std::string(family_name(f.family)) + " needs N >= " + std::to_string(min) +
                          ", got " + std::to_string(f.n));
    }
}

}  // namespace

std::size_t family_min_nodes(Family f) { return f == Family::complete ? 1 : 3; }

std::string_view family_name(Family f) {
    switch (f) {
    case Family::complete: return "complete";
    case Family::complete_pendant: return "complete-pendant";
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::star: return "star";
    case Family::star_pendant: return "star-pendant";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    if (name == "complete" || name == "K") return Family::complete;
    if (name == "complete-pendant" || name == "K*") return Family::complete_pendant;
    if (name == "cycle" || name == "C") return Family::cycle;
    if (name == "path" || name == "P") return Family::path;
    if (name == "star" || name == "S") return Family::star;
    if (name == "star-pendant" || name == "S*") return Family::star_pendant;
    throw DomainError("unknown graph family '" + std::string(name) + "'");
}

Graph family_graph(GraphFamily f) {
    require_size(f);
    const auto n = static_cast<NodeId>(f.n);
    std::vector<Link> links;
    switch (f.family) {
    case Family::complete:
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v) links.emplace_back(u, v);
        break;
    case Family::complete_pendant:
        // Clique on 0..N-2, pendant N-1 hangs off node 0.
        for (NodeId u = 0; u + 1 < n; ++u)
            for (NodeId v = u + 1; v + 1 < n; ++v) links.emplace_back(u, v);
        links.emplace_back(0, n - 1);
        break;
    case Family::cycle:
        for (NodeId u = 0; u < n; ++u) links.emplace_back(u, (u + 1) % n);
        break;
    case Family::path:
        for (NodeId u = 0; u + 1 < n; ++u) links.emplace_back(u, u + 1);
        break;
    case Family::star:
        for (NodeId u = 1; u < n; ++u) links.emplace_back(0, u);
        break;
    case Family::star_pendant:
        // Centre 0 with leaves 1..N-2; pendant N-1 hangs off leaf 1.
        for (NodeId u = 1; u + 1 < n; ++u) links.emplace_back(0, u);
        links.emplace_back(1, n - 1);
        break;
    }
    return Graph(f.n, links);
}

ReliabilityCoefficients family_node_coefficients(GraphFamily f) {
    require_size(f);
    const std::size_t n = f.n;
    std::vector<BigInt> s(n + 1, 0);
    if (n >= 1) s[1] = n;
    for (std::size_t k = 2; k <= n; ++k) {
        switch (f.family) {
        case Family::complete: s[k] = binomial(n, k); break;
        case Family::complete_pendant:
            // inside the clique, or containing the pendant and its anchor
            s[k] = binomial(n - 1, k) + binomial(n - 2, k - 2);
            break;
        case Family::cycle: s[k] = k == n ? 1 : n; break;
        case Family::path: s[k] = n - k + 1; break;
        case Family::star: s[k] = binomial(n - 1, k - 1); break;
        case Family::star_pendant:
            // with the centre, minus pendant-without-anchor; plus {anchor, pendant}
            s[k] = binomial(n - 1, k - 1) - binomial(n - 3, k - 2) + (k == 2 ? 1 : 0);
            break;
        }
    }
    return ReliabilityCoefficients::from_node_counts(n, std::move(s));
}

double closed_form_eval(GraphFamily f, double p) {
    require_size(f);
    require_probability(p);
    const double n = static_cast<double>(f.n);
    const double q = 1.0 - p;
    switch (f.family) {
    case Family::complete: return 1.0 - std::pow(q, n);
    case Family::complete_pendant: return q * (1.0 - std::pow(q, n - 1)) + p * p + p * std::pow(q, n - 1);
    case Family::cycle: {
        double sum = 0.0;
        for (std::size_t k = 1; k + 1 <= f.n; ++k) {
            sum += std::pow(p, n - static_cast<double>(k)) * std::pow(q, static_cast<double>(k));
        }
        return clamp_unit(std::pow(p, n) + n * sum);
    }
    case Family::path: {
        double sum = 0.0;
        for (std::size_t k = 1; k <= f.n; ++k) {
            const double kd = static_cast<double>(k);
            sum += (n - kd + 1.0) * std::pow(p, kd) * std::pow(q, n - kd);
        }
        return clamp_unit(sum);
    }
    case Family::star: return p + (n - 1.0) * p * std::pow(q, n - 1.0);
    case Family::star_pendant:
        return q * (p + (n - 2.0) * p * std::pow(q, n - 2.0)) + p * p * p + p * p * std::pow(q, n - 2.0) +
               p * std::pow(q, n - 1.0);
    }
    return 0.0;
}

/// Rational forms as printed, with poles at p = 1/2. Only used to cross-check
/// the summation forms away from the pole.
double cycle_rational_form(std::size_t n, double p) {
    const double nd = static_cast<double>(n);
    return nd * p * (std::pow(p, nd) - std::pow(1.0 - p, nd)) / (2.0 * p - 1.0) - (nd - 1.0) * std::pow(p, nd);
}

double path_rational_form(std::size_t n, double p) {
    const double nd = static_cast<double>(n);
    const double q = 1.0 - p;
    return (nd * p * std::pow(q, nd + 1.0) - (nd + 1.0) * p * p * std::pow(q, nd) + std::pow(p, nd + 2.0)) /
           ((1.0 - 2.0 * p) * (1.0 - 2.0 * p));
}

}  // namespace relpoly::exact
