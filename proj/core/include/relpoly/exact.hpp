#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "relpoly/graph.hpp"
#include "relpoly/numeric.hpp"

namespace relpoly::exact {

enum class CoefficientKind { node, link };

/// Exact reliability coefficients.
///
/// Node variant: `connected[k]` is S_k, the number of k-node subsets inducing
/// a connected subgraph, and `cuts[j]` is C_j, the number of j-node subsets
/// whose removal leaves a disconnected residual (S_k + C_{N-k} = C(N,k)).
///
/// Link variant: `connected[j]` is F_j, the number of j-link subsets whose
/// removal keeps the graph connected, and `cuts[j]` = C(L,j) - F_j.
struct ReliabilityCoefficients {
    CoefficientKind kind = CoefficientKind::node;
    std::size_t node_count = 0;
    /// Polynomial degree: N for the node variant, L for the link variant.
    std::size_t order = 0;
    std::vector<BigInt> connected;
    std::vector<BigInt> cuts;

    static ReliabilityCoefficients from_node_counts(std::size_t node_count, std::vector<BigInt> s_counts);
    static ReliabilityCoefficients from_link_counts(std::size_t node_count, std::vector<BigInt> f_counts);

    /// s_k = S_k / C(N,k) (node) or F_j / C(L,j) (link).
    std::vector<double> connected_fractions() const;
    /// c_j = C_j / C(N,j) (node) or the link cut fractions.
    std::vector<double> cut_fractions() const;

    friend bool operator==(const ReliabilityCoefficients&, const ReliabilityCoefficients&) = default;
};

struct EnumerationOptions {
    /// Largest N (node variant) or L (link variant) accepted.
    std::size_t cap = 24;
    /// 0 selects default_worker_count().
    std::size_t workers = 0;
};

/// Hard ceiling for the cap; subsets are enumerated as 64-bit masks.
inline constexpr std::size_t kMaxEnumerationCap = 40;

ReliabilityCoefficients enumerate_node_coefficients(const Graph& g, EnumerationOptions options = {});
ReliabilityCoefficients enumerate_link_coefficients(const Graph& g, EnumerationOptions options = {});

/// nRel(p) = sum_k S_k p^k (1-p)^(N-k).
double eval_node_s_form(const ReliabilityCoefficients& c, double p);
/// nRel(p) = 1 - sum_j C_j p^(N-j) (1-p)^j.
double eval_node_c_form(const ReliabilityCoefficients& c, double p);
/// Rel(p) = sum_j F_j (1-p)^j p^(L-j).
double eval_link_reliability(const ReliabilityCoefficients& c, double p);

/// High-precision evaluation of the same polynomials (node: S-form, link:
/// F-form), used as an exact curve source by the cut-set solver.
PreciseReal eval_precise(const ReliabilityCoefficients& c, const PreciseReal& p);

enum class Family { complete, complete_pendant, cycle, path, star, star_pendant };

/// One of the six families with known closed forms:
/// K_N, K*_N (K_{N-1} plus a pendant), C_N, P_N, S_N (one centre, N-1 leaves)
/// and S*_N (S_{N-1} plus a pendant hanging off a leaf).
struct GraphFamily {
    Family family = Family::complete;
    std::size_t n = 1;
};

std::size_t family_min_nodes(Family f);
std::string_view family_name(Family f);
/// Accepts the names returned by family_name plus short aliases (K, K*, C, P, S, S*).
Family parse_family(std::string_view name);

Graph family_graph(GraphFamily f);

/// S_k of the family from its counting formula; valid for any N.
ReliabilityCoefficients family_node_coefficients(GraphFamily f);

/// Closed-form nRel(p). Cycle and path use their pole-free summation forms.
double closed_form_eval(GraphFamily f, double p);

/// Printed rational forms of the cycle and path polynomials. Both have a
/// removable pole at p = 1/2 and lose precision near it.
double cycle_rational_form(std::size_t n, double p);
double path_rational_form(std::size_t n, double p);

}  // namespace relpoly::exact
