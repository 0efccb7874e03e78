#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "relpoly/curve.hpp"
#include "relpoly/degree.hpp"
#include "relpoly/graph.hpp"

/// Degree-based approximations and surrogates of the node reliability
/// polynomial, and ensemble formulas for Erdős–Rényi and random geometric
/// graphs.
///
/// The Graph overloads warn (see diagnostics.hpp) when the input is
/// disconnected: the no-isolated-node surrogate behind these formulas assumes
/// the full graph can be connected.
namespace relpoly::approx {

/// (1 - phi_D(1-p))^(Np).
double stochastic_node_reliability(const DegreeDistribution& d, double p);
double stochastic_node_reliability(const Graph& g, double p);

/// (1 - phi_D(1-p))^N, with p the link operation probability.
double stochastic_link_reliability(const DegreeDistribution& d, double p);
double stochastic_link_reliability(const Graph& g, double p);

/// sup_p |node(p) - link(p)^p| over the shared grid.
double power_relation_gap(const Curve& node_curve, const Curve& link_curve);

/// (1 - p phi_D(1-p))^N.
///
/// Both "upper bounds" are exact probabilities of having no isolated
/// operational node only under an independence assumption, and the singleton
/// residual counts as connected; small graphs can fall below nRel (K_2 at
/// p = 1/2 gives 0.5625 against 0.75).
double arithmetic_upper_bound(const DegreeDistribution& d, double p);
double arithmetic_upper_bound(const Graph& g, double p);

/// prod_i (1 - p (1-p)^(d_i)). Never exceeds the arithmetic bound.
double geometric_upper_bound(const DegreeDistribution& d, double p);
double geometric_upper_bound(const Graph& g, double p);

struct ErModel {
    std::size_t node_count = 0;
    double link_probability = 0.0;

    /// k = N p_l.
    double mean_degree() const noexcept { return static_cast<double>(node_count) * link_probability; }
};

/// exp(-p N exp(-N p p_l)). Meaningful once N p p_l is at least of order
/// log(Np); it tends to 1 rather than 0 as p -> 0.
double er_node_reliability(const ErModel& m, double p);

struct ErIntersection {
    /// p_i = exp((k1 log N2 - k2 log N1) / (k2 - k1)), whether or not in (0,1).
    double p = 0.0;
    /// exp(-p_i / b1(p_i)) with b1(p) = exp(k1 p) / N1.
    double value = 0.0;
    /// The same expression for the second model, for comparison.
    double second_value = 0.0;
    bool inside_unit_interval = false;
    /// Empty when inside; otherwise the violated degree/size condition.
    std::string note;
};

/// Throws DomainError when both models have the same mean degree.
ErIntersection er_intersection(const ErModel& first, const ErModel& second);

/// Width of the p-interval over which the ER formula rises from `lo` to `hi`:
/// (log(-log lo) - log(-log hi)) / (N p_l). Requires 0 < lo <= hi < 1.
double er_transition_width(const ErModel& m, double lo, double hi);

struct RggModel {
    std::size_t node_count = 0;
    double radius = 0.0;

    /// Probability that a given node falls in another's disc, pi r^2.
    double pair_probability() const noexcept;
};

/// (1 - (1 - pi r^2)^(Np-1))^(Np). Requires pi r^2 <= 1 and Np >= 1.
double rgg_node_reliability(const RggModel& m, double p);

}  // namespace relpoly::approx
