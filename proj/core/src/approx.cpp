#include "relpoly/approx.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "relpoly/diagnostics.hpp"
#include "relpoly/errors.hpp"
#include "relpoly/numeric.hpp"

namespace relpoly::approx {
namespace {

// (1 - x)^e for x in [0,1], e >= 0.
double pow_one_minus(double x, double e) {
    if (e == 0.0) return 1.0;
    if (x >= 1.0) return 0.0;
    return std::exp(e * std::log1p(-x));
}

void warn_if_disconnected(const Graph& g) {
    if (!is_connected(g)) {
        warn("input graph is disconnected; degree-based approximations assume a connectable graph");
    }
}

}  // namespace

double stochastic_node_reliability(const DegreeDistribution& d, double p) {
    require_probability(p);
    const double isolated = d.pgf(1.0 - p);
    return clamp_unit(pow_one_minus(isolated, static_cast<double>(d.node_count()) * p));
}

double stochastic_node_reliability(const Graph& g, double p) {
    warn_if_disconnected(g);
    return stochastic_node_reliability(DegreeDistribution(g), p);
}

double stochastic_link_reliability(const DegreeDistribution& d, double p) {
    require_probability(p);
    const double isolated = d.pgf(1.0 - p);
    return clamp_unit(pow_one_minus(isolated, static_cast<double>(d.node_count())));
}

double stochastic_link_reliability(const Graph& g, double p) {
    warn_if_disconnected(g);
    return stochastic_link_reliability(DegreeDistribution(g), p);
}

double power_relation_gap(const Curve& node_curve, const Curve& link_curve) {
    require_same_grid(node_curve, link_curve);
    double gap = 0.0;
    for (std::size_t i = 0; i < node_curve.size(); ++i) {
        const double powered = std::pow(link_curve.value[i], node_curve.p[i]);
        gap = std::max(gap, std::abs(node_curve.value[i] - powered));
    }
    return gap;
}

double arithmetic_upper_bound(const DegreeDistribution& d, double p) {
    require_probability(p);
    const double isolated_active = p * d.pgf(1.0 - p);
    return clamp_unit(pow_one_minus(isolated_active, static_cast<double>(d.node_count())));
}

double arithmetic_upper_bound(const Graph& g, double p) {
    warn_if_disconnected(g);
    return arithmetic_upper_bound(DegreeDistribution(g), p);
}

double geometric_upper_bound(const DegreeDistribution& d, double p) {
    require_probability(p);
    // Nodes of equal degree share a factor; group them so the product is
    // evaluated once per distinct degree.
    double log_sum = 0.0;
    for (const auto& [degree, n] : d.counts()) {
        const double f = p * std::pow(1.0 - p, static_cast<double>(degree));
        if (f >= 1.0) return 0.0;
        log_sum += static_cast<double>(n) * std::log1p(-f);
    }
    return clamp_unit(std::exp(log_sum));
}

double geometric_upper_bound(const Graph& g, double p) {
    warn_if_disconnected(g);
    return geometric_upper_bound(DegreeDistribution(g), p);
}

double er_node_reliability(const ErModel& m, double p) {
    require_probability(p);
    require_probability(m.link_probability, "link probability");
    if (m.node_count == 0) throw DomainError("ER model needs at least one node");
    const double n = static_cast<double>(m.node_count);
    return clamp_unit(std::exp(-p * n * std::exp(-n * p * m.link_probability)));
}

ErIntersection er_intersection(const ErModel& first, const ErModel& second) {
    if (first.node_count == 0 || second.node_count == 0) throw DomainError("ER model needs at least one node");
    const double k1 = first.mean_degree();
    const double k2 = second.mean_degree();
    if (k1 == k2) throw DomainError("ER models with equal mean degree have no isolated intersection");
    const double log_n1 = std::log(static_cast<double>(first.node_count));
    const double log_n2 = std::log(static_cast<double>(second.node_count));

    ErIntersection out;
    out.p = std::exp((k1 * log_n2 - k2 * log_n1) / (k2 - k1));
    const auto value_at = [&](const ErModel& m, double k) {
        return std::exp(-out.p * static_cast<double>(m.node_count) * std::exp(-k * out.p));
    };
    out.value = value_at(first, k1);
    out.second_value = value_at(second, k2);
    out.inside_unit_interval = out.p > 0.0 && out.p < 1.0;
    if (!out.inside_unit_interval) {
        out.note = k2 > k1 ? "no intersection in (0,1): requires log N1 / log N2 > k1 / k2"
                           : "no intersection in (0,1): requires log N1 / log N2 < k1 / k2";
    }
    return out;
}

double er_transition_width(const ErModel& m, double lo, double hi) {
    if (!(lo > 0.0 && lo < 1.0 && hi > 0.0 && hi < 1.0)) {
        throw DomainError("reliability levels must lie strictly inside (0, 1)");
    }
    if (lo > hi) throw DomainError("lower reliability level exceeds the upper one");
    const double k = m.mean_degree();
    if (!(k > 0.0)) throw DomainError("transition width needs a positive mean degree");
    return (std::log(-std::log(lo)) - std::log(-std::log(hi))) / k;
}

double RggModel::pair_probability() const noexcept { return std::numbers::pi * radius * radius; }

double rgg_node_reliability(const RggModel& m, double p) {
    require_probability(p);
    const double a = m.pair_probability();
    if (a > 1.0) throw DomainError("RGG pair probability pi r^2 exceeds 1");
    const double np = static_cast<double>(m.node_count) * p;
    if (np < 1.0) throw DomainError("RGG formula needs N p >= 1");
    const double isolated = pow_one_minus(a, np - 1.0);
    return clamp_unit(pow_one_minus(isolated, np));
}

}  // namespace relpoly::approx
