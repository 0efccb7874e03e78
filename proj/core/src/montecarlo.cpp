#include "relpoly/montecarlo.hpp"

#include <cmath>
#include <numeric>

#include "relpoly/errors.hpp"
#include "relpoly/numeric.hpp"
#include "relpoly/parallel.hpp"
#include "relpoly/union_find.hpp"

namespace relpoly::mc {
namespace {

std::size_t resolve_workers(std::size_t requested, std::uint64_t runs) {
    const std::size_t w = requested == 0 ? default_worker_count() : requested;
    return static_cast<std::size_t>(std::min<std::uint64_t>(w, std::max<std::uint64_t>(1, runs)));
}

// Accumulates per-worker R_j vectors by integer addition.
template <class RunFn>
std::vector<std::uint64_t> accumulate_runs(std::size_t order, std::uint64_t runs, std::size_t workers,
                                           RunFn&& make_runner) {
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(order + 1, 0));
    parallel_blocks(runs, workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
        auto runner = make_runner();
        for (std::uint64_t r = begin; r < end; ++r) runner(r, partial[w]);
    });
    std::vector<std::uint64_t> total(order + 1, 0);
    for (const auto& counts : partial) {
        for (std::size_t j = 0; j <= order; ++j) total[j] += counts[j];
    }
    return total;
}

double interpolate(std::span<const double> values, double index) {
    const std::size_t last = values.size() - 1;
    if (index <= 0.0) return values.front();
    if (index >= static_cast<double>(last)) return values.back();
    const double lo = std::floor(index);
    const auto i = static_cast<std::size_t>(lo);
    const double t = index - lo;
    if (t == 0.0) return values[i];
    return (1.0 - t) * values[i] + t * values[i + 1];
}

}  // namespace

std::vector<double> CutFractionEstimate::fractions() const {
    std::vector<double> out(disconnected.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = static_cast<double>(disconnected[j]) / static_cast<double>(runs);
    }
    return out;
}

CutFractionEstimate estimate_node_cut_fractions(const Graph& g, std::uint64_t runs, RngSeed seed,
                                                McOptions options) {
    const std::size_t n = g.node_count();
    if (n == 0) throw DomainError("Monte Carlo estimate needs at least one node");
    if (runs == 0) throw DomainError("Monte Carlo estimate needs at least one run");

    // Removal order is perm[0], perm[1], ...; the residual after j removals is
    // perm[j..n). Re-inserting from the back reveals every residual in turn.
    auto make_runner = [&g, n, seed] {
        return [&g, n, seed, uf = UnionFind(n), present = std::vector<char>(n), perm = std::vector<NodeId>(n)](
                   std::uint64_t run, std::vector<std::uint64_t>& counts) mutable {
            Rng rng(stream_seed(seed, run));
            std::iota(perm.begin(), perm.end(), NodeId{0});
            shuffle(perm.begin(), perm.end(), rng);
            uf.reset();
            std::fill(present.begin(), present.end(), 0);
            ++counts[n];  // empty residual
            for (std::size_t j = n; j-- > 0;) {
                const NodeId u = perm[j];
                present[u] = 1;
                uf.activate();
                for (NodeId v : g.neighbors(u)) {
                    if (present[v]) uf.unite(u, v);
                }
                if (uf.components() != 1) ++counts[j];
            }
        };
    };

    CutFractionEstimate est;
    est.kind = EstimateKind::node;
    est.node_count = n;
    est.order = n;
    est.runs = runs;
    est.seed = seed;
    est.disconnected = accumulate_runs(n, runs, resolve_workers(options.workers, runs), make_runner);
    return est;
}

CutFractionEstimate estimate_link_cut_fractions(const Graph& g, std::uint64_t runs, RngSeed seed,
                                                McOptions options) {
    const std::size_t n = g.node_count();
    const auto links = g.links();
    const std::size_t l = links.size();
    if (n == 0) throw DomainError("Monte Carlo estimate needs at least one node");
    if (runs == 0) throw DomainError("Monte Carlo estimate needs at least one run");

    auto make_runner = [&links, n, l, seed] {
        return [&links, n, l, seed, uf = UnionFind(n), perm = std::vector<std::size_t>(l)](
                   std::uint64_t run, std::vector<std::uint64_t>& counts) mutable {
            Rng rng(stream_seed(seed, run));
            std::iota(perm.begin(), perm.end(), std::size_t{0});
            shuffle(perm.begin(), perm.end(), rng);
            uf.reset();
            for (std::size_t i = 0; i < n; ++i) uf.activate();
            if (uf.components() != 1) ++counts[l];
            for (std::size_t j = l; j-- > 0;) {
                const auto& [u, v] = links[perm[j]];
                uf.unite(u, v);
                if (uf.components() != 1) ++counts[j];
            }
        };
    };

    CutFractionEstimate est;
    est.kind = EstimateKind::link;
    est.node_count = n;
    est.order = l;
    est.runs = runs;
    est.seed = seed;
    est.disconnected = accumulate_runs(l, runs, resolve_workers(options.workers, runs), make_runner);
    return est;
}

double reliability_from_cut_fractions(std::span<const double> cut_fractions, double p) {
    require_probability(p);
    // Same polynomial as 1 - sum C(n,j) c_j p^(n-j) (1-p)^j, but summed over the
    // connected complements so tiny reliabilities keep their relative precision.
    std::vector<double> connected(cut_fractions.size());
    for (std::size_t j = 0; j < connected.size(); ++j) connected[j] = 1.0 - cut_fractions[j];
    return clamp_unit(binomial_mixture(connected, 1.0 - p));
}

Curve mc_node_reliability_curve(const CutFractionEstimate& est, std::span<const double> grid) {
    if (est.kind != EstimateKind::node) throw DomainError("node curve needs a node-kind estimate");
    const auto c = est.fractions();
    CurveMetadata meta{.method = "mc", .graph = {}, .kind = "node", .seed = est.seed.value, .runs = est.runs};
    return sample_curve(grid, [&](double p) { return reliability_from_cut_fractions(c, p); }, meta);
}

Curve mc_link_reliability_curve(const CutFractionEstimate& est, std::span<const double> grid) {
    if (est.kind != EstimateKind::link) throw DomainError("link curve needs a link-kind estimate");
    const auto c = est.fractions();
    CurveMetadata meta{.method = "mc", .graph = {}, .kind = "link", .seed = est.seed.value, .runs = est.runs};
    return sample_curve(grid, [&](double p) { return reliability_from_cut_fractions(c, p); }, meta);
}

Curve estimate_link_reliability_curve(const Graph& g, std::uint64_t runs, RngSeed seed,
                                      std::span<const double> grid, McOptions options) {
    if (g.link_count() == 0) throw DomainError("link reliability needs at least one link");
    return mc_link_reliability_curve(estimate_link_cut_fractions(g, runs, seed, options), grid);
}

double laplace_from_connected(std::span<const double> s, double p) {
    require_probability(p);
    if (s.empty()) throw DomainError("no fractions");
    const auto n = static_cast<double>(s.size() - 1);
    return clamp_unit(interpolate(s, n * p));
}

double laplace_from_cuts(std::span<const double> c, double p) {
    require_probability(p);
    if (c.empty()) throw DomainError("no fractions");
    const auto n = static_cast<double>(c.size() - 1);
    return clamp_unit(1.0 - interpolate(c, n * (1.0 - p)));
}

double laplace_point(const CutFractionEstimate& est, double p, LaplaceForm form) {
    const auto c = est.fractions();
    if (form == LaplaceForm::c_form) return laplace_from_cuts(c, p);
    std::vector<double> s(c.size());
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = 1.0 - c[c.size() - 1 - k];
    return laplace_from_connected(s, p);
}

double laplace_point(const exact::ReliabilityCoefficients& coeffs, double p, LaplaceForm form) {
    if (coeffs.kind != exact::CoefficientKind::node) throw DomainError("Laplace point needs node coefficients");
    return form == LaplaceForm::s_form ? laplace_from_connected(coeffs.connected_fractions(), p)
                                       : laplace_from_cuts(coeffs.cut_fractions(), p);
}

}  // namespace relpoly::mc
