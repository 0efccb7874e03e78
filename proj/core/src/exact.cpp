#include "relpoly/exact.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "relpoly/errors.hpp"
#include "relpoly/parallel.hpp"
#include "relpoly/union_find.hpp"

namespace relpoly::exact {
namespace {

std::size_t resolve_workers(std::size_t requested) {
    return requested == 0 ? default_worker_count() : requested;
}

void check_cap(std::size_t size, std::size_t cap, const char* what) {
    const std::size_t effective = std::min(cap, kMaxEnumerationCap);
    if (size > effective) {
        throw CapacityError(std::string(what) + " = " + std::to_string(size) +
                            " exceeds the enumeration cap of " + std::to_string(effective));
    }
}

// Induced connectivity of a node mask, with empty = disconnected.
bool mask_connected(std::span<const std::uint64_t> adjacency, std::uint64_t mask) {
    if (mask == 0) return false;
    std::uint64_t reached = mask & (~mask + 1);
    std::uint64_t frontier = reached;
    while (frontier != 0) {
        std::uint64_t next = 0;
        while (frontier != 0) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adjacency[static_cast<std::size_t>(v)];
        }
        next &= mask & ~reached;
        reached |= next;
        frontier = next;
    }
    return reached == mask;
}

std::vector<double> fractions(const std::vector<BigInt>& counts, std::size_t order) {
    std::vector<double> out(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) out[i] = ratio_to_double(counts[i], binomial(order, i));
    return out;
}

}  // namespace

ReliabilityCoefficients ReliabilityCoefficients::from_node_counts(std::size_t node_count,
                                                                  std::vector<BigInt> s_counts) {
    if (s_counts.size() != node_count + 1) throw DomainError("expected N+1 node coefficients");
    ReliabilityCoefficients c;
    c.kind = CoefficientKind::node;
    c.node_count = node_count;
    c.order = node_count;
    c.cuts.resize(node_count + 1);
    for (std::size_t j = 0; j <= node_count; ++j) {
        c.cuts[j] = binomial(node_count, j) - s_counts[node_count - j];
        if (c.cuts[j] < 0) throw DomainError("S_k exceeds C(N,k)");
    }
    c.connected = std::move(s_counts);
    return c;
}

ReliabilityCoefficients ReliabilityCoefficients::from_link_counts(std::size_t node_count,
                                                                  std::vector<BigInt> f_counts) {
    if (f_counts.empty()) throw DomainError("expected L+1 link coefficients");
    ReliabilityCoefficients c;
    c.kind = CoefficientKind::link;
    c.node_count = node_count;
    c.order = f_counts.size() - 1;
    c.cuts.resize(f_counts.size());
    for (std::size_t j = 0; j <= c.order; ++j) {
        c.cuts[j] = binomial(c.order, j) - f_counts[j];
        if (c.cuts[j] < 0) throw DomainError("F_j exceeds C(L,j)");
    }
    c.connected = std::move(f_counts);
    return c;
}

std::vector<double> ReliabilityCoefficients::connected_fractions() const { return fractions(connected, order); }

std::vector<double> ReliabilityCoefficients::cut_fractions() const { return fractions(cuts, order); }

ReliabilityCoefficients enumerate_node_coefficients(const Graph& g, EnumerationOptions options) {
    const std::size_t n = g.node_count();
    check_cap(n, options.cap, "N");
    std::vector<std::uint64_t> adjacency(n, 0);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : g.neighbors(u)) adjacency[u] |= std::uint64_t{1} << v;
    }

    const std::uint64_t subsets = std::uint64_t{1} << n;
    const std::size_t workers = resolve_workers(options.workers);
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n + 1, 0));
    parallel_blocks(subsets, workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
        auto& counts = partial[w];
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            if (mask_connected(adjacency, mask)) ++counts[static_cast<std::size_t>(std::popcount(mask))];
        }
    });

    std::vector<BigInt> s(n + 1, 0);
    for (const auto& counts : partial) {
        for (std::size_t k = 0; k <= n; ++k) s[k] += counts[k];
    }
    return ReliabilityCoefficients::from_node_counts(n, std::move(s));
}

ReliabilityCoefficients enumerate_link_coefficients(const Graph& g, EnumerationOptions options) {
    const auto links = g.links();
    const std::size_t l = links.size();
    check_cap(l, options.cap, "L");
    const std::size_t n = g.node_count();

    const std::uint64_t subsets = std::uint64_t{1} << l;
    const std::size_t workers = resolve_workers(options.workers);
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(l + 1, 0));
    parallel_blocks(subsets, workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
        auto& counts = partial[w];
        UnionFind uf(n);
        for (std::uint64_t removed = begin; removed < end; ++removed) {
            uf.reset();
            for (std::size_t i = 0; i < n; ++i) uf.activate();
            for (std::size_t e = 0; e < l; ++e) {
                if (!(removed >> e & 1)) uf.unite(links[e].first, links[e].second);
            }
            if (uf.components() == 1) ++counts[static_cast<std::size_t>(std::popcount(removed))];
        }
    });

    std::vector<BigInt> f(l + 1, 0);
    for (const auto& counts : partial) {
        for (std::size_t j = 0; j <= l; ++j) f[j] += counts[j];
    }
    return ReliabilityCoefficients::from_link_counts(n, std::move(f));
}

double eval_node_s_form(const ReliabilityCoefficients& c, double p) {
    if (c.kind != CoefficientKind::node) throw DomainError("S-form needs node coefficients");
    require_probability(p);
    const auto s = c.connected_fractions();
    return clamp_unit(binomial_mixture(s, p));
}

double eval_node_c_form(const ReliabilityCoefficients& c, double p) {
    if (c.kind != CoefficientKind::node) throw DomainError("C-form needs node coefficients");
    require_probability(p);
    // sum_j C(N,j) c_j (1-p)^j p^(N-j) is a Bernstein mixture in 1-p.
    const auto cut = c.cut_fractions();
    return clamp_unit(1.0 - binomial_mixture(cut, 1.0 - p));
}

double eval_link_reliability(const ReliabilityCoefficients& c, double p) {
    if (c.kind != CoefficientKind::link) throw DomainError("link reliability needs link coefficients");
    require_probability(p);
    const auto f = c.connected_fractions();
    return clamp_unit(binomial_mixture(f, 1.0 - p));
}

PreciseReal eval_precise(const ReliabilityCoefficients& c, const PreciseReal& p) {
    const PreciseReal q = 1 - p;
    PreciseReal sum = 0;
    for (std::size_t i = 0; i <= c.order; ++i) {
        if (c.connected[i] == 0) continue;
        // node: S_k p^k q^(N-k); link: F_j q^j p^(L-j)
        const auto up = static_cast<long>(c.kind == CoefficientKind::node ? i : c.order - i);
        const auto down = static_cast<long>(c.order) - up;
        sum += PreciseReal(c.connected[i]) * pow(p, up) * pow(q, down);
    }
    return sum;
}

}  // namespace relpoly::exact
