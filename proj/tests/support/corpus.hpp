#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "relpoly/exact.hpp"
#include "relpoly/generators.hpp"
#include "relpoly/graph.hpp"

namespace relpoly::testing {

struct CorpusGraph {
    std::string name;
    Graph graph;
};

// ER graphs cycling through sizes [min_n, max_n] and four densities.
inline std::vector<CorpusGraph> random_corpus(std::size_t count, std::size_t min_n, std::size_t max_n,
                                              std::uint64_t seed) {
    constexpr std::array<double, 4> densities{0.2, 0.35, 0.5, 0.75};
    const std::size_t span = max_n - min_n + 1;
    std::vector<CorpusGraph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = min_n + i % span;
        const double pl = densities[(i / span) % densities.size()];
        out.push_back({"er" + std::to_string(n) + "_" + std::to_string(i),
                       generate_er(n, pl, RngSeed{seed + i})});
    }
    return out;
}

// Families, a few hand-built edge cases, and random graphs, all with N <= max_n.
inline std::vector<CorpusGraph> standard_corpus(std::size_t max_n) {
    std::vector<CorpusGraph> out;
    for (auto fam : {exact::Family::complete, exact::Family::complete_pendant, exact::Family::cycle,
                     exact::Family::path, exact::Family::star, exact::Family::star_pendant}) {
        for (std::size_t n = 3; n <= std::min<std::size_t>(max_n, 8); ++n) {
            out.push_back({std::string(exact::family_name(fam)) + std::to_string(n),
                           exact::family_graph({fam, n})});
        }
    }
    const std::vector<Link> two_triangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
    out.push_back({"k1", Graph::empty(1)});
    out.push_back({"k2", exact::family_graph({exact::Family::complete, 2})});
    out.push_back({"two_triangles", Graph(6, two_triangles)});
    out.push_back({"empty4", Graph::empty(4)});
    auto random = random_corpus(40, 2, max_n, 9001);
    out.insert(out.end(), std::make_move_iterator(random.begin()), std::make_move_iterator(random.end()));
    return out;
}

}  // namespace relpoly::testing
