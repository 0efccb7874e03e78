#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace relpoly {

struct CurveMetadata {
    std::string method;
    std::string graph;
    /// "node" or "link".
    std::string kind = "node";
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> runs;

    friend bool operator==(const CurveMetadata&, const CurveMetadata&) = default;
};

/// A function of p sampled on a probability grid.
struct Curve {
    std::vector<double> p;
    std::vector<double> value;
    CurveMetadata meta;

    std::size_t size() const noexcept { return p.size(); }
};

/// `points` equispaced values from 0 to 1 inclusive (points >= 2).
std::vector<double> uniform_grid(std::size_t points);

/// Throws DomainError unless the grid is strictly increasing inside [0, 1].
void validate_grid(std::span<const double> grid);

Curve sample_curve(std::span<const double> grid, const std::function<double(double)>& fn, CurveMetadata meta = {});

/// Throws DomainError when the grids differ.
void require_same_grid(const Curve& a, const Curve& b);

double sup_gap(const Curve& a, const Curve& b);
double mean_abs_gap(const Curve& a, const Curve& b);

/// "p,value" header and one row per point, 17 significant digits.
void write_curve_csv(const Curve& c, std::ostream& out);
Curve read_curve_csv(std::istream& in);

/// JSON sidecar with method, seed, runs, graph and kind.
std::string curve_metadata_json(const CurveMetadata& meta);

}  // namespace relpoly
