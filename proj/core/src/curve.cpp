#include "relpoly/curve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "relpoly/errors.hpp"

namespace relpoly {

std::vector<double> uniform_grid(std::size_t points) {
    if (points < 2) throw DomainError("a grid needs at least two points");
    std::vector<double> grid(points);
    const double last = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) grid[i] = static_cast<double>(i) / last;
    return grid;
}

void validate_grid(std::span<const double> grid) {
    if (grid.empty()) throw DomainError("empty probability grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0 && grid[i] <= 1.0)) throw DomainError("grid point outside [0, 1]");
        if (i > 0 && !(grid[i] > grid[i - 1])) throw DomainError("grid must be strictly increasing");
    }
}

Curve sample_curve(std::span<const double> grid, const std::function<double(double)>& fn, CurveMetadata meta) {
    validate_grid(grid);
    Curve c;
    c.p.assign(grid.begin(), grid.end());
    c.value.reserve(grid.size());
    for (double p : grid) c.value.push_back(fn(p));
    c.meta = std::move(meta);
    return c;
}

void require_same_grid(const Curve& a, const Curve& b) {
    if (a.p != b.p) throw DomainError("curves are sampled on different grids");
}

double sup_gap(const Curve& a, const Curve& b) {
    require_same_grid(a, b);
    double gap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a.value[i] - b.value[i]));
    return gap;
}

double mean_abs_gap(const Curve& a, const Curve& b) {
    require_same_grid(a, b);
    if (a.size() == 0) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a.value[i] - b.value[i]);
    return sum / static_cast<double>(a.size());
}

void write_curve_csv(const Curve& c, std::ostream& out) {
    out << "p,value\n";
    char buf[64];
    for (std::size_t i = 0; i < c.size(); ++i) {
        int n = std::snprintf(buf, sizeof buf, "%.17g,", c.p[i]);
        out.write(buf, n);
        n = std::snprintf(buf, sizeof buf, "%.17g\n", c.value[i]);
        out.write(buf, n);
    }
}

Curve read_curve_csv(std::istream& in) {
    Curve c;
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header) {
            if (line != "p,value") throw FormatError("expected header 'p,value'", line_no);
            header = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw FormatError("expected 'p,value' row", line_no);
        try {
            std::size_t used = 0;
            const double p = std::stod(line.substr(0, comma), &used);
            if (used != comma) throw FormatError("bad probability", line_no);
            const auto rest = line.substr(comma + 1);
            const double v = std::stod(rest, &used);
            if (used != rest.size()) throw FormatError("bad value", line_no);
            c.p.push_back(p);
            c.value.push_back(v);
        } catch (const std::logic_error&) {
            throw FormatError("non-numeric field", line_no);
        }
    }
    if (!header) throw FormatError("missing 'p,value' header");
    validate_grid(c.p);
    return c;
}

std::string curve_metadata_json(const CurveMetadata& meta) {
    nlohmann::ordered_json j;
    j["method"] = meta.method;
    j["seed"] = meta.seed ? nlohmann::ordered_json(*meta.seed) : nlohmann::ordered_json(nullptr);
    j["runs"] = meta.runs ? nlohmann::ordered_json(*meta.runs) : nlohmann::ordered_json(nullptr);
    j["graph"] = meta.graph;
    j["kind"] = meta.kind;
    return j.dump(2) + "\n";
}

}  // namespace relpoly
