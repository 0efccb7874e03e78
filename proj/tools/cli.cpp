#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "relpoly/approx.hpp"
#include "relpoly/curve.hpp"
#include "relpoly/cutset.hpp"
#include "relpoly/degree.hpp"
#include "relpoly/diagnostics.hpp"
#include "relpoly/edge_list.hpp"
#include "relpoly/errors.hpp"
#include "relpoly/exact.hpp"
#include "relpoly/generators.hpp"
#include "relpoly/json_io.hpp"
#include "relpoly/kgrip.hpp"
#include "relpoly/montecarlo.hpp"

namespace relpoly::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Option groups shared by subcommands.

struct GraphOptions {
    std::string input;
    std::string gen;
    std::string family;
    std::size_t n = 0;
    std::optional<std::uint64_t> graph_seed;
};

struct CommonOptions {
    std::uint64_t seed = 1;
    std::size_t grid = 101;
    std::string p_list;
    std::string out = "-";
    std::string format = "csv";
};

struct LoadedGraph {
    Graph graph;
    std::string label;
    std::optional<exact::GraphFamily> family;
};

void add_graph_options(CLI::App* cmd, GraphOptions& g) {
    cmd->add_option("--input", g.input, "Edge-list file (\"u v\" per line)");
    cmd->add_option("--gen", g.gen, "Generator: er:N,p_l | rgg:N,r | ba:N,m | lattice:d1xd2[xd3]");
    cmd->add_option("--family", g.family, "complete | complete-pendant | cycle | path | star | star-pendant");
    cmd->add_option("--n", g.n, "Node count for --family");
    cmd->add_option("--graph-seed", g.graph_seed, "Generator seed (defaults to --seed)");
}

void add_seed(CLI::App* cmd, CommonOptions& c) { cmd->add_option("--seed", c.seed, "RNG seed")->capture_default_str(); }

void add_grid(CLI::App* cmd, CommonOptions& c) {
    cmd->add_option("--grid", c.grid, "Number of equispaced grid points on [0,1]")->capture_default_str();
    cmd->add_option("--p", c.p_list, "Explicit comma-separated probabilities (overrides --grid)");
}

void add_output(CLI::App* cmd, CommonOptions& c, bool with_format = true) {
    cmd->add_option("--out", c.out, "Output path, '-' for stdout")->capture_default_str();
    if (with_format) {
        cmd->add_option("--format", c.format, "csv | json")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
    }
}

// ---------------------------------------------------------------------------
// Parsing helpers.

double parse_double(std::string_view text, std::string_view what) {
    std::string s(text);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &used);
    } catch (const std::logic_error&) {
        throw UsageError("invalid " + std::string(what) + " '" + s + "'");
    }
    if (used != s.size()) throw UsageError("invalid " + std::string(what) + " '" + s + "'");
    return value;
}

std::size_t parse_size(std::string_view text, std::string_view what) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::vector<double> parse_list(std::string_view text, std::string_view what) {
    std::vector<double> out;
    for (auto part : split(text, ',')) out.push_back(parse_double(part, what));
    return out;
}

std::vector<double> resolve_grid(const CommonOptions& c) {
    auto grid = c.p_list.empty() ? uniform_grid(c.grid) : parse_list(c.p_list, "probability");
    validate_grid(grid);
    return grid;
}

Graph generate_from_spec(std::string_view spec, RngSeed seed) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw UsageError("generator spec needs 'kind:params'");
    const auto kind = spec.substr(0, colon);
    const auto params = spec.substr(colon + 1);
    if (kind == "lattice") {
        std::vector<std::size_t> dims;
        for (auto d : split(params, 'x')) dims.push_back(parse_size(d, "lattice dimension"));
        return generate_lattice(dims);
    }
    const auto parts = split(params, ',');
    if (parts.size() != 2) throw UsageError("generator '" + std::string(kind) + "' takes two parameters");
    const auto n = parse_size(parts[0], "node count");
    if (kind == "er") return generate_er(n, parse_double(parts[1], "link probability"), seed);
    if (kind == "rgg") return generate_rgg(n, parse_double(parts[1], "radius"), seed);
    if (kind == "ba") return generate_ba(n, parse_size(parts[1], "links per node"), seed);
    throw UsageError("unknown generator '" + std::string(kind) + "'");
}

LoadedGraph load_graph(const GraphOptions& g, const CommonOptions& c) {
    const int sources = !g.input.empty() + !g.gen.empty() + !g.family.empty();
    if (sources != 1) throw UsageError("give exactly one of --input, --gen, --family");
    if (!g.input.empty()) return {load_edge_list_file(g.input), g.input, std::nullopt};
    const RngSeed seed{g.graph_seed.value_or(c.seed)};
    if (!g.gen.empty()) return {generate_from_spec(g.gen, seed), g.gen, std::nullopt};
    if (g.n == 0) throw UsageError("--family needs --n");
    exact::GraphFamily fam{exact::parse_family(g.family), g.n};
    return {exact::family_graph(fam), std::string(exact::family_name(fam.family)) + ":" + std::to_string(g.n), fam};
}

// ---------------------------------------------------------------------------
// Output.

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : path_(path), stream_(&fallback) {
        if (path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_) throw Error("cannot open output '" + path + "'");
            stream_ = &file_;
        }
    }

    std::ostream& stream() { return *stream_; }
    bool to_file() const { return path_ != "-"; }
    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ofstream file_;
    std::ostream* stream_;
};

void emit_curve(const Curve& curve, const CommonOptions& c, std::ostream& out) {
    Output sink(c.out, out);
    if (c.format == "json") {
        json j;
        j["meta"] = json::parse(curve_metadata_json(curve.meta));
        j["p"] = curve.p;
        j["value"] = curve.value;
        sink.stream() << j.dump(2) << '\n';
        return;
    }
    write_curve_csv(curve, sink.stream());
    if (sink.to_file()) {
        std::ofstream sidecar(sink.path() + ".json", std::ios::binary);
        if (!sidecar) throw Error("cannot write metadata sidecar for '" + sink.path() + "'");
        sidecar << curve_metadata_json(curve.meta);
    }
}

void emit_json(const json& j, const CommonOptions& c, std::ostream& out) {
    Output sink(c.out, out);
    sink.stream() << j.dump(2) << '\n';
}

void warn_if_disconnected(const Graph& g) {
    if (!is_connected(g)) warn("input graph is disconnected; degree-based approximations assume a connectable graph");
}

// ---------------------------------------------------------------------------
// Subcommands.

struct ExactCmd {
    GraphOptions graph;
    CommonOptions common;
    std::string kind = "node";
    std::string form = "s";
    std::size_t cap = 24;

    void run(std::ostream& out) const {
        const auto loaded = load_graph(graph, common);
        const exact::EnumerationOptions opts{.cap = cap, .workers = 0};
        const bool node = kind == "node";
        const auto coeffs = node ? exact::enumerate_node_coefficients(loaded.graph, opts)
                                 : exact::enumerate_link_coefficients(loaded.graph, opts);
        if (common.format == "json") {
            emit_json(coefficients_to_json(coeffs), common, out);
            return;
        }
        const auto grid = resolve_grid(common);
        CurveMetadata meta{.method = node ? "exact-" + form + "-form" : "exact", .graph = loaded.label, .kind = kind,
                           .seed = std::nullopt, .runs = std::nullopt};
        Curve curve;
        if (!node) {
            const auto f = coeffs.connected_fractions();
            curve = sample_curve(grid, [&](double p) { return clamp_unit(binomial_mixture(f, 1.0 - p)); }, meta);
        } else if (form == "s") {
            const auto s = coeffs.connected_fractions();
            curve = sample_curve(grid, [&](double p) { return clamp_unit(binomial_mixture(s, p)); }, meta);
        } else {
            const auto c = coeffs.cut_fractions();
            curve = sample_curve(grid, [&](double p) { return mc::reliability_from_cut_fractions(c, p); }, meta);
        }
        emit_curve(curve, common, out);
    }
};

struct ClosedFormCmd {
    std::string family;
    std::size_t n = 0;
    CommonOptions common;

    void run(std::ostream& out) const {
        const exact::GraphFamily fam{exact::parse_family(family), n};
        const auto grid = resolve_grid(common);
        CurveMetadata meta{.method = "closed-form",
                           .graph = std::string(exact::family_name(fam.family)) + ":" + std::to_string(n),
                           .kind = "node", .seed = std::nullopt, .runs = std::nullopt};
        emit_curve(sample_curve(grid, [&](double p) { return exact::closed_form_eval(fam, p); }, meta), common, out);
    }
};

struct McCmd {
    GraphOptions graph;
    CommonOptions common;
    std::uint64_t runs = mc::kDefaultRuns;
    std::string kind = "node";

    void run(std::ostream& out) const {
        const auto loaded = load_graph(graph, common);
        const auto grid = resolve_grid(common);
        const RngSeed seed{common.seed};
        Curve curve;
        if (kind == "node") {
            curve = mc::mc_node_reliability_curve(mc::estimate_node_cut_fractions(loaded.graph, runs, seed), grid);
        } else {
            curve = mc::estimate_link_reliability_curve(loaded.graph, runs, seed, grid);
        }
        curve.meta.graph = loaded.label;
        emit_curve(curve, common, out);
    }
};

struct LaplaceCmd {
    GraphOptions graph;
    CommonOptions common;
    std::string source = "mc";
    std::string form = "c";
    std::uint64_t runs = mc::kDefaultRuns;
    std::size_t cap = 24;

    void run(std::ostream& out) const {
        const auto loaded = load_graph(graph, common);
        const auto grid = resolve_grid(common);
        std::vector<double> s;
        std::vector<double> c;
        CurveMetadata meta{.method = "laplace-" + source + "-" + form + "-form", .graph = loaded.label,
                           .kind = "node", .seed = std::nullopt, .runs = std::nullopt};
        if (source == "exact") {
            const auto coeffs = loaded.family ? exact::family_node_coefficients(*loaded.family)
                                              : exact::enumerate_node_coefficients(loaded.graph, {.cap = cap});
            s = coeffs.connected_fractions();
            c = coeffs.cut_fractions();
        } else {
            const auto est = mc::estimate_node_cut_fractions(loaded.graph, runs, RngSeed{common.seed});
            c = est.fractions();
            s.resize(c.size());
            for (std::size_t k = 0; k < s.size(); ++k) s[k] = 1.0 - c[c.size() - 1 - k];
            meta.seed = common.seed;
            meta.runs = runs;
        }
        const bool s_form = form == "s";
        auto curve = sample_curve(grid, [&](double p) {
            return s_form ? mc::laplace_from_connected(s, p) : mc::laplace_from_cuts(c, p);
        }, meta);
        emit_curve(curve, common, out);
    }
};

struct ApproxCmd {
    GraphOptions graph;
    CommonOptions common;
    std::string method = "stochastic";
    std::string bound = "geometric";
    double link_probability = -1.0;
    double radius = -1.0;
    std::string intersect;
    std::string width;

    void run(std::ostream& out) const {
        if (method == "er") return run_er(out);
        if (method == "rgg") return run_rgg(out);
        const auto loaded = load_graph(graph, common);
        warn_if_disconnected(loaded.graph);
        const DegreeDistribution dist(loaded.graph);
        const auto grid = resolve_grid(common);
        CurveMetadata meta{.method = method, .graph = loaded.label, .kind = "node", .seed = std::nullopt,
                           .runs = std::nullopt};
        std::function<double(double)> fn;
        if (method == "stochastic") {
            fn = [&](double p) { return approx::stochastic_node_reliability(dist, p); };
        } else if (method == "stochastic-link") {
            meta.kind = "link";
            fn = [&](double p) { return approx::stochastic_link_reliability(dist, p); };
        } else if (method == "bounds") {
            meta.method = "bound-" + bound;
            if (bound == "arithmetic") {
                fn = [&](double p) { return approx::arithmetic_upper_bound(dist, p); };
            } else {
                fn = [&](double p) { return approx::geometric_upper_bound(dist, p); };
            }
        }
        emit_curve(sample_curve(grid, fn, meta), common, out);
    }

    approx::ErModel er_model() const {
        if (graph.n == 0 || link_probability < 0.0) throw UsageError("--method er needs --n and --pl");
        return {graph.n, link_probability};
    }

    void run_er(std::ostream& out) const {
        const auto model = er_model();
        if (!intersect.empty()) {
            const auto parts = split(intersect, ',');
            if (parts.size() != 2) throw UsageError("--intersect takes N2,pl2");
            const approx::ErModel other{parse_size(parts[0], "node count"), parse_double(parts[1], "link probability")};
            const auto hit = approx::er_intersection(model, other);
            json j;
            j["p"] = hit.p;
            j["value"] = hit.value;
            j["second_value"] = hit.second_value;
            j["inside_unit_interval"] = hit.inside_unit_interval;
            j["note"] = hit.note;
            emit_json(j, common, out);
            return;
        }
        if (!width.empty()) {
            const auto levels = parse_list(width, "reliability level");
            if (levels.size() != 2) throw UsageError("--width takes lo,hi");
            json j;
            j["lo"] = levels[0];
            j["hi"] = levels[1];
            j["mean_degree"] = model.mean_degree();
            j["width"] = approx::er_transition_width(model, levels[0], levels[1]);
            emit_json(j, common, out);
            return;
        }
        const auto grid = resolve_grid(common);
        CurveMetadata meta{.method = "er", .graph = "er:" + std::to_string(model.node_count) + "," +
                                                        std::to_string(model.link_probability),
                           .kind = "node", .seed = std::nullopt, .runs = std::nullopt};
        emit_curve(sample_curve(grid, [&](double p) { return approx::er_node_reliability(model, p); }, meta), common,
                   out);
    }

    void run_rgg(std::ostream& out) const {
        if (graph.n == 0 || radius < 0.0) throw UsageError("--method rgg needs --n and --r");
        const approx::RggModel model{graph.n, radius};
        auto grid = resolve_grid(common);
        // The formula needs Np >= 1; points below that are dropped.
        std::vector<double> valid;
        for (double p : grid) {
            if (static_cast<double>(model.node_count) * p >= 1.0) valid.push_back(p);
        }
        if (valid.size() != grid.size()) {
            warn("dropped " + std::to_string(grid.size() - valid.size()) + " grid points with N p < 1");
        }
        if (valid.empty()) throw DomainError("no grid point satisfies N p >= 1");
        CurveMetadata meta{.method = "rgg", .graph = "rgg:" + std::to_string(model.node_count) + "," +
                                                         std::to_string(model.radius),
                           .kind = "node", .seed = std::nullopt, .runs = std::nullopt};
        emit_curve(sample_curve(valid, [&](double p) { return approx::rgg_node_reliability(model, p); }, meta),
                   common, out);
    }
};

struct CutsetsCmd {
    GraphOptions graph;
    CommonOptions common;
    std::string source = "exact";
    std::string kind = "node";
    std::string probes;
    bool no_round = false;
    std::size_t cap = cutset::kDefaultCap;
    std::uint64_t runs = mc::kDefaultRuns;

    void run(std::ostream& out) const {
        const auto loaded = load_graph(graph, common);
        const bool node = kind == "node";
        const std::size_t order = node ? loaded.graph.node_count() : loaded.graph.link_count();
        if (order > cap) {
            throw CapacityError("order " + std::to_string(order) + " exceeds the cut-set cap of " + std::to_string(cap));
        }
        std::optional<std::vector<double>> probe_list;
        if (!probes.empty()) probe_list = parse_list(probes, "probe");

        cutset::ProbeSystem sys;
        if (source == "exact") {
            const auto coeffs = node ? exact::enumerate_node_coefficients(loaded.graph)
                                     : exact::enumerate_link_coefficients(loaded.graph);
            sys = cutset::build_probe_system_precise(
                order, [&](const PreciseReal& p) { return exact::eval_precise(coeffs, p); }, probe_list);
        } else if (source == "mc") {
            const RngSeed seed{common.seed};
            const auto est = node ? mc::estimate_node_cut_fractions(loaded.graph, runs, seed)
                                  : mc::estimate_link_cut_fractions(loaded.graph, runs, seed);
            const auto c = est.fractions();
            sys = cutset::build_probe_system(
                order, [&](double p) { return mc::reliability_from_cut_fractions(c, p); }, probe_list);
        } else {
            warn_if_disconnected(loaded.graph);
            const DegreeDistribution dist(loaded.graph);
            sys = cutset::build_probe_system(
                order,
                [&](double p) {
                    return node ? approx::stochastic_node_reliability(dist, p)
                                : approx::stochastic_link_reliability(dist, p);
                },
                probe_list);
        }
        const auto result = cutset::recover_cut_counts(sys, {.round = !no_round, .cap = cap, .node_variant = node});
        for (const auto& w : result.warnings) warn(w);
        auto j = recovery_to_json(result);
        j["kind"] = kind;
        j["source"] = source;
        j["graph"] = loaded.label;
        emit_json(j, common, out);
    }
};

struct KgripCmd {
    GraphOptions graph;
    CommonOptions common;
    std::size_t k = 0;
    std::string strategy = "lowest";
    std::string save_graph;

    void run(std::ostream& out) const {
        const auto loaded = load_graph(graph, common);
        const auto strat = kgrip::parse_strategy(strategy);
        const auto result = kgrip::augment(loaded.graph, k, strat, RngSeed{common.seed});
        const auto points = common.p_list.empty() ? std::vector<double>{0.5} : parse_list(common.p_list, "probability");
        json j = plan_to_json(result.plan);
        j["graph"] = loaded.label;
        auto objective = json::array();
        for (double p : points) {
            json row;
            row["p"] = p;
            row["before"] = kgrip::objective(loaded.graph, p);
            row["after"] = kgrip::objective(result.graph, p);
            objective.push_back(row);
        }
        j["objective"] = objective;
        if (!save_graph.empty()) {
            std::ofstream f(save_graph, std::ios::binary);
            if (!f) throw Error("cannot write '" + save_graph + "'");
            save_edge_list(result.graph, f);
        }
        emit_json(j, common, out);
    }
};

struct GenerateCmd {
    GraphOptions graph;
    CommonOptions common;

    void run(std::ostream& out) const {
        const auto loaded = load_graph(graph, common);
        Output sink(common.out, out);
        save_edge_list(loaded.graph, sink.stream());
    }
};

struct CompareCmd {
    std::vector<std::string> files;
    std::string power;
    int power_index = -1;
    CommonOptions common;

    void run(std::ostream& out) const {
        if (files.size() < 2) throw UsageError("compare needs at least two curve files");
        std::vector<Curve> curves;
        for (const auto& path : files) {
            std::ifstream in(path);
            if (!in) throw Error("cannot open curve '" + path + "'");
            curves.push_back(read_curve_csv(in));
        }
        if (!power.empty()) {
            const auto idx = power_index < 0 ? curves.size() - 1 : static_cast<std::size_t>(power_index);
            if (idx >= curves.size()) throw UsageError("--power-index out of range");
            const bool grid_exponent = power == "p";
            const double fixed = grid_exponent ? 0.0 : parse_double(power, "exponent");
            auto& c = curves[idx];
            for (std::size_t i = 0; i < c.size(); ++i) {
                c.value[i] = std::pow(c.value[i], grid_exponent ? c.p[i] : fixed);
            }
        }
        for (std::size_t i = 1; i < curves.size(); ++i) require_same_grid(curves[0], curves[i]);

        Output sink(common.out, out);
        if (common.format == "json") {
            auto rows = json::array();
            for (std::size_t a = 0; a < curves.size(); ++a) {
                for (std::size_t b = a + 1; b < curves.size(); ++b) {
                    json row;
                    row["a"] = files[a];
                    row["b"] = files[b];
                    row["sup_gap"] = sup_gap(curves[a], curves[b]);
                    row["mean_abs_gap"] = mean_abs_gap(curves[a], curves[b]);
                    rows.push_back(row);
                }
            }
            sink.stream() << rows.dump(2) << '\n';
            return;
        }
        sink.stream() << "a,b,sup_gap,mean_abs_gap\n";
        char buf[128];
        for (std::size_t a = 0; a < curves.size(); ++a) {
            for (std::size_t b = a + 1; b < curves.size(); ++b) {
                std::snprintf(buf, sizeof buf, "%.17g,%.17g", sup_gap(curves[a], curves[b]),
                              mean_abs_gap(curves[a], curves[b]));
                sink.stream() << files[a] << ',' << files[b] << ',' << buf << '\n';
            }
        }
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Node and link reliability polynomials: exact, Monte Carlo, approximations, cut sets, k-GRIP"};
    app.name("relpoly");
    app.require_subcommand(1);

    ExactCmd exact_cmd;
    auto* exact_app = app.add_subcommand("exact", "Brute-force coefficients and exact curve");
    add_graph_options(exact_app, exact_cmd.graph);
    add_seed(exact_app, exact_cmd.common);
    add_grid(exact_app, exact_cmd.common);
    add_output(exact_app, exact_cmd.common);
    exact_app->add_option("--kind", exact_cmd.kind, "node | link")->check(CLI::IsMember({"node", "link"}));
    exact_app->add_option("--form", exact_cmd.form, "s | c (node kind)")->check(CLI::IsMember({"s", "c"}));
    exact_app->add_option("--cap", exact_cmd.cap, "Enumeration cap on N (node) or L (link)")->capture_default_str();

    ClosedFormCmd closed_cmd;
    auto* closed_app = app.add_subcommand("closed-form", "Closed-form polynomial of a graph family");
    closed_app->add_option("--family", closed_cmd.family, "Graph family")->required();
    closed_app->add_option("--n", closed_cmd.n, "Node count")->required();
    add_grid(closed_app, closed_cmd.common);
    add_output(closed_app, closed_cmd.common);

    McCmd mc_cmd;
    auto* mc_app = app.add_subcommand("mc", "Monte Carlo reliability curve");
    add_graph_options(mc_app, mc_cmd.graph);
    add_seed(mc_app, mc_cmd.common);
    add_grid(mc_app, mc_cmd.common);
    add_output(mc_app, mc_cmd.common);
    mc_app->add_option("--runs", mc_cmd.runs, "Number of permutations M")->check(CLI::PositiveNumber)->capture_default_str();
    mc_app->add_option("--kind", mc_cmd.kind, "node | link")->check(CLI::IsMember({"node", "link"}));

    LaplaceCmd laplace_cmd;
    auto* laplace_app = app.add_subcommand("laplace", "Laplace point-estimator curve");
    add_graph_options(laplace_app, laplace_cmd.graph);
    add_seed(laplace_app, laplace_cmd.common);
    add_grid(laplace_app, laplace_cmd.common);
    add_output(laplace_app, laplace_cmd.common);
    laplace_app->add_option("--source", laplace_cmd.source, "exact | mc")->check(CLI::IsMember({"exact", "mc"}));
    laplace_app->add_option("--form", laplace_cmd.form, "s | c")->check(CLI::IsMember({"s", "c"}));
    laplace_app->add_option("--runs", laplace_cmd.runs, "Monte Carlo runs")->check(CLI::PositiveNumber);
    laplace_app->add_option("--cap", laplace_cmd.cap, "Enumeration cap for --source exact");

    ApproxCmd approx_cmd;
    auto* approx_app = app.add_subcommand("approx", "Degree-based approximations and ensemble formulas");
    add_graph_options(approx_app, approx_cmd.graph);
    add_seed(approx_app, approx_cmd.common);
    add_grid(approx_app, approx_cmd.common);
    add_output(approx_app, approx_cmd.common);
    approx_app->add_option("--method", approx_cmd.method, "stochastic | stochastic-link | bounds | er | rgg")
        ->check(CLI::IsMember({"stochastic", "stochastic-link", "bounds", "er", "rgg"}));
    approx_app->add_option("--bound", approx_cmd.bound, "arithmetic | geometric")
        ->check(CLI::IsMember({"arithmetic", "geometric"}));
    approx_app->add_option("--pl", approx_cmd.link_probability, "ER link probability");
    approx_app->add_option("--r", approx_cmd.radius, "RGG connection radius");
    approx_app->add_option("--intersect", approx_cmd.intersect, "ER: second model N2,pl2; prints the intersection");
    approx_app->add_option("--width", approx_cmd.width, "ER: levels lo,hi; prints the transition width");

    CutsetsCmd cut_cmd;
    auto* cut_app = app.add_subcommand("cutsets", "Recover cut-set counts from a reliability curve");
    add_graph_options(cut_app, cut_cmd.graph);
    add_seed(cut_app, cut_cmd.common);
    add_output(cut_app, cut_cmd.common, false);
    cut_app->add_option("--source", cut_cmd.source, "exact | mc | stochastic")
        ->check(CLI::IsMember({"exact", "mc", "stochastic"}));
    cut_app->add_option("--kind", cut_cmd.kind, "node | link")->check(CLI::IsMember({"node", "link"}));
    cut_app->add_option("--probes", cut_cmd.probes, "Comma-separated probes in (0,1), order+1 of them");
    cut_app->add_flag("--no-round", cut_cmd.no_round, "Report the unrounded solution");
    cut_app->add_option("--cap", cut_cmd.cap, "Largest order accepted")->capture_default_str();
    cut_app->add_option("--runs", cut_cmd.runs, "Monte Carlo runs for --source mc")->check(CLI::PositiveNumber);

    KgripCmd kgrip_cmd;
    auto* kgrip_app = app.add_subcommand("kgrip", "Add k links to raise the degree-based reliability objective");
    add_graph_options(kgrip_app, kgrip_cmd.graph);
    add_seed(kgrip_app, kgrip_cmd.common);
    add_output(kgrip_app, kgrip_cmd.common, false);
    kgrip_app->add_option("--k", kgrip_cmd.k, "Number of links to add")->required();
    kgrip_app->add_option("--strategy", kgrip_cmd.strategy, "lowest | highest | random")
        ->check(CLI::IsMember({"lowest", "highest", "random"}));
    kgrip_app->add_option("--p", kgrip_cmd.common.p_list, "Comma-separated p for objective reporting (default 0.5)");
    kgrip_app->add_option("--save-graph", kgrip_cmd.save_graph, "Write the augmented edge list here");

    GenerateCmd gen_cmd;
    auto* gen_app = app.add_subcommand("generate", "Write a generated or family graph as an edge list");
    add_graph_options(gen_app, gen_cmd.graph);
    add_seed(gen_app, gen_cmd.common);
    add_output(gen_app, gen_cmd.common, false);

    CompareCmd cmp_cmd;
    auto* cmp_app = app.add_subcommand("compare", "Pairwise sup and mean absolute gaps between curves");
    cmp_app->add_option("files", cmp_cmd.files, "Curve CSV files")->required();
    cmp_app->add_option("--power", cmp_cmd.power, "Raise one curve to a power first: 'p' (grid value) or a number");
    cmp_app->add_option("--power-index", cmp_cmd.power_index, "0-based curve to transform (default: last)");
    add_output(cmp_app, cmp_cmd.common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "relpoly: " << e.what() << '\n';
        return kExitUsage;
    }

    auto previous = set_warning_handler([&err](std::string_view msg) { err << "relpoly: warning: " << msg << '\n'; });
    int code = kExitOk;
    try {
        if (*exact_app) exact_cmd.run(out);
        else if (*closed_app) closed_cmd.run(out);
        else if (*mc_app) mc_cmd.run(out);
        else if (*laplace_app) laplace_cmd.run(out);
        else if (*approx_app) approx_cmd.run(out);
        else if (*cut_app) cut_cmd.run(out);
        else if (*kgrip_app) kgrip_cmd.run(out);
        else if (*gen_app) gen_cmd.run(out);
        else if (*cmp_app) cmp_cmd.run(out);
    } catch (const UsageError& e) {
        err << "relpoly: " << e.what() << '\n';
        code = kExitUsage;
    } catch (const std::exception& e) {
        err << "relpoly: error: " << e.what() << '\n';
        code = kExitComputation;
    }
    set_warning_handler(std::move(previous));
    return code;
}

}  // namespace relpoly::cli
