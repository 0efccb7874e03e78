#include "relpoly/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "relpoly/errors.hpp"

namespace relpoly {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::string_view next_token(std::string_view& rest) {
    while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
    std::size_t len = 0;
    while (len < rest.size() && !is_space(rest[len])) ++len;
    auto token = rest.substr(0, len);
    rest.remove_prefix(len);
    return token;
}

NodeId parse_id(std::string_view token, std::size_t line) {
    NodeId value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end) {
        throw FormatError("expected a nonnegative integer node id, got '" + std::string(token) + "'",
                          line);
    }
    return value;
}

// "# nodes N"
std::size_t parse_node_directive(std::string_view comment) {
    comment.remove_prefix(1);
    auto key = next_token(comment);
    if (key != "nodes") return 0;
    auto value = next_token(comment);
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
    if (ec != std::errc{} || ptr != value.data() + value.size() || !trim(comment).empty()) return 0;
    return n;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
    std::vector<Link> links;
    std::size_t node_count = 0;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            node_count = std::max(node_count, parse_node_directive(line));
            continue;
        }
        auto rest = line;
        const NodeId u = parse_id(next_token(rest), line_no);
        const auto second = next_token(rest);
        if (second.empty()) throw FormatError("expected two node ids", line_no);
        const NodeId v = parse_id(second, line_no);
        if (!trim(rest).empty()) throw FormatError("trailing tokens after link", line_no);
        if (u == v) throw FormatError("self-loop " + std::to_string(u) + " " + std::to_string(v), line_no);
        links.emplace_back(u, v);
        node_count = std::max<std::size_t>(node_count, std::max(u, v) + std::size_t{1});
    }
    return Graph(node_count, links);
}

Graph load_edge_list_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return load_edge_list(in);
}

Graph load_edge_list_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open edge list '" + path.string() + "'");
    return load_edge_list(in);
}

void save_edge_list(const Graph& g, std::ostream& out) {
    const auto links = g.links();
    std::size_t implied = 0;
    for (const auto& [u, v] : links) implied = std::max<std::size_t>(implied, v + std::size_t{1});
    if (implied != g.node_count()) out << "# nodes " << g.node_count() << '\n';
    for (const auto& [u, v] : links) out << u << ' ' << v << '\n';
}

std::string save_edge_list_string(const Graph& g) {
    std::ostringstream out;
    save_edge_list(g, out);
    return out.str();
}

}  // namespace relpoly
