#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpinv/graph.hpp"

namespace gpinv {

/// Malformed edge-list text; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::optional<int> parse_int(std::string_view tok) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
    return v;
}

} // namespace detail

/// Parses the edge-list format:
///   - lines starting with '#' are comments, blank lines are ignored
///   - an optional first data line "n <count>" fixes the order
///   - every other data line is "i j", two 1-indexed vertex numbers
/// Without the header the order is the largest vertex index seen.
/// Self-loops, duplicate edges and indices above a declared order are
/// reported with their line number.
inline Graph parse_edge_list(std::string_view text) {
    std::optional<int> declared_n;
    Graph::EdgeList edges;
    std::vector<int> edge_lines;
    int max_index = 0;
    bool saw_data = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        const auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0].front() == '#') continue;

        if (!saw_data && toks[0] == "n") {
            if (toks.size() != 2)
                throw ParseError(line_no, "header must be 'n <count>'");
            const auto v = detail::parse_int(toks[1]);
            if (!v || *v < 1) throw ParseError(line_no, "order must be a positive integer");
            declared_n = *v;
            saw_data = true;
            continue;
        }
        saw_data = true;

        if (toks.size() != 2)
            throw ParseError(line_no, "expected 'i j' (two vertex numbers)");
        const auto u = detail::parse_int(toks[0]);
        const auto v = detail::parse_int(toks[1]);
        if (!u || !v || *u < 1 || *v < 1)
            throw ParseError(line_no, "vertex indices must be positive integers");
        if (*u == *v) throw ParseError(line_no, "self-loop");
        if (declared_n && (*u > *declared_n || *v > *declared_n))
            throw ParseError(line_no, "vertex index exceeds declared order " +
                                          std::to_string(*declared_n));
        edges.emplace_back(*u, *v);
        edge_lines.push_back(line_no);
        max_index = std::max({max_index, *u, *v});
    }

    const int n = declared_n ? *declared_n : max_index;
    if (n < 1) throw ParseError(line_no, "no vertices: empty input without an 'n' header");

    // Duplicate detection here so the offending line can be named.
    {
        std::vector<std::pair<std::pair<int, int>, int>> keyed(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [a, b] = edges[i];
            if (a > b) std::swap(a, b);
            keyed[i] = {{a, b}, edge_lines[i]};
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 1; i < keyed.size(); ++i)
            if (keyed[i].first == keyed[i - 1].first)
                throw ParseError(keyed[i].second, "duplicate edge");
    }
    return Graph(n, std::move(edges));
}

/// Deterministic writer: header line, then edges sorted with u < v.
inline std::string write_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace gpinv
