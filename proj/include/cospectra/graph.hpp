#pragma once

#include "cospectra/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cospectra {

// Simple undirected graph on vertices 0..n-1. Edges are kept normalized
// (u < v, sorted, no duplicates) and mirrored into sorted adjacency lists.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    std::size_t edge_count() const { return edges.size(); }
};

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : g.edges) {
        g.adj[static_cast<std::size_t>(u)].push_back(v);
        g.adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& row : g.adj) std::sort(row.begin(), row.end());
    return g;
}

inline bool has_edge(const Graph& g, int u, int v) {
    if (u == v) return false;
    const auto& row = g.adj[static_cast<std::size_t>(u)];
    return std::binary_search(row.begin(), row.end(), v);
}

inline bool graphs_equal(const Graph& a, const Graph& b) {
    return a.n == b.n && a.edges == b.edges;
}

inline Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!has_edge(g, u, v)) edges.emplace_back(u, v);
    return make_graph(g.n, std::move(edges));
}

// Edge-list text format: first significant line "n m", then m lines "u v"
// with 0-based endpoints. '#' starts a comment that runs to end of line.
inline Graph parse_edge_list(std::string_view text) {
    std::vector<std::vector<long long>> rows; // parsed numbers per significant line
    std::vector<std::size_t> row_lines;       // 1-based source line of each row

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<long long> nums;
        std::size_t i = 0;
        while (i < line.size()) {
            char c = line[i];
            if (c == ' ' || c == '\t' || c == '\r') { ++i; continue; }
            bool neg = false;
            std::size_t start = i;
            if (c == '-') { neg = true; ++i; }
            if (i >= line.size() || line[i] < '0' || line[i] > '9')
                throw ParseError(line_no, start + 1, "expected integer");
            long long v = 0;
            while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
                v = v * 10 + (line[i] - '0');
                if (v > (1LL << 40)) throw ParseError(line_no, start + 1, "integer too large");
                ++i;
            }
            nums.push_back(neg ? -v : v);
        }
        if (!nums.empty()) {
            rows.push_back(std::move(nums));
            row_lines.push_back(line_no);
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }

    if (rows.empty()) throw ParseError(1, 1, "empty edge list (expected 'n m' header)");
    if (rows[0].size() != 2) throw ParseError(row_lines[0], 1, "header must be exactly 'n m'");
    long long n = rows[0][0];
    long long m = rows[0][1];
    if (n < 1) throw ParseError(row_lines[0], 1, "vertex count must be at least 1");
    if (m < 0) throw ParseError(row_lines[0], 1, "edge count must be nonnegative");
    if (static_cast<long long>(rows.size()) - 1 != m)
        throw ParseError(row_lines.back(), 1,
                         "expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(rows.size() - 1));

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != 2) throw ParseError(row_lines[r], 1, "edge line must be 'u v'");
        long long u = rows[r][0], v = rows[r][1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(row_lines[r], 1, "vertex id out of range [0, n)");
        if (u == v) throw ParseError(row_lines[r], 1, "self-loop not allowed");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return make_graph(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(row_lines[0], 1, e.what());
    }
}

inline std::string format_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.n << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges) os << u << ' ' << v << '\n';
    return os.str();
}

} // namespace cospectra
