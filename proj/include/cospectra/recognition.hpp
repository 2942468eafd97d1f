#pragma once

#include "cospectra/cotree.hpp"
#include "cospectra/graph.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cospectra {

// Induced path a-b-c-d: edges ab, bc, cd; non-edges ac, ad, bd.
struct P4Witness {
    int a = 0, b = 0, c = 0, d = 0;

    friend bool operator==(const P4Witness&, const P4Witness&) = default;
};

inline bool is_valid_p4(const Graph& g, const P4Witness& w) {
    int v[4] = {w.a, w.b, w.c, w.d};
    for (int i = 0; i < 4; ++i) {
        if (v[i] < 0 || v[i] >= g.n) return false;
        for (int j = i + 1; j < 4; ++j)
            if (v[i] == v[j]) return false;
    }
    return has_edge(g, w.a, w.b) && has_edge(g, w.b, w.c) && has_edge(g, w.c, w.d) &&
           !has_edge(g, w.a, w.c) && !has_edge(g, w.a, w.d) && !has_edge(g, w.b, w.d);
}

class NotACographError : public std::runtime_error {
public:
    explicit NotACographError(const P4Witness& w)
        : std::runtime_error("not a cograph: induced P4 " + std::to_string(w.a) + " " +
                             std::to_string(w.b) + " " + std::to_string(w.c) + " " +
                             std::to_string(w.d)),
          witness(w) {}

    P4Witness witness;
};

// Either the canonical cotree of the input or an induced-P4 witness.
using RecognitionOutcome = std::variant<Cotree, P4Witness>;

namespace detail {

// Finds an induced P4 inside G[verts]. Scans every edge (b, c) of the induced
// subgraph for a in N(b)\N[c] and d in N(c)\N[b] with a,d non-adjacent; if an
// induced P4 exists at all, scanning its middle edge finds a witness, so the
// scan is complete. The exhaustive 4-subset sweep below is a backstop only.
inline std::optional<P4Witness> find_p4(const Graph& g, const std::vector<int>& verts) {
    std::vector<char> in(static_cast<std::size_t>(g.n), 0);
    for (int v : verts) in[static_cast<std::size_t>(v)] = 1;

    for (int b : verts) {
        for (int c : g.adj[static_cast<std::size_t>(b)]) {
            if (b >= c || !in[static_cast<std::size_t>(c)]) continue;
            std::vector<int> as, ds;
            for (int u : verts) {
                if (u == b || u == c) continue;
                bool ub = has_edge(g, u, b), uc = has_edge(g, u, c);
                if (ub && !uc) as.push_back(u);
                if (uc && !ub) ds.push_back(u);
            }
            for (int a : as)
                for (int d : ds)
                    if (!has_edge(g, a, d)) return P4Witness{a, b, c, d};
        }
    }

    if (verts.size() < 64) {
        // Backstop: exhaustive ordered-4-subset sweep (should be unreachable).
        std::size_t m = verts.size();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k)
                    for (std::size_t l = 0; l < m; ++l) {
                        if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
                        P4Witness w{verts[i], verts[j], verts[k], verts[l]};
                        if (is_valid_p4(g, w)) return w;
                    }
    }
    return std::nullopt;
}

// Connected components of G[verts], in discovery order (lowest vertex first).
inline std::vector<std::vector<int>> induced_components(const Graph& g,
                                                        const std::vector<int>& verts) {
    std::vector<char> in(static_cast<std::size_t>(g.n), 0), done(static_cast<std::size_t>(g.n), 0);
    for (int v : verts) in[static_cast<std::size_t>(v)] = 1;

    std::vector<std::vector<int>> comps;
    for (int s : verts) {
        if (done[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp, queue{s};
        done[static_cast<std::size_t>(s)] = 1;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            comp.push_back(v);
            for (int u : g.adj[static_cast<std::size_t>(v)])
                if (in[static_cast<std::size_t>(u)] && !done[static_cast<std::size_t>(u)]) {
                    done[static_cast<std::size_t>(u)] = 1;
                    queue.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Connected components of the complement of G[verts], without materializing
// the complement: a BFS step keeps the neighbors of v in the untouched set
// and moves the non-neighbors into v's component.
inline std::vector<std::vector<int>> induced_co_components(const Graph& g,
                                                           const std::vector<int>& verts) {
    std::vector<int> rest = verts;
    std::vector<std::vector<int>> comps;
    while (!rest.empty()) {
        std::vector<int> comp, queue{rest.front()};
        rest.erase(rest.begin());
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            comp.push_back(v);
            std::vector<int> keep;
            keep.reserve(rest.size());
            for (int u : rest)
                (has_edge(g, v, u) ? keep : queue).push_back(u);
            rest = std::move(keep);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

struct FoundP4 {
    P4Witness w;
};

} // namespace detail

// Builds the canonical cotree of g, or reports an induced P4. The split
// alternates: a disconnected vertex set becomes a Union node over its
// components, a co-disconnected one becomes a Join node over its complement
// components, and a set that is neither (with >= 2 vertices) contains a P4.
inline RecognitionOutcome build_cotree(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("build_cotree: graph must have at least one vertex");
    if (g.n == 1) return single_leaf_cotree();

    Cotree t;
    t.leaves.resize(static_cast<std::size_t>(g.n)); // leaf i = vertex i

    // Recursive split; parent nodes are created before their children, which
    // maintains the parent-first index invariant.
    auto solve = [&](auto&& self, const std::vector<int>& verts,
                     std::uint32_t parent) -> ChildRef {
        if (verts.size() == 1) {
            auto leaf = static_cast<std::uint32_t>(verts[0]);
            t.leaves[leaf].parent = parent;
            return leaf_ref(leaf);
        }
        auto comps = detail::induced_components(g, verts);
        NodeKind kind = NodeKind::Union;
        if (comps.size() < 2) {
            comps = detail::induced_co_components(g, verts);
            kind = NodeKind::Join;
            if (comps.size() < 2) {
                auto w = detail::find_p4(g, verts);
                if (!w)
                    throw std::logic_error(
                        "build_cotree: connected + co-connected set without an induced P4");
                throw detail::FoundP4{*w};
            }
        }
        auto idx = static_cast<std::uint32_t>(t.nodes.size());
        t.nodes.push_back(Cotree::Interior{kind, parent, {}});
        for (const auto& comp : comps) {
            ChildRef c = self(self, comp, idx);
            t.nodes[idx].children.push_back(c);
        }
        return node_ref(idx);
    };

    std::vector<int> all(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) all[static_cast<std::size_t>(i)] = i;
    try {
        t.root = solve(solve, all, Cotree::npos);
    } catch (const detail::FoundP4& f) {
        return f.w;
    }
    validate(t);
    return t;
}

inline bool is_cograph(const Graph& g) {
    return std::holds_alternative<Cotree>(build_cotree(g));
}

} // namespace cospectra
