#pragma once

#include "cospectra/cotree.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cospectra {

namespace detail {

// Lightweight recursive tree used while enumerating shapes.
struct Shape {
    bool leaf = true;
    NodeKind kind = NodeKind::Union;
    std::vector<Shape> children;
};

using ShapeCache = std::map<std::pair<int, int>, std::vector<Shape>>;

// Non-increasing partitions of m into parts >= 2.
inline void partitions_min2(int m, int max_part, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(m, max_part); p >= 2; --p) {
        if (m - p == 1) continue; // a leftover of 1 can never be partitioned
        cur.push_back(p);
        partitions_min2(m - p, p, cur, out);
        cur.pop_back();
    }
}

// All canonical shapes with exactly n leaves whose root is an interior node
// of the given kind (n >= 2). Children of equal leaf count are chosen as a
// multiset (non-decreasing index combinations), so each unordered shape
// appears exactly once.
inline const std::vector<Shape>& shapes_rooted(int n, NodeKind kind, ShapeCache& cache) {
    auto key = std::make_pair(n, static_cast<int>(kind));
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    std::vector<Shape> result;
    for (int t = n; t >= 0; --t) { // t leaf children
        const int m = n - t;
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions_min2(m, m, cur, parts);
        for (const auto& part : parts) {
            if (t + static_cast<int>(part.size()) < 2) continue;

            // Pick one subtree per part; equal-sized runs use non-decreasing
            // indices into the pool to enumerate multisets.
            std::vector<Shape> chosen;
            auto emit = [&](auto&& self, std::size_t at, int prev_size, std::size_t prev_idx) -> void {
                if (at == part.size()) {
                    Shape s;
                    s.leaf = false;
                    s.kind = kind;
                    s.children = chosen;
                    for (int i = 0; i < t; ++i) s.children.push_back(Shape{});
                    result.push_back(std::move(s));
                    return;
                }
                const auto& pool = shapes_rooted(part[at], flip(kind), cache);
                std::size_t start = (part[at] == prev_size) ? prev_idx : 0;
                for (std::size_t i = start; i < pool.size(); ++i) {
                    chosen.push_back(pool[i]);
                    self(self, at + 1, part[at], i);
                    chosen.pop_back();
                }
            };
            emit(emit, 0, -1, 0);
        }
    }
    return cache.emplace(key, std::move(result)).first->second;
}

inline Cotree shape_to_cotree(const Shape& root) {
    Cotree t;
    if (root.leaf) return single_leaf_cotree();

    // Parent-first materialization; child order preserved via index
    // assignment at allocation time.
    std::vector<std::pair<const Shape*, std::uint32_t>> work;
    t.nodes.push_back(Cotree::Interior{root.kind, Cotree::npos, {}});
    work.emplace_back(&root, 0);
    while (!work.empty()) {
        auto [shape, self] = work.back();
        work.pop_back();
        for (const Shape& c : shape->children) {
            if (c.leaf) {
                auto leaf = static_cast<std::uint32_t>(t.leaves.size());
                t.leaves.push_back(Cotree::Leaf{self, {}});
                t.nodes[self].children.push_back(leaf_ref(leaf));
            } else {
                auto idx = static_cast<std::uint32_t>(t.nodes.size());
                t.nodes.push_back(Cotree::Interior{c.kind, self, {}});
                t.nodes[self].children.push_back(node_ref(idx));
                work.emplace_back(&c, idx);
            }
        }
    }
    t.root = node_ref(0);
    return t;
}

} // namespace detail

// Every canonical cotree with n unlabeled leaves, each exactly once
// (1, 2, 4, 10, 24, 66, ... trees for n = 1, 2, 3, 4, 5, 6). Intended for
// exhaustive testing; n is capped to keep the output manageable.
inline std::vector<Cotree> enumerate_cotrees(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_cotrees: n must be at least 1");
    if (n > 12) throw std::invalid_argument("enumerate_cotrees: n too large for enumeration");
    std::vector<Cotree> out;
    if (n == 1) {
        out.push_back(single_leaf_cotree());
        return out;
    }
    detail::ShapeCache cache;
    for (NodeKind kind : {NodeKind::Union, NodeKind::Join})
        for (const auto& s : detail::shapes_rooted(n, kind, cache))
            out.push_back(detail::shape_to_cotree(s));
    return out;
}

// Deterministic random canonical cotree with exactly n leaves. The root kind
// is Join with probability join_bias; all other kinds alternate as canonical
// form requires. Each interior node splits its leaf budget into 2..5 parts
// at uniformly chosen cut points; size-1 parts become leaves.
inline Cotree random_cotree(std::int64_t n, std::uint64_t seed, double join_bias = 0.5) {
    if (n < 1) throw std::invalid_argument("random_cotree: n must be at least 1");
    if (!(join_bias >= 0.0 && join_bias <= 1.0))
        throw std::invalid_argument("random_cotree: join_bias must be in [0, 1]");
    if (n == 1) return single_leaf_cotree();

    std::mt19937_64 rng(seed);
    auto coin = [&](double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };
    auto below = [&](std::uint64_t k) { return rng() % k; }; // k <= 5: bias negligible

    Cotree t;
    t.nodes.push_back(Cotree::Interior{coin(join_bias) ? NodeKind::Join : NodeKind::Union,
                                       Cotree::npos, {}});
    std::vector<std::pair<std::uint32_t, std::int64_t>> work{{0, n}}; // (node, leaf budget)
    while (!work.empty()) {
        auto [w, budget] = work.back();
        work.pop_back();

        const auto cmax = static_cast<std::uint64_t>(std::min<std::int64_t>(budget, 5));
        const auto c = 2 + below(cmax - 1); // children count, uniform in [2, cmax]

        std::vector<std::int64_t> cuts{0, budget};
        while (cuts.size() < c + 1) {
            auto v = static_cast<std::int64_t>(1 + below(static_cast<std::uint64_t>(budget - 1)));
            if (std::find(cuts.begin(), cuts.end(), v) == cuts.end()) cuts.push_back(v);
        }
        std::sort(cuts.begin(), cuts.end());

        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const std::int64_t part = cuts[i + 1] - cuts[i];
            if (part == 1) {
                auto leaf = static_cast<std::uint32_t>(t.leaves.size());
                t.leaves.push_back(Cotree::Leaf{w, {}});
                t.nodes[w].children.push_back(leaf_ref(leaf));
            } else {
                auto idx = static_cast<std::uint32_t>(t.nodes.size());
                t.nodes.push_back(Cotree::Interior{flip(t.nodes[w].kind), w, {}});
                t.nodes[w].children.push_back(node_ref(idx));
                work.emplace_back(idx, part);
            }
        }
    }
    t.root = node_ref(0);
    return t;
}

} // namespace cospectra
