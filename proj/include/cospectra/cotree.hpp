#pragma once

#include "cospectra/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cospectra {

enum class NodeKind : std::uint8_t { Union, Join };

constexpr NodeKind flip(NodeKind k) {
    return k == NodeKind::Union ? NodeKind::Join : NodeKind::Union;
}

constexpr char kind_letter(NodeKind k) { return k == NodeKind::Join ? 'J' : 'U'; }

// Reference to a child slot: either an interior node or a leaf, by pool index.
struct ChildRef {
    std::uint32_t index = 0;
    bool is_leaf = false;

    friend bool operator==(const ChildRef&, const ChildRef&) = default;
};

constexpr ChildRef leaf_ref(std::uint32_t i) { return ChildRef{i, true}; }
constexpr ChildRef node_ref(std::uint32_t i) { return ChildRef{i, false}; }

// Rooted cotree stored as two index pools. Well-formedness invariants
// (enforced by validate(), maintained by every builder in this library):
//   - at least one leaf; a single-leaf tree has a bare leaf root and no
//     interior nodes;
//   - with an interior root, the root is node 0 and every interior node's
//     parent has a smaller index, so forward index order is parent-first and
//     reverse index order is children-first;
//   - every non-root node/leaf appears exactly once in its parent's child
//     list; interior nodes have at least one child.
// Canonical form additionally requires >= 2 children per interior node and
// no parent/child pair of the same kind.
struct Cotree {
    static constexpr std::uint32_t npos = 0xffffffffu;

    struct Interior {
        NodeKind kind = NodeKind::Union;
        std::uint32_t parent = npos;
        std::vector<ChildRef> children;
    };

    struct Leaf {
        std::uint32_t parent = npos;
        std::string label; // empty = unlabeled; display name falls back to v<k>
    };

    std::vector<Interior> nodes;
    std::vector<Leaf> leaves;
    ChildRef root = leaf_ref(0);

    std::size_t leaf_count() const { return leaves.size(); }
};

// Display name of a leaf: its label, or positional v<k> (1-based) if unlabeled.
inline std::string leaf_name(const Cotree& t, std::uint32_t leaf) {
    const std::string& label = t.leaves[leaf].label;
    return label.empty() ? "v" + std::to_string(leaf + 1) : label;
}

inline Cotree single_leaf_cotree(std::string label = {}) {
    Cotree t;
    t.leaves.push_back(Cotree::Leaf{Cotree::npos, std::move(label)});
    t.root = leaf_ref(0);
    return t;
}

// Checks the structural invariants above; throws std::invalid_argument with a
// description of the first violation found.
inline void validate(const Cotree& t) {
    auto fail = [](const std::string& why) {
        throw std::invalid_argument("malformed cotree: " + why);
    };
    if (t.leaves.empty()) fail("no leaves");

    if (t.root.is_leaf) {
        if (!t.nodes.empty()) fail("bare-leaf root with interior nodes present");
        if (t.leaves.size() != 1) fail("bare-leaf root with more than one leaf");
        if (t.leaves[0].parent != Cotree::npos) fail("root leaf has a parent");
        return;
    }

    if (t.nodes.empty() || t.root.index != 0) fail("interior root must be node 0");
    if (t.nodes[0].parent != Cotree::npos) fail("root node has a parent");

    std::vector<std::uint32_t> node_seen(t.nodes.size(), 0);
    std::vector<std::uint32_t> leaf_seen(t.leaves.size(), 0);
    for (std::uint32_t i = 0; i < t.nodes.size(); ++i) {
        const auto& nd = t.nodes[i];
        if (i != 0) {
            if (nd.parent == Cotree::npos) fail("non-root node without parent");
            if (nd.parent >= i) fail("node parent index not smaller than node index");
        }
        if (nd.children.empty()) fail("interior node with no children");
        for (ChildRef c : nd.children) {
            if (c.is_leaf) {
                if (c.index >= t.leaves.size()) fail("child leaf index out of range");
                if (t.leaves[c.index].parent != i) fail("leaf parent link mismatch");
                ++leaf_seen[c.index];
            } else {
                if (c.index >= t.nodes.size()) fail("child node index out of range");
                if (c.index <= i) fail("child node index not larger than parent");
                if (t.nodes[c.index].parent != i) fail("node parent link mismatch");
                ++node_seen[c.index];
            }
        }
    }
    for (std::uint32_t i = 1; i < t.nodes.size(); ++i)
        if (node_seen[i] != 1) fail("interior node not referenced exactly once");
    for (std::uint32_t i = 0; i < t.leaves.size(); ++i)
        if (leaf_seen[i] != 1) fail("leaf not referenced exactly once");
}

// Canonical-form predicate. Precondition: t is well-formed (validate passes);
// malformed input raises the same structural error.
inline bool is_canonical(const Cotree& t) {
    validate(t);
    if (t.root.is_leaf) return true; // n == 1
    for (const auto& nd : t.nodes) {
        if (nd.children.size() < 2) return false;
        for (ChildRef c : nd.children)
            if (!c.is_leaf && t.nodes[c.index].kind == nd.kind) return false;
    }
    return true;
}

// Rewrites t into canonical form: collapses single-child interior nodes and
// merges same-kind parent/child pairs, preserving leaf indices, labels, and
// left-to-right leaf order. The expanded graph is unchanged.
inline Cotree normalize(const Cotree& t) {
    validate(t);

    Cotree out;
    out.leaves.resize(t.leaves.size());
    for (std::size_t i = 0; i < t.leaves.size(); ++i) out.leaves[i].label = t.leaves[i].label;

    if (t.root.is_leaf) {
        out.leaves[0].parent = Cotree::npos;
        out.root = t.root;
        return out;
    }

    // Bottom-up resolution (reverse index order = children first). Each
    // interior node resolves either to a single ChildRef (collapsed away) or
    // to itself with a flattened child list. std::list keeps same-kind
    // splicing O(1) so adversarial chains stay linear overall.
    std::vector<std::list<ChildRef>> flat(t.nodes.size());
    std::vector<ChildRef> resolved(t.nodes.size());
    for (std::uint32_t i = static_cast<std::uint32_t>(t.nodes.size()); i-- > 0;) {
        const auto& nd = t.nodes[i];
        std::list<ChildRef> acc;
        for (ChildRef c : nd.children) {
            ChildRef r = c.is_leaf ? c : resolved[c.index];
            if (!r.is_leaf && t.nodes[r.index].kind == nd.kind)
                acc.splice(acc.end(), flat[r.index]);
            else
                acc.push_back(r);
        }
        if (acc.size() == 1) {
            resolved[i] = acc.front();
        } else {
            resolved[i] = node_ref(i);
            flat[i] = std::move(acc);
        }
    }

    ChildRef new_root = resolved[0];
    if (new_root.is_leaf) {
        // The whole tree collapsed onto one leaf (only possible when n == 1).
        out.leaves[new_root.index].parent = Cotree::npos;
        out.root = new_root;
        return out;
    }

    // Materialize reachable nodes in parent-first order. Indices are assigned
    // at allocation time, so child-list order is preserved even though the
    // work stack visits subtrees LIFO.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> work; // (orig node, out node)
    out.nodes.emplace_back();
    out.nodes[0].kind = t.nodes[new_root.index].kind;
    work.emplace_back(new_root.index, 0);
    while (!work.empty()) {
        auto [orig, self] = work.back();
        work.pop_back();
        for (ChildRef c : flat[orig]) {
            if (c.is_leaf) {
                out.leaves[c.index].parent = self;
                out.nodes[self].children.push_back(c);
            } else {
                auto child = static_cast<std::uint32_t>(out.nodes.size());
                out.nodes.emplace_back();
                out.nodes[child].kind = t.nodes[c.index].kind;
                out.nodes[child].parent = self;
                out.nodes[self].children.push_back(node_ref(child));
                work.emplace_back(c.index, child);
            }
        }
    }
    out.root = node_ref(0);
    return out;
}

// Complement cograph: flip every interior kind. Canonical in, canonical out.
inline Cotree complement(const Cotree& t) {
    Cotree out = t;
    for (auto& nd : out.nodes) nd.kind = flip(nd.kind);
    return out;
}

// Depth of each interior node (root = 0).
inline std::vector<std::uint32_t> node_depths(const Cotree& t) {
    std::vector<std::uint32_t> depth(t.nodes.size(), 0);
    for (std::uint32_t i = 1; i < t.nodes.size(); ++i) depth[i] = depth[t.nodes[i].parent] + 1;
    return depth;
}

// Edge count of the longest root-to-leaf path. 0 for a bare leaf.
inline std::size_t depth(const Cotree& t) {
    if (t.root.is_leaf) return 0;
    auto depths = node_depths(t);
    std::size_t best = 0;
    for (const auto& lf : t.leaves) best = std::max<std::size_t>(best, depths[lf.parent] + 1);
    return best;
}

// Number of leaves in each interior node's subtree.
inline std::vector<std::int64_t> subtree_leaf_counts(const Cotree& t) {
    std::vector<std::int64_t> cnt(t.nodes.size(), 0);
    for (std::uint32_t i = static_cast<std::uint32_t>(t.nodes.size()); i-- > 0;)
        for (ChildRef c : t.nodes[i].children) cnt[i] += c.is_leaf ? 1 : cnt[c.index];
    return cnt;
}

// Interior degree of every interior node: the number of leaves v outside of
// or on the boundary of w's subtree whose join with w happens at a Join node;
// equivalently, the shared degree context the node passes to its leaves.
// Computed in one parent-first sweep with an accumulator a(w) = contribution
// of leaves outside w's subtree: a(root) = 0; a Join node w with subtree leaf
// count L(w) has degree a(w) + L(w) and hands a(w) + (L(w) - L(c)) to child c;
// a Union node has degree a(w) and hands a(w) down unchanged.
inline std::vector<std::int64_t> interior_degrees(const Cotree& t) {
    if (t.root.is_leaf) return {};
    auto cnt = subtree_leaf_counts(t);
    std::vector<std::int64_t> acc(t.nodes.size(), 0), deg(t.nodes.size(), 0);
    for (std::uint32_t i = 0; i < t.nodes.size(); ++i) {
        const auto& nd = t.nodes[i];
        if (nd.kind == NodeKind::Join) {
            deg[i] = acc[i] + cnt[i];
            for (ChildRef c : nd.children)
                if (!c.is_leaf) acc[c.index] = acc[i] + (cnt[i] - cnt[c.index]);
        } else {
            deg[i] = acc[i];
            for (ChildRef c : nd.children)
                if (!c.is_leaf) acc[c.index] = acc[i];
        }
    }
    return deg;
}

// Degree of every vertex of the expanded graph, indexed by leaf id. A leaf
// under a Join node shares that node's interior degree minus itself; under a
// Union node it gets the interior degree as-is.
inline std::vector<std::int64_t> vertex_degrees(const Cotree& t) {
    if (t.root.is_leaf) return {0};
    auto deg = interior_degrees(t);
    std::vector<std::int64_t> out(t.leaves.size(), 0);
    for (std::size_t i = 0; i < t.leaves.size(); ++i) {
        std::uint32_t p = t.leaves[i].parent;
        out[i] = deg[p] - (t.nodes[p].kind == NodeKind::Join ? 1 : 0);
    }
    return out;
}

// Expands the cotree to its cograph: vertex i is leaf i, and two vertices are
// adjacent exactly when their lowest common ancestor is a Join node.
inline Graph expand_to_graph(const Cotree& t) {
    auto n = static_cast<int>(t.leaves.size());
    if (t.root.is_leaf) return make_graph(1, {});

    // DFS leaf ordering: each subtree owns a contiguous range of positions.
    std::vector<std::uint32_t> leaf_at;               // position -> leaf id
    leaf_at.reserve(t.leaves.size());
    std::vector<std::uint32_t> pos_of_leaf(t.leaves.size(), 0);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> range(t.nodes.size(), {0, 0});

    std::vector<std::pair<std::uint32_t, std::size_t>> stack; // (node, next child)
    stack.emplace_back(0, 0);
    range[0].first = 0;
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        const auto& children = t.nodes[node].children;
        if (next == children.size()) {
            range[node].second = static_cast<std::uint32_t>(leaf_at.size());
            stack.pop_back();
            continue;
        }
        ChildRef c = children[next++];
        if (c.is_leaf) {
            pos_of_leaf[c.index] = static_cast<std::uint32_t>(leaf_at.size());
            leaf_at.push_back(c.index);
        } else {
            range[c.index].first = static_cast<std::uint32_t>(leaf_at.size());
            stack.emplace_back(c.index, 0);
        }
    }

    std::vector<std::pair<int, int>> edges;
    for (std::uint32_t i = 0; i < t.nodes.size(); ++i) {
        const auto& nd = t.nodes[i];
        if (nd.kind != NodeKind::Join) continue;
        for (std::size_t a = 0; a < nd.children.size(); ++a) {
            ChildRef ca = nd.children[a];
            std::uint32_t alo = ca.is_leaf ? pos_of_leaf[ca.index] : range[ca.index].first;
            std::uint32_t ahi = ca.is_leaf ? alo + 1 : range[ca.index].second;
            for (std::size_t b = a + 1; b < nd.children.size(); ++b) {
                ChildRef cb = nd.children[b];
                std::uint32_t blo = cb.is_leaf ? pos_of_leaf[cb.index] : range[cb.index].first;
                std::uint32_t bhi = cb.is_leaf ? blo + 1 : range[cb.index].second;
                for (std::uint32_t p = alo; p < ahi; ++p)
                    for (std::uint32_t q = blo; q < bhi; ++q)
                        edges.emplace_back(static_cast<int>(leaf_at[p]),
                                           static_cast<int>(leaf_at[q]));
            }
        }
    }
    return make_graph(n, std::move(edges));
}

// Order-insensitive serialization: children sorted by (kind, signature).
// With identify_leaves the signature pins which vertex sits where (leaf pool
// index = vertex id); without it, leaves are interchangeable and the
// signature describes the unlabeled shape.
inline std::string signature(const Cotree& t, bool identify_leaves = true) {
    auto leaf_sig = [&](std::uint32_t i) {
        return identify_leaves ? "v" + std::to_string(i) : std::string("_");
    };
    if (t.root.is_leaf) return leaf_sig(t.root.index);

    std::vector<std::string> sig(t.nodes.size());
    for (std::uint32_t i = static_cast<std::uint32_t>(t.nodes.size()); i-- > 0;) {
        const auto& nd = t.nodes[i];
        std::vector<std::string> parts;
        parts.reserve(nd.children.size());
        for (ChildRef c : nd.children)
            parts.push_back(c.is_leaf ? leaf_sig(c.index) : sig[c.index]);
        std::sort(parts.begin(), parts.end());
        std::string s(1, kind_letter(nd.kind));
        s += '(';
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (k) s += ',';
            s += parts[k];
        }
        s += ')';
        sig[i] = std::move(s);
    }
    return sig[0];
}

} // namespace cospectra
