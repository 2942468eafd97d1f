#pragma once

#include "cospectra/cotree.hpp"
#include "cospectra/exact.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cospectra {

// Counts of Laplacian eigenvalues above / equal to / below a threshold.
struct Inertia {
    std::int64_t above = 0;
    std::int64_t equal = 0;
    std::int64_t below = 0;

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Which update rule a fold step applied. 1x = Join parent, 2x = Union parent;
// the 'c' cases retire both leaves of the pair, the others retire only v_k.
enum class Subcase : std::uint8_t { s1a, s1b, s1c, s2a, s2b, s2c };

inline const char* subcase_name(Subcase s) {
    switch (s) {
        case Subcase::s1a: return "1a";
        case Subcase::s1b: return "1b";
        case Subcase::s1c: return "1c";
        case Subcase::s2a: return "2a";
        case Subcase::s2b: return "2b";
        case Subcase::s2c: return "2c";
    }
    return "?";
}

// One fold step: the pair (v_k, v_l) processed under `node`, the subcase
// chosen from (alpha, beta) = their incoming values, and the values assigned:
// dk is final for v_k; dl is v_l's new value (also final in the 'c' cases).
struct TraceEntry {
    Subcase subcase;
    std::uint32_t node;
    std::uint32_t leaf_k;
    std::uint32_t leaf_l;
    Rational dk;
    Rational dl;
};

inline std::string format_trace_entry(const TraceEntry& e) {
    std::ostringstream os;
    os << "subcase=" << subcase_name(e.subcase) << " node=" << e.node << " k=" << e.leaf_k
       << " l=" << e.leaf_l << " dk=" << e.dk.str() << " dl=" << e.dl.str();
    return os.str();
}

struct DiagonalizeOptions {
    bool record_trace = false;
    // Fold each node's current leaves right-to-left instead of left-to-right.
    // Any fold order yields a congruent diagonal; tests use this to check
    // that the sign counts are order-invariant.
    bool reverse_fold = false;
};

struct DiagonalResult {
    std::vector<Rational> values; // final diagonal, in emission order
    std::vector<TraceEntry> trace;
};

namespace detail {

struct FoldStep {
    Subcase subcase;
    Rational dk;
    Rational dl;
    bool both_retire; // the 'c' cases finalize v_l as well as v_k
};

// One pairwise congruence step on the 2x2 principal block of the current
// matrix: diag (alpha, beta), off-diagonal -1 under a Join parent (the pair
// is adjacent) and 0 under a Union parent. In every case dk*dl equals the
// block determinant (alpha*beta - 1 for Join, alpha*beta for Union), so the
// assigned signs track the block's inertia.
inline FoldStep fold_step(NodeKind kind, const Rational& alpha, const Rational& beta) {
    if (kind == NodeKind::Join) {
        if (alpha + beta != -2) {
            Rational dk = alpha + beta + 2;
            return {Subcase::s1a, dk, (alpha * beta - 1) / dk, false};
        }
        if (beta == -1) return {Subcase::s1b, 0, -1, false};
        return {Subcase::s1c, (1 + beta) * (1 + beta), -1, true};
    }
    if (alpha + beta != 0) {
        Rational dk = alpha + beta;
        return {Subcase::s2a, dk, alpha * beta / dk, false};
    }
    if (beta == 0) return {Subcase::s2b, 0, 0, false};
    return {Subcase::s2c, -beta, beta, true};
}

} // namespace detail

// Diagonalizes L(G) + x*I by congruence, working directly on the cotree.
//
// Every leaf starts at d = degree + x. Interior nodes are processed deepest
// first (ties by lowest node index). A node's current leaves — its original
// leaf children in child order, then survivors relocated from finished child
// nodes in processing order — are folded pairwise left-to-right: the current
// survivor is v_k (value alpha), the next leaf is v_l (value beta), and the
// parent's kind picks the update:
//   Join:  alpha+beta != -2 -> dk = alpha+beta+2, dl = (alpha*beta-1)/(alpha+beta+2)
//          beta == -1       -> dk = 0,            dl = -1
//          otherwise        -> dk = (1+beta)^2,   dl = -1, both retire
//   Union: alpha+beta != 0  -> dk = alpha+beta,   dl = alpha*beta/(alpha+beta)
//          beta == 0        -> dk = 0,            dl = 0
//          otherwise        -> dk = -beta,        dl = beta, both retire
// A retired leaf's value is final. The fold's last survivor relocates to the
// parent; a survivor at the root emits its value as the final entry. The
// resulting diagonal is congruent to L(G) + x*I, so its sign counts are the
// eigenvalue counts of L(G) relative to -x.
//
// Precondition: t is canonical.
inline DiagonalResult diagonalize(const Cotree& t, const Rational& x,
                                  const DiagonalizeOptions& opts = {}) {
    if (!is_canonical(t)) throw std::invalid_argument("diagonalize: cotree not canonical");

    DiagonalResult res;
    const std::size_t n = t.leaves.size();
    res.values.reserve(n);
    if (t.root.is_leaf) {
        res.values.push_back(x); // single vertex: degree 0
        return res;
    }

    const auto degs = vertex_degrees(t);
    using Entry = std::pair<std::uint32_t, Rational>; // (leaf id, current d)
    std::vector<std::vector<Entry>> pool(t.nodes.size());
    for (std::uint32_t w = 0; w < t.nodes.size(); ++w)
        for (ChildRef c : t.nodes[w].children)
            if (c.is_leaf) pool[w].emplace_back(c.index, Rational(degs[c.index]) + x);

    // Static processing order: depth descending, node index ascending.
    const auto dep = node_depths(t);
    std::uint32_t max_depth = 0;
    for (auto d : dep) max_depth = std::max(max_depth, d);
    std::vector<std::vector<std::uint32_t>> by_depth(max_depth + 1);
    for (std::uint32_t i = 0; i < t.nodes.size(); ++i) by_depth[dep[i]].push_back(i);

    for (std::uint32_t d = max_depth + 1; d-- > 0;) {
        for (std::uint32_t w : by_depth[d]) {
            auto& lv = pool[w];
            if (opts.reverse_fold) std::reverse(lv.begin(), lv.end());
            const NodeKind kind = t.nodes[w].kind;
            std::size_t i = 0;
            while (lv.size() - i >= 2) {
                detail::FoldStep f = detail::fold_step(kind, lv[i].second, lv[i + 1].second);
                if (opts.record_trace)
                    res.trace.push_back(
                        TraceEntry{f.subcase, w, lv[i].first, lv[i + 1].first, f.dk, f.dl});
                res.values.push_back(f.dk);
                if (f.both_retire) {
                    res.values.push_back(f.dl);
                    i += 2;
                } else {
                    lv[i + 1].second = f.dl;
                    i += 1;
                }
            }

            if (lv.size() - i == 1) {
                if (w == 0)
                    res.values.push_back(lv[i].second); // root survivor: value is final
                else
                    pool[t.nodes[w].parent].push_back(lv[i]);
            }
        }
    }

    if (res.values.size() != n)
        throw std::logic_error("diagonalize: emitted " + std::to_string(res.values.size()) +
                               " values for " + std::to_string(n) + " leaves");
    return res;
}

// Eigenvalue location at threshold x: diagonalizing L + (-x)I gives a matrix
// congruent to L - xI, whose sign counts are (above, equal, below) x.
inline Inertia inertia_at(const Cotree& t, const Rational& x,
                          const DiagonalizeOptions& opts = {}) {
    DiagonalResult d = diagonalize(t, -x, opts);
    Inertia r;
    for (const Rational& v : d.values) {
        if (v > 0)
            ++r.above;
        else if (v < 0)
            ++r.below;
        else
            ++r.equal;
    }
    return r;
}

// Multiplicity of x as a Laplacian eigenvalue (0 if absent).
inline std::int64_t eigenvalue_multiplicity(const Cotree& t, const Rational& x) {
    return inertia_at(t, x).equal;
}

} // namespace cospectra
