#pragma once

#include "cospectra/cotree.hpp"
#include "cospectra/diagonalization.hpp"
#include "cospectra/recognition.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cospectra {

// Laplacian spectrum as (eigenvalue, multiplicity) pairs, eigenvalue
// descending. Cograph Laplacian eigenvalues are integers in [0, n].
struct SpectrumMultiset {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;

    std::int64_t vertex_count() const {
        std::int64_t n = 0;
        for (auto [v, m] : pairs) n += m;
        return n;
    }

    std::int64_t multiplicity_of(std::int64_t value) const {
        for (auto [v, m] : pairs)
            if (v == value) return m;
        return 0;
    }

    std::int64_t max_eigenvalue() const { return pairs.empty() ? 0 : pairs.front().first; }

    // Eigenvalue counts relative to an integer threshold.
    Inertia counts_at(std::int64_t x) const {
        Inertia r;
        for (auto [v, m] : pairs) {
            if (v > x)
                r.above += m;
            else if (v < x)
                r.below += m;
            else
                r.equal += m;
        }
        return r;
    }

    friend bool operator==(const SpectrumMultiset&, const SpectrumMultiset&) = default;
};

// Computes the Laplacian spectrum in O(n) directly from the cotree.
//
// Each leaf starts with weight 1. Interior nodes are processed deepest first
// (ties by lowest index). When node w with interior degree d(w) holds m
// current leaves (original leaf children plus one survivor from each finished
// child node), it contributes d(w) with multiplicity m-1, and a single
// survivor of weight equal to the m weights' sum relocates to the parent.
// The root contributes its degree with multiplicity m-1 plus one 0.
// Multiplicities of equal eigenvalues are merged by bucket counting, keeping
// the whole computation linear.
//
// Precondition: t is canonical.
inline SpectrumMultiset laplacian_spectrum(const Cotree& t) {
    if (!is_canonical(t)) throw std::invalid_argument("laplacian_spectrum: cotree not canonical");

    const std::size_t n = t.leaves.size();
    if (n >= (1u << 31)) throw std::invalid_argument("laplacian_spectrum: too many leaves");
    if (t.root.is_leaf) return SpectrumMultiset{{{0, 1}}};

    const auto deg = interior_degrees(t);
    const std::size_t r = t.nodes.size();

    // One weight slot per child; survivors fill their parent's free slot.
    std::vector<std::size_t> off(r + 1, 0);
    for (std::size_t i = 0; i < r; ++i) off[i + 1] = off[i] + t.nodes[i].children.size();
    std::vector<std::int64_t> buf(off[r], 0);
    std::vector<std::size_t> fill(r, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (ChildRef c : t.nodes[i].children)
            if (c.is_leaf) buf[off[i] + fill[i]++] = 1;

    const auto dep = node_depths(t);
    std::uint32_t max_depth = 0;
    for (auto d : dep) max_depth = std::max(max_depth, d);
    std::vector<std::vector<std::uint32_t>> by_depth(max_depth + 1);
    for (std::uint32_t i = 0; i < r; ++i) by_depth[dep[i]].push_back(i);

    std::vector<std::int64_t> mult(n + 1, 0);
    for (std::uint32_t d = max_depth + 1; d-- > 0;) {
        for (std::uint32_t w : by_depth[d]) {
            const std::size_t m = t.nodes[w].children.size();
            if (fill[w] != m)
                throw std::logic_error("laplacian_spectrum: node processed before its children");
            std::int64_t sum = 0;
            for (std::size_t s = off[w]; s < off[w] + m; ++s) sum += buf[s];
            if (deg[w] < 0 || deg[w] > static_cast<std::int64_t>(n))
                throw std::logic_error("laplacian_spectrum: interior degree out of range");

            mult[static_cast<std::size_t>(deg[w])] += static_cast<std::int64_t>(m) - 1;
            if (w == 0) {
                mult[0] += 1;
                if (sum != static_cast<std::int64_t>(n))
                    throw std::logic_error("laplacian_spectrum: leaf weights lost");
            } else {
                const std::uint32_t p = t.nodes[w].parent;
                buf[off[p] + fill[p]++] = sum;
            }
        }
    }

    SpectrumMultiset out;
    for (std::size_t v = n + 1; v-- > 0;)
        if (mult[v] > 0) out.pairs.emplace_back(static_cast<std::int64_t>(v), mult[v]);
    return out;
}

// Spectrum of an arbitrary graph: recognize first, then read the spectrum off
// the cotree. A non-cograph input raises NotACographError with a witness.
inline SpectrumMultiset spectrum_of_graph(const Graph& g) {
    RecognitionOutcome out = build_cotree(g);
    if (auto* w = std::get_if<P4Witness>(&out)) throw NotACographError(*w);
    return laplacian_spectrum(std::get<Cotree>(out));
}

} // namespace cospectra
