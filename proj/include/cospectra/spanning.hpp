#pragma once

#include "cospectra/cotree.hpp"
#include "cospectra/exact.hpp"
#include "cospectra/spectrum.hpp"

#include <cstdint>
#include <stdexcept>

namespace cospectra {

// Number of spanning trees, straight off the cotree.
//
// For a connected cograph (Join root, nodes w_1 = root, w_2..w_r) the count
// is   n^(c_1 - 2) * prod_{i>=2} d(w_i)^(c_i - 1)
// where c_i is node w_i's child count and d its interior degree. Exponents
// use binary exponentiation; the bases are at most n but the product needs
// arbitrary precision. A Union root means a disconnected graph: count 0.
// A single vertex has exactly one spanning tree.
//
// Precondition: t is canonical.
inline BigInt spanning_tree_count(const Cotree& t) {
    if (!is_canonical(t)) throw std::invalid_argument("spanning_tree_count: cotree not canonical");
    if (t.root.is_leaf) return 1;
    if (t.nodes[0].kind == NodeKind::Union) return 0;

    const auto deg = interior_degrees(t);
    const auto n = static_cast<std::int64_t>(t.leaves.size());

    BigInt count = boost::multiprecision::pow(
        BigInt(n), static_cast<unsigned>(t.nodes[0].children.size() - 2));
    for (std::size_t i = 1; i < t.nodes.size(); ++i)
        count *= boost::multiprecision::pow(
            BigInt(deg[i]), static_cast<unsigned>(t.nodes[i].children.size() - 1));
    return count;
}

// Same count from a Laplacian spectrum: the product of the nonzero
// eigenvalues divided by n. Zero multiplicity above 1 means disconnected
// (count 0); the division must come out exact for any valid spectrum.
inline BigInt spanning_count_from_spectrum(const SpectrumMultiset& s) {
    const std::int64_t n = s.vertex_count();
    if (n < 1) throw std::invalid_argument("spanning_count_from_spectrum: empty spectrum");
    const std::int64_t zeros = s.multiplicity_of(0);
    if (zeros == 0)
        throw std::invalid_argument("spanning_count_from_spectrum: no zero eigenvalue");
    if (zeros > 1) return 0;

    BigInt prod = 1;
    for (auto [v, m] : s.pairs)
        if (v != 0) prod *= boost::multiprecision::pow(BigInt(v), static_cast<unsigned>(m));
    BigInt q, rem;
    boost::multiprecision::divide_qr(prod, BigInt(n), q, rem);
    if (rem != 0)
        throw std::logic_error("spanning_count_from_spectrum: eigenvalue product not divisible by n");
    return q;
}

} // namespace cospectra
