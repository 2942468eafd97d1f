#pragma once

// Independent reference implementations used to validate the cotree-based
// algorithms. Everything here works on dense matrices or raw vertex sets and
// never consults the fast paths it is checking.

#include "cospectra/diagonalization.hpp" // Inertia
#include "cospectra/exact.hpp"
#include "cospectra/graph.hpp"
#include "cospectra/recognition.hpp" // P4Witness

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cospectra {

template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, T init = T{}) : n_(n), a_(n * n, init) {}

    std::size_t size() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

private:
    std::size_t n_ = 0;
    std::vector<T> a_;
};

// L = D - A.
inline SquareMatrix<std::int64_t> dense_laplacian(const Graph& g) {
    SquareMatrix<std::int64_t> L(static_cast<std::size_t>(g.n), 0);
    for (auto [u, v] : g.edges) {
        auto a = static_cast<std::size_t>(u), b = static_cast<std::size_t>(v);
        L(a, b) = -1;
        L(b, a) = -1;
        ++L(a, a);
        ++L(b, b);
    }
    return L;
}

inline SquareMatrix<double> to_double(const SquareMatrix<std::int64_t>& m) {
    SquareMatrix<double> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = static_cast<double>(m(i, j));
    return out;
}

// L + x*I over exact rationals, for congruence-based inertia checks.
inline SquareMatrix<Rational> rational_laplacian_shift(const Graph& g, const Rational& x) {
    auto L = dense_laplacian(g);
    SquareMatrix<Rational> out(L.size());
    for (std::size_t i = 0; i < L.size(); ++i)
        for (std::size_t j = 0; j < L.size(); ++j)
            out(i, j) = Rational(L(i, j)) + (i == j ? x : Rational(0));
    return out;
}

// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
// ascending. Eigenvectors are not accumulated. Throws on non-symmetric input
// and if the off-diagonal mass fails to vanish within the sweep budget.
inline std::vector<double> eig_symmetric(SquareMatrix<double> a) {
    const std::size_t n = a.size();
    if (n == 0) return {};
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(a(i, j) - a(j, i)) > 1e-12 * std::max(1.0, scale))
                throw std::invalid_argument("eig_symmetric: matrix not symmetric");

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (off <= 1e-28 * std::max(1.0, scale * scale)) {
            std::vector<double> eig(n);
            for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
            std::sort(eig.begin(), eig.end());
            return eig;
        }
        // Threshold strategy: generous early sweeps, then rotate everything.
        const double thresh = sweep < 3 ? 0.2 * std::sqrt(off) / static_cast<double>(n) : 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= thresh) continue;
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double tt = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) tt = -tt;
                const double c = 1.0 / std::sqrt(tt * tt + 1.0);
                const double s = tt * c;

                for (std::size_t r = 0; r < n; ++r) {
                    const double arp = a(r, p), arq = a(r, q);
                    a(r, p) = c * arp - s * arq;
                    a(r, q) = s * arp + c * arq;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const double apr = a(p, r), aqr = a(q, r);
                    a(p, r) = c * apr - s * aqr;
                    a(q, r) = s * apr + c * aqr;
                }
            }
        }
    }
    throw std::runtime_error("eig_symmetric: no convergence within sweep budget");
}

// Spanning-tree count by the matrix-tree theorem: determinant of the
// Laplacian with one row/column removed, via fraction-free Bareiss
// elimination over exact integers. Which index is removed must not matter.
inline BigInt matrix_tree_count(const Graph& g, int removed = 0) {
    if (g.n < 1) throw std::invalid_argument("matrix_tree_count: empty graph");
    if (removed < 0 || removed >= g.n)
        throw std::invalid_argument("matrix_tree_count: removed index out of range");
    const auto L = dense_laplacian(g);
    const std::size_t m = static_cast<std::size_t>(g.n) - 1;
    if (m == 0) return 1;

    SquareMatrix<BigInt> M(m);
    for (std::size_t i = 0, ii = 0; i < static_cast<std::size_t>(g.n); ++i) {
        if (i == static_cast<std::size_t>(removed)) continue;
        for (std::size_t j = 0, jj = 0; j < static_cast<std::size_t>(g.n); ++j) {
            if (j == static_cast<std::size_t>(removed)) continue;
            M(ii, jj) = L(i, j);
            ++jj;
        }
        ++ii;
    }

    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (M(k, k) == 0) {
            std::size_t piv = k;
            while (piv < m && M(piv, k) == 0) ++piv;
            if (piv == m) return 0;
            for (std::size_t j = 0; j < m; ++j) std::swap(M(k, j), M(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < m; ++j) {
                BigInt num = M(k, k) * M(i, j) - M(i, k) * M(k, j);
                BigInt q, rem;
                boost::multiprecision::divide_qr(num, prev, q, rem);
                if (rem != 0) throw std::logic_error("matrix_tree_count: inexact Bareiss step");
                M(i, j) = std::move(q);
            }
            M(i, k) = 0;
        }
        prev = M(k, k);
    }
    return sign * M(m - 1, m - 1);
}

// Inertia of a symmetric rational matrix by exact congruence elimination
// (Schur complements with symmetric pivoting). When the remaining diagonal is
// all zero but some off-diagonal entry a = M(r,s) survives, adding row/column
// s onto row/column r manufactures the nonzero pivot 2a; a fully zero
// remainder contributes only zero eigenvalues.
inline Inertia exact_inertia(SquareMatrix<Rational> m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m(i, j) != m(j, i))
                throw std::invalid_argument("exact_inertia: matrix not symmetric");

    Inertia out;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t r = k; r < n; ++r)
            if (m(r, r) != 0) {
                piv = r;
                break;
            }
        if (piv == n) {
            std::size_t rr = n, ss = n;
            for (std::size_t r = k; r < n && rr == n; ++r)
                for (std::size_t s = r + 1; s < n; ++s)
                    if (m(r, s) != 0) {
                        rr = r;
                        ss = s;
                        break;
                    }
            if (rr == n) {
                out.equal += static_cast<std::int64_t>(n - k);
                return out;
            }
            for (std::size_t j = 0; j < n; ++j) m(rr, j) += m(ss, j);
            for (std::size_t i = 0; i < n; ++i) m(i, rr) += m(i, ss);
            piv = rr;
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(m(i, k), m(i, piv));
        }
        const Rational d = m(k, k);
        if (d > 0)
            ++out.above;
        else
            ++out.below;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            const Rational f = m(i, k) / d;
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
            m(i, k) = 0;
        }
        for (std::size_t j = k + 1; j < n; ++j) m(k, j) = 0;
    }
    return out;
}

// Exhaustive induced-P4 search, for validating the recognition fast path.
inline std::optional<P4Witness> find_induced_p4_brute(const Graph& g) {
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c)
                for (int d = 0; d < g.n; ++d) {
                    P4Witness w{a, b, c, d};
                    if (a < d && is_valid_p4(g, w)) return w; // a<d kills the mirror duplicate
                }
    return std::nullopt;
}

inline bool has_induced_p4(const Graph& g) { return find_induced_p4_brute(g).has_value(); }

// Brute-force graph isomorphism for tiny graphs (n <= 8).
inline bool graphs_isomorphic_brute(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    if (a.n > 8) throw std::invalid_argument("graphs_isomorphic_brute: graph too large");
    std::vector<int> perm(static_cast<std::size_t>(a.n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (auto [u, v] : a.edges)
            if (!has_edge(b, perm[static_cast<std::size_t>(u)],
                          perm[static_cast<std::size_t>(v)])) {
                match = false;
                break;
            }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace cospectra
