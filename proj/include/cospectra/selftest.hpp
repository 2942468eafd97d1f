#pragma once

// Oracle-equivalence suites behind the `selftest` CLI command: every fast
// path is replayed against the dense reference implementations.

#include "cospectra/cotree.hpp"
#include "cospectra/diagonalization.hpp"
#include "cospectra/generate.hpp"
#include "cospectra/oracle.hpp"
#include "cospectra/recognition.hpp"
#include "cospectra/spanning.hpp"
#include "cospectra/spectrum.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace cospectra {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

// |sorted eigensolver output - spectrum multiset| <= tol, entry by entry.
inline bool spectrum_matches_eigensolver(const Cotree& t, const SpectrumMultiset& s, double tol,
                                         std::string& why) {
    Graph g = expand_to_graph(t);
    std::vector<double> numeric = eig_symmetric(to_double(dense_laplacian(g)));
    std::vector<double> exact;
    for (std::size_t i = s.pairs.size(); i-- > 0;)
        for (std::int64_t k = 0; k < s.pairs[i].second; ++k)
            exact.push_back(static_cast<double>(s.pairs[i].first));
    if (numeric.size() != exact.size()) {
        why = "eigenvalue count mismatch";
        return false;
    }
    for (std::size_t i = 0; i < numeric.size(); ++i)
        if (std::abs(numeric[i] - exact[i]) > tol) {
            std::ostringstream os;
            os << "eigenvalue " << i << ": cotree " << exact[i] << " vs dense " << numeric[i];
            why = os.str();
            return false;
        }
    return true;
}

} // namespace detail

// Runs the oracle-equivalence suites. `max_n` caps the exhaustive
// enumeration; `random_trials` sizes the randomized suites.
inline std::vector<CheckResult> run_selftest(int max_n = 6, std::uint64_t seed = 12345,
                                             int random_trials = 25) {
    std::vector<CheckResult> out;
    auto add = [&](const std::string& name, bool pass, const std::string& detail = {}) {
        out.push_back(CheckResult{name, pass, detail});
    };

    // Known counts of canonical cotrees on n unlabeled leaves.
    {
        const std::int64_t expected[] = {0, 1, 2, 4, 10, 24, 66};
        bool ok = true;
        std::string why;
        for (int n = 1; n <= max_n; ++n) {
            auto all = enumerate_cotrees(n);
            if (n <= 6 && static_cast<std::int64_t>(all.size()) != expected[n]) {
                ok = false;
                why = "n=" + std::to_string(n) + ": got " + std::to_string(all.size()) +
                      " cotrees, expected " + std::to_string(expected[n]);
                break;
            }
            std::vector<std::string> sigs;
            for (const auto& t : all) {
                if (!is_canonical(t) ||
                    static_cast<int>(t.leaf_count()) != n) {
                    ok = false;
                    why = "n=" + std::to_string(n) + ": non-canonical or wrong size";
                    break;
                }
                sigs.push_back(signature(t, /*identify_leaves=*/false));
            }
            std::sort(sigs.begin(), sigs.end());
            if (std::adjacent_find(sigs.begin(), sigs.end()) != sigs.end()) {
                ok = false;
                why = "n=" + std::to_string(n) + ": duplicate shape enumerated";
            }
            if (!ok) break;
        }
        add("enumerate-canonical-counts", ok, why);
    }

    // Exhaustive: spectrum vs dense eigensolver; spanning three ways.
    {
        bool spec_ok = true, span_ok = true;
        std::string spec_why, span_why;
        for (int n = 1; n <= max_n && (spec_ok || span_ok); ++n) {
            for (const auto& t : enumerate_cotrees(n)) {
                auto s = laplacian_spectrum(t);
                if (spec_ok && !detail::spectrum_matches_eigensolver(t, s, 1e-6, spec_why))
                    spec_ok = false;
                if (span_ok) {
                    BigInt direct = spanning_tree_count(t);
                    BigInt dense = matrix_tree_count(expand_to_graph(t));
                    BigInt spectral = spanning_count_from_spectrum(s);
                    if (direct != dense || direct != spectral) {
                        span_ok = false;
                        span_why = "n=" + std::to_string(n) + ": " + direct.str() + " / " +
                                   dense.str() + " / " + spectral.str();
                    }
                }
                if (!spec_ok && !span_ok) break;
            }
        }
        add("exhaustive-spectrum-vs-eigensolver", spec_ok, spec_why);
        add("exhaustive-spanning-three-way", span_ok, span_why);
    }

    // Exhaustive (small n): diagonalization inertia vs exact dense congruence.
    {
        bool ok = true;
        std::string why;
        const int cap = std::min(max_n, 6);
        for (int n = 1; n <= cap && ok; ++n) {
            for (const auto& t : enumerate_cotrees(n)) {
                Graph g = expand_to_graph(t);
                for (std::int64_t x = 0; x <= n && ok; ++x) {
                    Inertia fast = inertia_at(t, Rational(x));
                    Inertia dense = exact_inertia(rational_laplacian_shift(g, Rational(-x)));
                    if (fast != dense) {
                        ok = false;
                        why = "n=" + std::to_string(n) + " x=" + std::to_string(x);
                    }
                }
                if (!ok) break;
            }
        }
        add("exhaustive-inertia-vs-dense-congruence", ok, why);
    }

    // Randomized: bigger trees against the eigensolver and recognition.
    {
        bool spec_ok = true, round_ok = true, comp_ok = true, deg_ok = true;
        std::string spec_why, round_why, comp_why, deg_why;
        const double biases[] = {0.1, 0.5, 0.9};
        for (int trial = 0; trial < random_trials; ++trial) {
            const std::int64_t n = 2 + static_cast<std::int64_t>((seed + trial * 977) % 63);
            Cotree t = random_cotree(n, seed + static_cast<std::uint64_t>(trial) * 7919,
                                     biases[trial % 3]);

            if (spec_ok &&
                !detail::spectrum_matches_eigensolver(t, laplacian_spectrum(t), 1e-6, spec_why))
                spec_ok = false;

            if (round_ok) {
                Graph g = expand_to_graph(t);
                auto back = build_cotree(g);
                auto* ct = std::get_if<Cotree>(&back);
                if (!ct || signature(*ct) != signature(t)) {
                    round_ok = false;
                    round_why = "trial " + std::to_string(trial);
                }
            }

            if (comp_ok) {
                // Complement duality: nonzero eigenvalues map to n - value,
                // one zero stays.
                auto s = laplacian_spectrum(t);
                auto sc = laplacian_spectrum(complement(t));
                std::vector<std::int64_t> want, got;
                for (auto [v, m] : s.pairs)
                    if (v != 0)
                        for (std::int64_t k = 0; k < m; ++k) want.push_back(n - v);
                for (std::int64_t k = 1; k < s.multiplicity_of(0); ++k) want.push_back(n);
                want.push_back(0);
                // want currently holds the complement's eigenvalues: sort both.
                for (auto [v, m] : sc.pairs)
                    for (std::int64_t k = 0; k < m; ++k) got.push_back(v);
                std::sort(want.begin(), want.end());
                std::sort(got.begin(), got.end());
                if (want != got) {
                    comp_ok = false;
                    comp_why = "trial " + std::to_string(trial);
                }
            }

            if (deg_ok) {
                // Interior degree + complement's interior degree = n.
                auto d = interior_degrees(t);
                auto dc = interior_degrees(complement(t));
                for (std::size_t i = 0; i < d.size(); ++i)
                    if (d[i] + dc[i] != n) {
                        deg_ok = false;
                        deg_why = "trial " + std::to_string(trial) + " node " + std::to_string(i);
                        break;
                    }
            }
        }
        add("random-spectrum-vs-eigensolver", spec_ok, spec_why);
        add("random-recognition-roundtrip", round_ok, round_why);
        add("random-complement-duality", comp_ok, comp_why);
        add("random-degree-complement-identity", deg_ok, deg_why);
    }

    return out;
}

} // namespace cospectra
