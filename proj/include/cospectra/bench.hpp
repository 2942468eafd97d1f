#pragma once

#include "cospectra/generate.hpp"
#include "cospectra/spectrum.hpp"

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cospectra {

struct BenchRow {
    std::int64_t n = 0;
    int trials = 0;
    double mean_ms = 0.0;
    double ns_per_leaf = 0.0;
    std::int64_t distinct = 0; // distinct eigenvalues seen (also keeps the timed call live)
};

// Times laplacian_spectrum on freshly generated random cotrees (generation is
// excluded from the timing). Trials alternate between join-bias 0.1 and 0.9
// so both shallow-join and shallow-union shapes are exercised.
inline std::vector<BenchRow> run_bench(const std::vector<std::int64_t>& sizes, int trials = 3,
                                       std::uint64_t seed = 1) {
    if (trials < 1) throw std::invalid_argument("run_bench: trials must be at least 1");
    std::vector<BenchRow> rows;
    for (std::size_t si = 0; si < sizes.size(); ++si) {
        const std::int64_t n = sizes[si];
        if (n < 1) throw std::invalid_argument("run_bench: sizes must be at least 1");
        BenchRow row;
        row.n = n;
        row.trials = trials;
        double total_sec = 0.0;
        for (int trial = 0; trial < trials; ++trial) {
            Cotree t = random_cotree(n, seed + si * 1000003 + static_cast<std::uint64_t>(trial),
                                     trial % 2 == 0 ? 0.1 : 0.9);
            const auto start = std::chrono::steady_clock::now();
            SpectrumMultiset s = laplacian_spectrum(t);
            const auto stop = std::chrono::steady_clock::now();
            total_sec += std::chrono::duration<double>(stop - start).count();
            row.distinct += static_cast<std::int64_t>(s.pairs.size());
        }
        row.mean_ms = total_sec / trials * 1e3;
        row.ns_per_leaf = total_sec / trials * 1e9 / static_cast<double>(n);
        rows.push_back(row);
    }
    return rows;
}

// ns/leaf at the largest size over ns/leaf at the smallest: ~1 for a
// genuinely linear implementation.
inline double linearity_ratio(const std::vector<BenchRow>& rows) {
    if (rows.size() < 2) throw std::invalid_argument("linearity_ratio: need at least two sizes");
    const BenchRow* lo = &rows.front();
    const BenchRow* hi = &rows.front();
    for (const auto& r : rows) {
        if (r.n < lo->n) lo = &r;
        if (r.n > hi->n) hi = &r;
    }
    return hi->ns_per_leaf / lo->ns_per_leaf;
}

} // namespace cospectra
