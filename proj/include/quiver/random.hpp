#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "quiver/rank_conditions.hpp"

namespace quiver {

// SplitMix64: tiny deterministic generator, identical on every platform.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi]
    int uniform(int lo, int hi) {
        if (hi < lo) throw std::invalid_argument("uniform: empty range");
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// Per-trial seeds derived from (master seed, index) so trial results do not
// depend on evaluation order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 g(master ^ (0xA24BAED4963EE407ULL + index * 0x9E3779B97F4A7C15ULL));
    return g.next();
}

// Random admissible rank conditions: bundle ranks uniform in [1, max_entry],
// then each r_{ij} uniform in [0, min(r_{i,j-1}, r_{i+1,j})] row by row, and
// the whole triangle is rejected and resampled until the submodularity
// inequalities hold as well.
inline RankConditions random_rank_conditions(SplitMix64& rng, int max_n, int max_entry) {
    if (max_n < 1 || max_entry < 1)
        throw std::invalid_argument("random_rank_conditions: bad bounds");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        int n = rng.uniform(1, max_n);
        std::vector<std::vector<int>> rows(n + 1);
        rows[0].resize(n + 1);
        for (int i = 0; i <= n; ++i) rows[0][i] = rng.uniform(1, max_entry);
        for (int d = 1; d <= n; ++d) {
            rows[d].resize(n + 1 - d);
            for (int i = 0; i + d <= n; ++i) {
                int above_left = rows[d - 1][i];
                int above_right = rows[d - 1][i + 1];
                rows[d][i] = rng.uniform(0, std::min(above_left, above_right));
            }
        }
        auto r = RankConditions::from_rows(std::move(rows));
        if (r.valid()) return r;
    }
    throw std::logic_error("random_rank_conditions: rejection sampling failed");
}

}  // namespace quiver
