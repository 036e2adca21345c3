#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "quiver/partition.hpp"

namespace quiver {

namespace detail {

// Enumerates column-strict, row-weak fillings of the skew shape outer/inner
// whose reverse reading word (right to left along rows, top to bottom) is a
// lattice word.  Filling proceeds in reverse-reading-word order so the
// lattice condition can be checked greedily.  If target is non-null, the
// content is constrained to it; otherwise every lattice filling is visited
// and its content reported (always a partition, since the final counts of a
// lattice word weakly decrease).
inline void for_each_lattice_filling(
    const Partition& outer, const Partition& inner, const Partition* target,
    const std::function<void(const std::vector<int>& content)>& visit) {
    if (!outer.contains(inner)) return;
    const int rows = outer.length();
    const int boxes = outer.weight() - inner.weight();
    const int maxval = target ? target->length() : boxes;
    if (target && target->weight() != boxes) return;
    if (boxes == 0) {
        std::vector<int> none(maxval, 0);
        visit(none);
        return;
    }

    // grid[r][c] for c in [inner_r, outer_r)
    std::vector<std::vector<int>> grid(rows);
    for (int r = 0; r < rows; ++r) grid[r].assign(outer.part(r + 1), 0);
    std::vector<int> count(maxval + 1, 0);

    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == rows) {
            visit(std::vector<int>(count.begin() + 1, count.end()));
            return;
        }
        int nr = r, nc = c - 1;
        if (nc < inner.part(r + 1)) { nr = r + 1; nc = outer.part(r + 2) - 1; }
        while (nr < rows && nc < inner.part(nr + 1)) {
            ++nr;
            nc = outer.part(nr + 1) - 1;
        }
        if (c < inner.part(r + 1)) {  // row r has no boxes; skip ahead
            rec(nr, nc);
            return;
        }
        for (int v = 1; v <= maxval; ++v) {
            if (target && count[v] >= target->part(v)) continue;
            if (v > 1 && count[v] >= count[v - 1]) continue;  // lattice
            if (c + 1 < outer.part(r + 1) && v > grid[r][c + 1]) continue;  // row weak
            if (r > 0 && c < outer.part(r) && c >= inner.part(r) &&
                v <= grid[r - 1][c])
                continue;  // column strict
            grid[r][c] = v;
            ++count[v];
            rec(nr, nc);
            --count[v];
        }
        grid[r][c] = 0;
    };

    int r0 = 0, c0 = outer.part(1) - 1;
    while (r0 < rows && c0 < inner.part(r0 + 1)) {
        ++r0;
        c0 = outer.part(r0 + 1) - 1;
    }
    rec(r0, c0);
}

}  // namespace detail

// Littlewood-Richardson coefficient c^lambda_{sigma,tau}, by enumeration of
// lattice skew fillings of lambda/sigma with content tau.  Total: returns 0
// whenever the shapes do not nest or the weights do not add up.
inline long long lr_coefficient(const Partition& lambda, const Partition& sigma,
                                const Partition& tau) {
    if (sigma.weight() + tau.weight() != lambda.weight()) return 0;
    long long n = 0;
    detail::for_each_lattice_filling(lambda, sigma, &tau,
                                     [&](const std::vector<int>&) { ++n; });
    return n;
}

// All pairs (sigma, tau) with c^mu_{sigma,tau} > 0, with their coefficients.
inline std::map<std::pair<Partition, Partition>, long long> split_expansion(
    const Partition& mu) {
    std::map<std::pair<Partition, Partition>, long long> out;
    for (const Partition& sigma : subdiagrams_of(mu)) {
        detail::for_each_lattice_filling(
            mu, sigma, nullptr, [&](const std::vector<int>& content) {
                std::vector<int> c = content;
                while (!c.empty() && c.back() == 0) c.pop_back();
                ++out[{sigma, Partition(std::move(c))}];
            });
    }
    return out;
}

// Expansion of the product s_sigma * s_tau = sum c^lambda_{sigma,tau} s_lambda.
inline std::map<Partition, long long> lr_product_expansion(const Partition& sigma,
                                                           const Partition& tau) {
    std::map<Partition, long long> out;
    const int w = sigma.weight() + tau.weight();
    for (const Partition& lambda : partitions_of(w)) {
        if (!lambda.contains(sigma)) continue;
        if (lambda.length() > sigma.length() + tau.length()) continue;
        long long c = lr_coefficient(lambda, sigma, tau);
        if (c > 0) out[lambda] = c;
    }
    return out;
}

// The divisions of a rectangle: pairs (sigma, tau) such that sigma and the
// 180-degree rotation of tau tile it.  These are exactly the pairs with
// c^R_{sigma,tau} = 1; for rectangles every other pair gives 0.
inline std::vector<std::pair<Partition, Partition>> rectangle_divisions(
    const Rectangle& r) {
    std::vector<std::pair<Partition, Partition>> out;
    if (r.empty()) {
        out.emplace_back(Partition(), Partition());
        return out;
    }
    for (const Partition& sigma : partitions_in_box(r.width, r.height))
        out.emplace_back(sigma, rotated_complement(sigma, r));
    return out;
}

}  // namespace quiver
