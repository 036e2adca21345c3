#pragma once

#include <stdexcept>
#include <vector>

#include "quiver/partition.hpp"

namespace quiver {

// Normalizes a Schur index sequence to 0 or +/- a partition.
//
// Closed form of the exchange moves: the values I_k - k (1-based k) are
// invariant as a multiset under one move, and one move swaps an adjacent
// pair of them.  A repeated value means the determinant has two equal rows,
// so the result is zero; otherwise sorting descending gives the partition
// and the parity of the sorting permutation gives the sign.
inline SignedPartition straighten(const IntSequence& seq) {
    const int p = static_cast<int>(seq.size());
    std::vector<int> v(p);
    for (int k = 0; k < p; ++k) v[k] = seq[k] - (k + 1);

    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
            if (v[a] == v[b]) return SignedPartition::zero();

    // count inversions of the descending sort
    int sign = 1;
    std::vector<int> sorted = v;
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
            if (sorted[a] < sorted[b]) {
                std::swap(sorted[a], sorted[b]);
                sign = -sign;
            }

    std::vector<int> lam(p);
    for (int k = 0; k < p; ++k) {
        lam[k] = sorted[k] + (k + 1);
        if (lam[k] < 0)
            throw std::invalid_argument("straighten: negative entries");
    }
    return SignedPartition{sign, Partition(std::move(lam))};
}

// Reference implementation by the literal exchange moves
//   (..., j_k, j_{k+1}, ...) -> (..., j_{k+1} - 1, j_k + 1, ...),
// applied at the leftmost ascent until the sequence is weakly decreasing.
// Reaching an adjacent pair with j_{k+1} = j_k + 1 yields zero.  Kept as an
// independent oracle for the closed form above.
inline SignedPartition straighten_by_moves(IntSequence seq) {
    const int p = static_cast<int>(seq.size());
    int moves = 0;
    for (;;) {
        int k = -1;
        for (int a = 0; a + 1 < p; ++a)
            if (seq[a + 1] > seq[a]) { k = a; break; }
        if (k < 0) break;  // weakly decreasing
        for (int a = 0; a + 1 < p; ++a)
            if (seq[a + 1] == seq[a] + 1) return SignedPartition::zero();
        int jk = seq[k], jk1 = seq[k + 1];
        seq[k] = jk1 - 1;
        seq[k + 1] = jk + 1;
        ++moves;
        if (moves > 1000000)
            throw std::logic_error("straighten_by_moves: did not terminate");
    }
    while (!seq.empty() && seq.back() == 0) seq.pop_back();
    return SignedPartition{moves % 2 == 0 ? 1 : -1, Partition(std::move(seq))};
}

// The index sequence <R; sigma, tau> = (e+sigma_1,...,e+sigma_f, tau_1,...)
// gluing sigma to the right of the rectangle and tau below it.
inline IntSequence attach(const Rectangle& r, const Partition& sigma,
                          const Partition& tau) {
    if (sigma.length() > r.height)
        throw std::invalid_argument("attach: sigma is longer than the rectangle height");
    IntSequence out;
    out.reserve(r.height + tau.length());
    for (int t = 1; t <= r.height; ++t) out.push_back(r.width + sigma.part(t));
    for (int t = 1; t <= tau.length(); ++t) out.push_back(tau.part(t));
    return out;
}

// Formal Gysin push-forward rewrite: the substitution producing the index
// sequence (R + lambda, mu), normalized.  rprime is the companion rectangle
// of full width supplied by the caller; only its consistency is checked.
inline SignedPartition gysin_rewrite(const Rectangle& r, const Rectangle& rprime,
                                     const Partition& lambda, const Partition& mu) {
    if (rprime.height != r.height || rprime.width < r.width)
        throw std::invalid_argument("gysin_rewrite: inconsistent rectangles");
    if (lambda.length() > r.height)
        throw std::invalid_argument("gysin_rewrite: lambda is longer than the rectangle height");
    return straighten(attach(r, lambda, mu));
}

}  // namespace quiver
