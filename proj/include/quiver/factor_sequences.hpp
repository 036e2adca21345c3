#pragma once

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quiver/partition.hpp"
#include "quiver/rank_conditions.hpp"
#include "quiver/symbol_polynomial.hpp"
#include "quiver/tableau.hpp"

namespace quiver {

// A fixed array of rectangular tableaux T_{ij} on the rectangle array of some
// rank conditions.  Dimensions of empty rectangles are kept: the direct
// factor-sequence test consumes the height of a rectangle of width zero.
struct TableauArray {
    int n = 0;
    std::map<std::pair<int, int>, Rectangle> dims;
    std::map<std::pair<int, int>, Tableau> tabs;

    const Rectangle& dim(int i, int j) const { return dims.at({i, j}); }
    const Tableau& tab(int i, int j) const { return tabs.at({i, j}); }

    // The array of the bottom n-1 rows (rectangles of depth >= 2 reindexed).
    TableauArray lower() const {
        if (n < 1) throw std::invalid_argument("TableauArray::lower: empty array");
        TableauArray out;
        out.n = n - 1;
        for (int j = 1; j <= n - 1; ++j)
            for (int i = 0; i < j; ++i) {
                out.dims[{i, j}] = dim(i, j + 1);
                out.tabs[{i, j}] = tab(i, j + 1);
            }
        return out;
    }

    // Wedge ordering: every entry of T_{ij} is strictly smaller than every
    // entry of T_{kl} whenever k <= i, l >= j and (k,l) != (i,j).
    bool wedge_ok() const {
        auto max_entry = [](const Tableau& t) {
            int m = 0;
            for (const auto& row : t.rows())
                for (int v : row) m = std::max(m, v);
            return m;
        };
        auto min_entry = [](const Tableau& t) {
            int m = 0;
            for (const auto& row : t.rows())
                for (int v : row) m = (m == 0) ? v : std::min(m, v);
            return m;
        };
        for (const auto& [ij, t] : tabs) {
            if (t.empty()) continue;
            for (const auto& [kl, u] : tabs) {
                if (u.empty() || kl == ij) continue;
                if (kl.first <= ij.first && kl.second >= ij.second &&
                    max_entry(t) >= min_entry(u))
                    return false;
            }
        }
        return true;
    }
};

namespace detail {

inline int depth_height_budget(const RankConditions& r, int d) {
    int h = 0;
    for (int i = 0; i + d <= r.n(); ++i) {
        Rectangle rc = r.rect(i, i + d);
        if (!rc.empty()) h = std::max(h, rc.height);
    }
    return h;
}

}  // namespace detail

// Deterministic wedge-compatible array: rectangles are banded by depth j-i,
// and T_{ij} at depth d is filled row-constant with base(d) + t in row t,
// where base(d) is the total height budget of the shallower depths (empty
// rectangles contribute no entries and no budget).
inline TableauArray standard_array(const RankConditions& r) {
    r.require_valid();
    TableauArray out;
    out.n = r.n();
    std::vector<int> base(r.n() + 1, 0);
    for (int d = 2; d <= r.n(); ++d)
        base[d] = base[d - 1] + detail::depth_height_budget(r, d - 1);
    for (int j = 1; j <= r.n(); ++j)
        for (int i = 0; i < j; ++i) {
            Rectangle rc = r.rect(i, j);
            out.dims[{i, j}] = rc;
            if (rc.empty()) {
                out.tabs[{i, j}] = Tableau();
            } else {
                std::vector<std::vector<int>> rows;
                for (int t = 1; t <= rc.height; ++t)
                    rows.push_back(std::vector<int>(rc.width, base[j - i] + t));
                out.tabs[{i, j}] = Tableau(std::move(rows));
            }
        }
    return out;
}

// Alternative wedge-compatible array with globally distinct entries: used to
// check that the factor-sequence counts do not depend on the fixed tableaux.
inline TableauArray distinct_array(const RankConditions& r) {
    r.require_valid();
    TableauArray out;
    out.n = r.n();
    int next = 1;
    for (int d = 1; d <= r.n(); ++d)
        for (int i = 0; i + d <= r.n(); ++i) {
            Rectangle rc = r.rect(i, i + d);
            out.dims[{i, i + d}] = rc;
            if (rc.empty()) {
                out.tabs[{i, i + d}] = Tableau();
                continue;
            }
            std::vector<std::vector<int>> rows;
            for (int t = 0; t < rc.height; ++t) {
                std::vector<int> row(rc.width);
                for (int c = 0; c < rc.width; ++c) row[c] = next + t * rc.width + c;
                rows.push_back(std::move(row));
            }
            next += rc.area();
            out.tabs[{i, i + d}] = Tableau(std::move(rows));
        }
    return out;
}

using FactorSequence = std::vector<Tableau>;

using FactorizationMap =
    std::map<std::pair<Partition, Partition>, std::vector<std::pair<Tableau, Tableau>>>;

// All plactic factorizations T = P * Q, keyed by the shape pair.  Candidates
// are enumerated over sub-multisets of T's content, which is exhaustive
// because the plactic product preserves the content multiset.
inline FactorizationMap factorizations(const Tableau& t) {
    FactorizationMap out;
    const std::map<int, int> full = t.content();
    std::vector<std::pair<int, int>> letters(full.begin(), full.end());
    std::vector<int> take(letters.size(), 0);

    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == letters.size()) {
            std::map<int, int> left, right;
            for (std::size_t k = 0; k < letters.size(); ++k) {
                if (take[k] > 0) left[letters[k].first] = take[k];
                if (letters[k].second - take[k] > 0)
                    right[letters[k].first] = letters[k].second - take[k];
            }
            for (const Tableau& p : ssyt_with_content(left)) {
                if (!t.shape().contains(p.shape())) continue;
                for (const Tableau& q : ssyt_with_content(right)) {
                    if (!t.shape().contains(q.shape())) continue;
                    if (product(p, q) == t)
                        out[{p.shape(), q.shape()}].push_back({p, q});
                }
            }
            return;
        }
        for (int k = 0; k <= letters[idx].second; ++k) {
            take[idx] = k;
            rec(idx + 1);
        }
        take[idx] = 0;
    };
    rec(0);
    return out;
}

namespace detail {

struct FactorizationCache {
    std::map<Tableau, FactorizationMap> memo;

    const FactorizationMap& get(const Tableau& t) {
        auto it = memo.find(t);
        if (it == memo.end()) it = memo.emplace(t, factorizations(t)).first;
        return it->second;
    }
};

inline std::set<FactorSequence> factor_sequences_impl(const TableauArray& arr,
                                                      FactorizationCache& cache) {
    std::set<FactorSequence> out;
    if (arr.n == 0) {
        out.insert(FactorSequence{});
        return out;
    }
    if (arr.n == 1) {
        out.insert({arr.tab(0, 1)});
        return out;
    }
    const int n = arr.n;
    std::set<FactorSequence> lower = factor_sequences_impl(arr.lower(), cache);
    for (const FactorSequence& s : lower) {
        // choose a factorization S_i = P_i * Q_i for every i = 1..n-1
        std::vector<std::vector<std::pair<Tableau, Tableau>>> options(n - 1);
        for (int i = 0; i < n - 1; ++i) {
            for (const auto& [shapes, pairs] : cache.get(s[i]))
                options[i].insert(options[i].end(), pairs.begin(), pairs.end());
        }
        FactorSequence seq(n);
        std::function<void(int, const Tableau&)> walk = [&](int i, const Tableau& q_prev) {
            if (i == n) {
                seq[n - 1] = product(q_prev, arr.tab(n - 1, n));
                out.insert(seq);
                return;
            }
            for (const auto& [pi, qi] : options[i - 1]) {
                seq[i - 1] = product(product(q_prev, arr.tab(i - 1, i)), pi);
                walk(i + 1, qi);
            }
        };
        walk(1, Tableau());
    }
    return out;
}

}  // namespace detail

// The set of factor sequences of the array: factor sequences of the bottom
// n-1 rows, each entry factored arbitrarily as S_i = P_i * Q_i, assembled as
// (T_01 * P_1, ..., Q_{i-1} * T_{i-1,i} * P_i, ..., Q_{n-1} * T_{n-1,n}).
// The same sequence can arise from many factoring choices; the result is the
// deduplicated set.
inline std::set<FactorSequence> factor_sequences(const TableauArray& arr) {
    detail::FactorizationCache cache;
    return detail::factor_sequences_impl(arr, cache);
}

inline std::map<LambdaTuple, long long> shape_counts(const std::set<FactorSequence>& seqs) {
    std::map<LambdaTuple, long long> out;
    for (const FactorSequence& s : seqs) {
        LambdaTuple t;
        t.reserve(s.size());
        for (const Tableau& tab : s) t.push_back(tab.shape());
        ++out[t];
    }
    return out;
}

// Direct factor-sequence test, top row first: each T_i must contain
// T_{i-1,i} literally in its top-left corner (R_i.height rows, R_i.width
// columns); P_i is what lies right of that block within the first R_i.height
// rows and Q_{i-1} everything below.  The sequence is accepted iff Q_0 and
// P_n are empty and (P_1*Q_1, ..., P_{n-1}*Q_{n-1}) passes for the lower rows.
inline bool is_factor_sequence(const TableauArray& arr, const FactorSequence& seq) {
    const int n = arr.n;
    if (static_cast<int>(seq.size()) != n) return false;
    if (n == 0) return true;

    std::vector<Tableau> p(n + 1), q(n);  // p[i] for i=1..n, q[i] for i=0..n-1
    for (int i = 1; i <= n; ++i) {
        const Tableau& t = seq[i - 1];
        const Rectangle rc = arr.dim(i - 1, i);
        const Tableau& block = arr.tab(i - 1, i);
        const auto& rows = t.rows();
        const int nrows = static_cast<int>(rows.size());

        std::vector<std::vector<int>> right, below;
        for (int r = 0; r < rc.height; ++r) {
            int len = r < nrows ? static_cast<int>(rows[r].size()) : 0;
            if (len < rc.width) return false;  // block does not fit
            for (int c = 0; c < rc.width; ++c)
                if (rows[r][c] != block.rows()[r][c]) return false;
            if (len > rc.width)
                right.emplace_back(rows[r].begin() + rc.width, rows[r].end());
        }
        for (int r = rc.height; r < nrows; ++r) below.push_back(rows[r]);
        p[i] = Tableau(std::move(right));
        q[i - 1] = Tableau(std::move(below));
    }
    if (!q[0].empty() || !p[n].empty()) return false;
    if (n == 1) return true;

    FactorSequence lower(n - 1);
    for (int i = 1; i <= n - 1; ++i) lower[i - 1] = product(p[i], q[i]);
    return is_factor_sequence(arr.lower(), lower);
}

}  // namespace quiver
