#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quiver/bigint.hpp"
#include "quiver/littlewood_richardson.hpp"
#include "quiver/partition.hpp"
#include "quiver/rank_conditions.hpp"
#include "quiver/straighten.hpp"
#include "quiver/symbol_polynomial.hpp"

namespace quiver {

// Optional cross-call cache for coefficient computations.  The coefficients
// depend only on the rectangle widths and heights, so results are keyed on
// that difference data.  Callers that want sharing own an instance; the
// functions themselves keep no shared state.
struct CoefficientCache {
    std::map<std::vector<int>, QuiverPolynomial> memo;
};

namespace detail {

inline std::vector<int> difference_signature(const RankConditions& r) {
    std::vector<int> key{r.n()};
    for (int j = 1; j <= r.n(); ++j)
        for (int i = 0; i < j; ++i) {
            Rectangle rc = r.rect(i, j);
            key.push_back(rc.width);
            key.push_back(rc.height);
        }
    return key;
}

using SplitCache =
    std::map<Partition, std::vector<std::pair<std::pair<Partition, Partition>, long long>>>;

inline const std::vector<std::pair<std::pair<Partition, Partition>, long long>>&
split_options(const Partition& mu, SplitCache& cache) {
    auto it = cache.find(mu);
    if (it == cache.end()) {
        std::vector<std::pair<std::pair<Partition, Partition>, long long>> v;
        for (const auto& [st, c] : split_expansion(mu)) v.push_back({st, c});
        it = cache.emplace(mu, std::move(v)).first;
    }
    return it->second;
}

inline QuiverPolynomial coefficients_impl(const RankConditions& r,
                                          CoefficientCache* cache,
                                          SplitCache& splits) {
    const int n = r.n();
    if (n == 0) return QuiverPolynomial::unit(0);

    std::vector<int> key;
    if (cache) {
        key = difference_signature(r);
        auto it = cache->memo.find(key);
        if (it != cache->memo.end()) return it->second;
    }

    QuiverPolynomial out(n);
    if (n == 1) {
        out.add_term({r.rect(0, 1).to_partition()}, 1);
    } else {
        QuiverPolynomial inner = coefficients_impl(r.delete_top_row(), cache, splits);

        // top-row rectangles R_i = R_{i-1,i}, 1-based i
        std::vector<Rectangle> top(n + 1);
        for (int i = 1; i <= n; ++i) top[i] = r.rect(i - 1, i);

        for (const auto& [mu, d] : inner.terms()) {
            // admissible splits (sigma(i), tau(i)) of each mu(i), i = 1..n-1
            std::vector<std::vector<std::pair<std::pair<Partition, Partition>, long long>>>
                options(n);
            for (int i = 1; i <= n - 1; ++i) {
                for (const auto& opt : split_options(mu[i - 1], splits))
                    if (opt.first.first.length() <= top[i].height)
                        options[i].push_back(opt);
            }

            // walk the product of choices, straightening slot by slot
            LambdaTuple lam(n);
            std::function<void(int, const Partition&, Integer)> walk =
                [&](int i, const Partition& tau_prev, Integer coeff) {
                    if (i == n) {
                        SignedPartition s = straighten(attach(top[n], Partition(), tau_prev));
                        if (s.is_zero()) return;
                        lam[n - 1] = s.shape;
                        out.add_term(lam, coeff * Integer(s.sign));
                        return;
                    }
                    for (const auto& [st, c] : options[i]) {
                        SignedPartition s = straighten(attach(top[i], st.first, tau_prev));
                        if (s.is_zero()) continue;
                        lam[i - 1] = s.shape;
                        walk(i + 1, st.second, coeff * Integer(c) * Integer(s.sign));
                    }
                };
            walk(1, Partition(), d);
        }
    }

    if (cache) cache->memo.emplace(std::move(key), out);
    return out;
}

}  // namespace detail

// The coefficients c_lambda(r): the formal sum  sum_lambda c_lambda(r) S(lambda)
// built by induction on the number of maps.  The base case is the single
// rectangle; the inductive step deletes the top row of the rectangle array,
// expands every inner symbol S(mu) through all Littlewood-Richardson splits
// (sigma(i), tau(i)) of its slots with length(sigma(i)) bounded by the height
// of the top-row rectangle R_i, attaches <R_i; sigma(i), tau(i-1)>, and
// normalizes every slot by straightening.
inline QuiverPolynomial coefficients(const RankConditions& r,
                                     CoefficientCache* cache = nullptr) {
    r.require_valid();
    detail::SplitCache splits;
    return detail::coefficients_impl(r, cache, splits);
}

// Closed form when the rectangle array has at most two non-empty rows
// (R_{ij} empty for j - i > 2): one term for every family of divisions
// (sigma(i), tau(i)) of the middle rectangles R_{i-1,i+1}, all coefficients 1.
inline QuiverPolynomial coefficients_two_row(const RankConditions& r) {
    r.require_valid();
    const int n = r.n();
    for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
            if (j - i > 2 && !r.rect(i, j).empty())
                throw std::invalid_argument(
                    "coefficients_two_row: rectangle array has a non-empty row below "
                    "the second");

    QuiverPolynomial out(n);
    if (n == 0) return QuiverPolynomial::unit(0);
    if (n == 1) {
        out.add_term({r.rect(0, 1).to_partition()}, 1);
        return out;
    }

    std::vector<Rectangle> top(n + 1);
    for (int i = 1; i <= n; ++i) top[i] = r.rect(i - 1, i);
    std::vector<std::vector<std::pair<Partition, Partition>>> divisions(n);
    for (int i = 1; i <= n - 1; ++i) divisions[i] = rectangle_divisions(r.rect(i - 1, i + 1));

    LambdaTuple lam(n);
    std::function<void(int, const Partition&)> walk = [&](int i, const Partition& tau_prev) {
        if (i == n) {
            SignedPartition s = straighten(attach(top[n], Partition(), tau_prev));
            if (s.is_zero() || s.sign != 1)
                throw std::logic_error("coefficients_two_row: attach output not a partition");
            lam[n - 1] = s.shape;
            out.add_term(lam, 1);
            return;
        }
        for (const auto& [sigma, tau] : divisions[i]) {
            if (sigma.length() > top[i].height)
                throw std::logic_error("coefficients_two_row: division does not fit");
            SignedPartition s = straighten(attach(top[i], sigma, tau_prev));
            if (s.is_zero() || s.sign != 1)
                throw std::logic_error("coefficients_two_row: attach output not a partition");
            lam[i - 1] = s.shape;
            walk(i + 1, tau);
        }
    };
    walk(1, Partition());
    return out;
}

// Transport along duality: lambda -> (lambda(n)', ..., lambda(1)').
inline LambdaTuple dual_tuple(const LambdaTuple& t) {
    LambdaTuple out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        out[i] = t[t.size() - 1 - i].conjugate();
    return out;
}

inline QuiverPolynomial dual_transport(const QuiverPolynomial& p) {
    return p.mapped(p.arity(), [](const LambdaTuple& t) { return dual_tuple(t); });
}

// Coefficient polynomial of omit(r, k), re-expanded to the full bundle
// sequence: interior omissions split the merged slot by the
// Littlewood-Richardson coproduct, endpoint omissions prepend or append an
// empty slot.  Must reproduce coefficients(r) exactly.
inline QuiverPolynomial omit_and_expand(const RankConditions& r, int k,
                                        CoefficientCache* cache = nullptr) {
    const int n = r.n();
    QuiverPolynomial p = coefficients(r.omit(k), cache);
    if (k == 0) {
        return p.mapped(n, [](const LambdaTuple& t) {
            LambdaTuple nt{Partition()};
            nt.insert(nt.end(), t.begin(), t.end());
            return nt;
        });
    }
    if (k == n) {
        return p.mapped(n, [](const LambdaTuple& t) {
            LambdaTuple nt = t;
            nt.push_back(Partition());
            return nt;
        });
    }
    return expand_slot_split(p, k);
}

}  // namespace quiver
