#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quiver/coefficients.hpp"
#include "quiver/factor_sequences.hpp"
#include "quiver/littlewood_richardson.hpp"
#include "quiver/paths.hpp"
#include "quiver/random.hpp"
#include "quiver/rank_conditions.hpp"
#include "quiver/schubert.hpp"
#include "quiver/schur_eval.hpp"
#include "quiver/straighten.hpp"
#include "quiver/tableau.hpp"

namespace quiver {

struct VerifyConfig {
    std::uint64_t seed = kDefaultSeed;
    int trials = 10;
    int max_n = 3;
    int max_entry = 4;

    static constexpr std::uint64_t kDefaultSeed = 20260101ULL;
};

struct SuiteResult {
    std::string name;
    long long pass = 0;
    long long fail = 0;
    std::vector<std::string> failures;  // first few diagnostics

    explicit SuiteResult(std::string n) : name(std::move(n)) {}

    void check(bool ok, const std::string& what) {
        if (ok) {
            ++pass;
        } else {
            ++fail;
            if (failures.size() < 5) failures.push_back(what);
        }
    }
};

namespace verify_detail {

inline int max_rectangle_side(const RankConditions& r) {
    int m = 0;
    for (int j = 1; j <= r.n(); ++j)
        for (int i = 0; i < j; ++i) {
            m = std::max(m, r.rect(i, j).width);
            m = std::max(m, r.rect(i, j).height);
        }
    return m;
}

inline std::vector<RankConditions> sample_instances(
    std::uint64_t seed, int count, int max_n, int max_entry,
    const std::function<bool(const RankConditions&)>& keep = nullptr) {
    std::vector<RankConditions> out;
    std::uint64_t index = 0;
    while (static_cast<int>(out.size()) < count) {
        SplitMix64 rng(derive_seed(seed, index++));
        RankConditions r = random_rank_conditions(rng, max_n, max_entry);
        if (!keep || keep(r)) out.push_back(std::move(r));
        if (index > 200000ULL * static_cast<std::uint64_t>(count))
            throw std::logic_error("sample_instances: filter rejects too often");
    }
    return out;
}

inline std::vector<int> random_roots(SplitMix64& rng, int max_count, int max_abs) {
    int k = rng.uniform(0, max_count);
    std::vector<int> out(k);
    for (int& v : out) v = rng.uniform(-max_abs, max_abs);
    return out;
}

}  // namespace verify_detail

// --- schur-core suites ----------------------------------------------------

inline SuiteResult suite_straighten_agreement() {
    SuiteResult s{"straighten-agreement"};
    for (int len = 1; len <= 4; ++len) {
        std::vector<int> seq(len, 0);
        for (;;) {
            s.check(straighten(seq) == straighten_by_moves(seq),
                    "sequence disagreement");
            int k = len - 1;
            while (k >= 0 && seq[k] == 6) seq[k--] = 0;
            if (k < 0) break;
            ++seq[k];
        }
    }
    return s;
}

inline SuiteResult suite_lr_symmetry() {
    SuiteResult s{"lr-symmetry"};
    for (int w = 0; w <= 6; ++w)
        for (const Partition& lam : partitions_of(w)) {
            auto splits = split_expansion(lam);
            for (const auto& [st, c] : splits) {
                auto it = splits.find({st.second, st.first});
                s.check(it != splits.end() && it->second == c,
                        "c^" + lam.to_string() + " not symmetric at " +
                            st.first.to_string() + "," + st.second.to_string());
            }
        }
    return s;
}

inline SuiteResult suite_rectangle_lr() {
    SuiteResult s{"rectangle-lr"};
    for (int w = 1; w <= 3; ++w)
        for (int h = 1; h <= 3; ++h) {
            Rectangle box{w, h};
            Partition r = box.to_partition();
            for (int a = 0; a <= box.area(); ++a)
                for (const Partition& sigma : partitions_of(a))
                    for (const Partition& tau : partitions_of(box.area() - a)) {
                        long long c = lr_coefficient(r, sigma, tau);
                        bool fits = sigma.length() <= h && sigma.part(1) <= w &&
                                    tau.length() <= h && tau.part(1) <= w;
                        bool expected =
                            fits && tau == rotated_complement(sigma, box);
                        s.check(c == (expected ? 1 : 0),
                                "rectangle rule fails at " + sigma.to_string() + "," +
                                    tau.to_string() + " in " + r.to_string());
                    }
        }
    return s;
}

inline SuiteResult suite_split_identity(std::uint64_t seed, int rounds) {
    SuiteResult s{"split-identity"};
    SplitMix64 rng(derive_seed(seed, 0xC0FFEE));
    for (int t = 0; t < rounds; ++t) {
        std::vector<int> e1 = verify_detail::random_roots(rng, 3, 4);
        std::vector<int> e2 = verify_detail::random_roots(rng, 3, 4);
        std::vector<int> e3 = verify_detail::random_roots(rng, 3, 4);
        for (int w = 0; w <= 4; ++w)
            for (const Partition& mu : partitions_of(w)) {
                Integer lhs = eval_schur_difference(mu, e3, e1);
                Integer rhs = 0;
                for (const auto& [st, c] : split_expansion(mu))
                    rhs += Integer(c) * eval_schur_difference(st.first, e2, e1) *
                           eval_schur_difference(st.second, e3, e2);
                s.check(lhs == rhs, "split identity fails for mu=" + mu.to_string());
            }
    }
    return s;
}

inline SuiteResult suite_factorization_identity(std::uint64_t seed, int rounds) {
    SuiteResult s{"factorization-identity"};
    SplitMix64 rng(derive_seed(seed, 0xFAC70));
    for (int t = 0; t < rounds; ++t) {
        for (int e = 1; e <= 3; ++e)
            for (int f = 1; f <= 3; ++f) {
                std::vector<int> xs(f), ys(e);
                for (int& v : xs) v = rng.uniform(-4, 4);
                for (int& v : ys) v = rng.uniform(-4, 4);
                Rectangle box{e, f};
                for (int w = 0; w <= 3; ++w)
                    for (const Partition& lam : partitions_of(w)) {
                        if (lam.length() > f) continue;
                        Integer lhs = eval_schur_difference(lam, xs, {}) *
                                      eval_schur_difference(box.to_partition(), xs, ys);
                        std::vector<int> seq = attach(box, lam, Partition());
                        SignedPartition sp = straighten(seq);
                        Integer rhs = sp.is_zero()
                                          ? Integer()
                                          : Integer(sp.sign) *
                                                eval_schur_difference(sp.shape, xs, ys);
                        s.check(lhs == rhs,
                                "factorization identity fails for lambda=" +
                                    lam.to_string());
                    }
            }
    }
    return s;
}

// --- quiver suites ---------------------------------------------------------

// At least `deep` non-empty rectangles strictly below the top row; used to
// bias samples toward instances whose expansions have many terms.
inline std::function<bool(const RankConditions&)> rich_filter(int deep) {
    return [deep](const RankConditions& r) {
        int count = 0;
        for (int j = 2; j <= r.n(); ++j)
            for (int i = 0; i + 2 <= j; ++i)
                if (!r.rect(i, j).empty()) ++count;
        return count >= deep;
    };
}

inline SuiteResult suite_homogeneity_positivity(
    std::uint64_t seed, int trials, int max_n, int max_entry,
    const std::function<bool(const RankConditions&)>& keep = nullptr) {
    SuiteResult s{"homogeneity-positivity"};
    auto instances =
        verify_detail::sample_instances(seed, trials, max_n, max_entry, keep);
    CoefficientCache cache;
    for (const RankConditions& r : instances) {
        QuiverPolynomial p = coefficients(r, &cache);
        int d = r.codim();
        bool ok = !p.is_zero();
        for (const auto& [lam, c] : p.terms()) {
            int total = 0;
            for (const Partition& part : lam) total += part.weight();
            ok = ok && total == d && c.sign() > 0;
        }
        s.check(ok, "homogeneity/positivity fails for\n" + r.to_text());
    }
    return s;
}

inline SuiteResult suite_difference_invariance(std::uint64_t seed, int trials,
                                               int max_n, int max_entry) {
    SuiteResult s{"difference-invariance"};
    auto instances = verify_detail::sample_instances(seed, trials, max_n, max_entry);
    for (const RankConditions& r : instances) {
        QuiverPolynomial p = coefficients(r);
        s.check(coefficients(r.shifted(1)) == p && coefficients(r.shifted(2)) == p,
                "shift changes coefficients for\n" + r.to_text());
    }
    return s;
}

inline SuiteResult suite_duality(
    std::uint64_t seed, int trials, int max_n, int max_entry,
    const std::function<bool(const RankConditions&)>& keep = nullptr) {
    SuiteResult s{"duality"};
    auto instances =
        verify_detail::sample_instances(seed, trials, max_n, max_entry, keep);
    CoefficientCache cache;
    for (const RankConditions& r : instances) {
        s.check(coefficients(r.dual(), &cache) == dual_transport(coefficients(r, &cache)),
                "duality fails for\n" + r.to_text());
    }
    return s;
}

inline SuiteResult suite_two_row(std::uint64_t seed, int trials, int max_n,
                                 int max_entry) {
    SuiteResult s{"two-row"};
    auto two_row_ok = [](const RankConditions& r) {
        for (int j = 1; j <= r.n(); ++j)
            for (int i = 0; i < j; ++i)
                if (j - i > 2 && !r.rect(i, j).empty()) return false;
        return true;
    };
    auto instances =
        verify_detail::sample_instances(seed, trials, max_n, max_entry, two_row_ok);
    for (const RankConditions& r : instances) {
        QuiverPolynomial a = coefficients(r);
        QuiverPolynomial b = coefficients_two_row(r);
        bool ones = true;
        for (const auto& [lam, c] : b.terms()) ones = ones && c == Integer(1);
        s.check(a == b && ones, "two-row closed form fails for\n" + r.to_text());
    }
    return s;
}

// Varying the height of empty rectangles: adding a constant to rows
// 0..i0 of the bundle indices changes only the heights in rectangle row i0,
// which is admissible when that row consists of width-zero rectangles.
inline SuiteResult suite_empty_height_independence(std::uint64_t seed, int trials,
                                                   int max_entry) {
    SuiteResult s{"empty-height-independence"};
    auto instances = verify_detail::sample_instances(seed, trials, 3, max_entry);
    for (const RankConditions& r : instances) {
        QuiverPolynomial p = coefficients(r);
        for (int i0 = 0; i0 < r.n(); ++i0) {
            bool all_zero_width = true;
            for (int j = i0 + 1; j <= r.n(); ++j)
                all_zero_width = all_zero_width && r.rect(i0, j).width == 0;
            if (!all_zero_width) continue;
            for (int delta : {-1, 1}) {
                std::vector<std::vector<int>> rows;
                for (int d = 0; d <= r.n(); ++d) {
                    std::vector<int> row;
                    for (int i = 0; i + d <= r.n(); ++i) {
                        int v = r.rank(i, i + d) + (i <= i0 ? delta : 0);
                        row.push_back(v);
                    }
                    rows.push_back(std::move(row));
                }
                bool nonneg = true;
                for (const auto& row : rows)
                    for (int v : row) nonneg = nonneg && v >= 0;
                if (!nonneg) continue;
                RankConditions r2 = RankConditions::from_rows(rows);
                if (!r2.valid()) continue;
                s.check(coefficients(r2) == p,
                        "empty-rectangle height dependence for\n" + r.to_text());
            }
        }
    }
    return s;
}

inline SuiteResult suite_omission(std::uint64_t seed, int trials, int max_n,
                                  int max_entry) {
    SuiteResult s{"omission"};
    auto instances = verify_detail::sample_instances(seed, trials, max_n, max_entry);
    for (const RankConditions& r : instances) {
        QuiverPolynomial p = coefficients(r);
        for (int k : r.inessential_indices())
            s.check(omit_and_expand(r, k) == p,
                    "omission identity fails at k=" + std::to_string(k) + " for\n" +
                        r.to_text());
    }
    return s;
}

// --- plactic suites ---------------------------------------------------------

inline std::vector<Tableau> all_tableaux(int max_boxes, int max_entry) {
    std::vector<Tableau> out;
    for (int w = 0; w <= max_boxes; ++w)
        for (const Partition& shape : partitions_of(w)) {
            if (shape.length() > max_entry) continue;
            auto v = ssyt_of_shape(shape, max_entry);
            out.insert(out.end(), v.begin(), v.end());
        }
    return out;
}

inline SuiteResult suite_plactic_product() {
    SuiteResult s{"plactic-product"};
    std::vector<Tableau> small = all_tableaux(4, 3);
    for (const Tableau& p : small)
        for (const Tableau& q : small)
            s.check(product(p, q) == jdt_product(p, q),
                    "jdt vs insertion mismatch");
    std::vector<Tableau> tiny = all_tableaux(3, 3);
    for (const Tableau& a : tiny)
        for (const Tableau& b : tiny)
            for (const Tableau& c : tiny)
                s.check(product(product(a, b), c) == product(a, product(b, c)),
                        "associativity fails");
    return s;
}

inline SuiteResult suite_factorization_lr_duality(int max_boxes) {
    SuiteResult s{"factorization-lr-duality"};
    for (int w = 0; w <= max_boxes; ++w)
        for (const Partition& shape : partitions_of(w)) {
            if (shape.length() > 3) continue;
            auto tabs = ssyt_of_shape(shape, 3);
            for (const Tableau& t : tabs) {
                auto fac = factorizations(t);
                // counts must match LR coefficients (hence be entry-independent)
                std::map<std::pair<Partition, Partition>, long long> counts;
                for (const auto& [st, pairs] : fac)
                    counts[st] = static_cast<long long>(pairs.size());
                bool ok = true;
                for (const auto& [st, c] : split_expansion(shape))
                    ok = ok && counts[st] == c;
                long long total = 0;
                for (const auto& [st, c] : counts) total += c;
                long long expect = 0;
                for (const auto& [st, c] : split_expansion(shape)) expect += c;
                s.check(ok && total == expect,
                        "factorization counts differ from LR for shape " +
                            shape.to_string());
            }
        }
    return s;
}

inline SuiteResult suite_factor_sequence_counts(std::uint64_t seed, int trials, int min_codim = 0) {
    SuiteResult s{"factor-sequence-counts"};
    auto small_sides = [min_codim](const RankConditions& r) {
        return verify_detail::max_rectangle_side(r) <= 2 && r.codim() >= min_codim;
    };
    auto instances = verify_detail::sample_instances(seed, trials, 3, 3, small_sides);
    CoefficientCache cache;
    for (const RankConditions& r : instances) {
        QuiverPolynomial p = coefficients(r, &cache);
        auto counts = shape_counts(factor_sequences(standard_array(r)));
        bool ok = counts.size() == p.term_count();
        for (const auto& [lam, c] : counts)
            ok = ok && p.coefficient(lam) == Integer(c);
        s.check(ok, "factor-sequence counts differ for\n" + r.to_text());
    }
    return s;
}

inline SuiteResult suite_direct_test_and_choice(std::uint64_t seed, int trials,
                                                int min_codim = 0) {
    SuiteResult s{"direct-test-and-choice"};
    auto small_sides = [min_codim](const RankConditions& r) {
        return verify_detail::max_rectangle_side(r) <= 2 && r.codim() >= min_codim;
    };
    auto instances = verify_detail::sample_instances(seed, trials, 3, 3, small_sides);
    for (const RankConditions& r : instances) {
        TableauArray arr = standard_array(r);
        auto seqs = factor_sequences(arr);
        bool sound = true;
        for (const FactorSequence& fs : seqs) sound = sound && is_factor_sequence(arr, fs);
        s.check(sound, "generated sequence rejected by direct test for\n" + r.to_text());

        TableauArray alt = distinct_array(r);
        s.check(alt.wedge_ok() && arr.wedge_ok(), "array violates wedge order");
        s.check(shape_counts(factor_sequences(alt)) == shape_counts(seqs),
                "counts depend on the fixed tableaux for\n" + r.to_text());
    }
    return s;
}

// --- schubert suites --------------------------------------------------------

inline SuiteResult suite_schubert(int max_m) {
    SuiteResult s{"schubert-specialization"};
    for (int m = 1; m <= max_m; ++m) {
        for (const Permutation& w : Permutation::all(m + 1)) {
            QuiverPolynomial p = coefficients(rank_conditions_from(w, m));
            s.check(specialize_single(p, m) == schubert_oracle(w, m, false),
                    "single Schubert mismatch for w=" + w.to_string());
            s.check(specialize_double(p, m) == schubert_oracle(w, m, true),
                    "double Schubert mismatch for w=" + w.to_string());
        }
    }
    return s;
}

inline SuiteResult suite_schubert_oracle_words(int max_m) {
    SuiteResult s{"schubert-oracle-reduced-words"};
    for (int m = 1; m <= max_m; ++m)
        for (const Permutation& w : Permutation::all(m + 1)) {
            s.check(schubert_oracle(w, m, false) == schubert_oracle(w, m, false, true),
                    "single oracle depends on reduced word for w=" + w.to_string());
            s.check(schubert_oracle(w, m, true) == schubert_oracle(w, m, true, true),
                    "double oracle depends on reduced word for w=" + w.to_string());
        }
    return s;
}

inline SuiteResult suite_dprime(int max_m) {
    SuiteResult s{"dprime-criterion"};
    for (int m = 1; m <= max_m; ++m)
        for (const Permutation& w : Permutation::all(m + 1)) {
            RankConditions r = rank_conditions_from(w, m);
            for (int j = 1; j <= r.n(); ++j)
                for (int i = 0; i < j; ++i)
                    s.check(dprime_criterion(w, m, i, j) == !r.rect(i, j).empty(),
                            "criterion disagrees with rectangle at (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ") for w=" + w.to_string());
        }
    return s;
}

// --- path suites -------------------------------------------------------------

inline SuiteResult suite_paths(std::uint64_t seed, int trials, int max_entry) {
    SuiteResult s{"path-engine"};
    auto instances = verify_detail::sample_instances(seed, trials, 3, max_entry);
    for (const RankConditions& r : instances) {
        const int n = r.n();
        QuiverPolynomial low = path_phi(r, Path::lowest(n));
        s.check(low == QuiverPolynomial::unit(2 * n),
                "lowest path is not the empty symbol for\n" + r.to_text());
        QuiverPolynomial a = path_phi(r, Path::top(n), false);
        QuiverPolynomial b = path_phi(r, Path::top(n), true);
        s.check(a == b, "raising order changes the result for\n" + r.to_text());
        s.check(a == coefficients(r), "top path differs from coefficients for\n" + r.to_text());
    }
    return s;
}

inline SuiteResult suite_split_roundtrip() {
    SuiteResult s{"split-roundtrip"};
    for (int w = 0; w <= 4; ++w)
        for (const Partition& mu : partitions_of(w)) {
            Tableau t = superstandard(mu);
            auto fac = factorizations(t);
            auto splits = split_expansion(mu);
            bool ok = fac.size() == splits.size();
            for (const auto& [st, c] : splits) {
                auto it = fac.find(st);
                ok = ok && it != fac.end() &&
                     static_cast<long long>(it->second.size()) == c;
            }
            for (const auto& [st, pairs] : fac)
                for (const auto& [p, q] : pairs) ok = ok && product(p, q) == t;
            s.check(ok, "coproduct split / re-multiplication mismatch for mu=" +
                            mu.to_string());
        }
    return s;
}

// Every suite the `verify` command runs, in a fixed order.
inline std::vector<SuiteResult> run_verify(const VerifyConfig& cfg) {
    std::vector<SuiteResult> out;
    out.push_back(suite_straighten_agreement());
    out.push_back(suite_lr_symmetry());
    out.push_back(suite_rectangle_lr());
    out.push_back(suite_split_identity(cfg.seed, std::min(cfg.trials, 20)));
    out.push_back(suite_factorization_identity(cfg.seed, std::min(cfg.trials, 5)));
    out.push_back(suite_homogeneity_positivity(cfg.seed, cfg.trials, cfg.max_n,
                                               cfg.max_entry));
    out.push_back(suite_difference_invariance(cfg.seed, cfg.trials, cfg.max_n,
                                              cfg.max_entry));
    out.push_back(suite_duality(cfg.seed, cfg.trials, cfg.max_n, cfg.max_entry));
    out.push_back(suite_two_row(cfg.seed, cfg.trials, std::min(cfg.max_n, 4), 3));
    out.push_back(suite_empty_height_independence(cfg.seed, cfg.trials, cfg.max_entry));
    out.push_back(suite_omission(cfg.seed, cfg.trials, cfg.max_n, cfg.max_entry));
    out.push_back(suite_plactic_product());
    out.push_back(suite_factorization_lr_duality(5));
    out.push_back(suite_factor_sequence_counts(cfg.seed, cfg.trials));
    out.push_back(suite_direct_test_and_choice(cfg.seed, std::min(cfg.trials, 10)));
    out.push_back(suite_schubert(2));
    out.push_back(suite_schubert_oracle_words(3));
    out.push_back(suite_dprime(3));
    out.push_back(suite_paths(cfg.seed, std::min(cfg.trials, 10), cfg.max_entry));
    out.push_back(suite_split_roundtrip());
    return out;
}

}  // namespace quiver
