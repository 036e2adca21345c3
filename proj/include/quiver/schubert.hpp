#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "quiver/coefficients.hpp"
#include "quiver/polynomial.hpp"
#include "quiver/rank_conditions.hpp"
#include "quiver/symbol_polynomial.hpp"

namespace quiver {

// Permutation in one-line notation on {1, ..., k}.
class Permutation {
public:
    explicit Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
        std::vector<bool> seen(w_.size(), false);
        for (int v : w_) {
            if (v < 1 || v > static_cast<int>(w_.size()) || seen[v - 1])
                throw std::invalid_argument("Permutation: not a bijection on 1..k");
            seen[v - 1] = true;
        }
    }

    // Digit string like "3142" (for k <= 9), or comma-separated values.
    static Permutation parse(const std::string& text) {
        std::vector<int> w;
        if (text.find(',') != std::string::npos) {
            std::size_t start = 0;
            while (start <= text.size()) {
                std::size_t comma = text.find(',', start);
                std::string tok = text.substr(
                    start, comma == std::string::npos ? std::string::npos : comma - start);
                std::size_t pos = 0;
                int v = 0;
                try {
                    v = std::stoi(tok, &pos);
                } catch (const std::exception&) {
                    throw std::invalid_argument("Permutation: bad token '" + tok + "'");
                }
                if (pos != tok.size())
                    throw std::invalid_argument("Permutation: bad token '" + tok + "'");
                w.push_back(v);
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        } else {
            for (char c : text) {
                if (c < '1' || c > '9')
                    throw std::invalid_argument("Permutation: bad digit '" +
                                                std::string(1, c) + "'");
                w.push_back(c - '0');
            }
        }
        return Permutation(std::move(w));
    }

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const {  // 1-based
        if (i < 1 || i > size()) throw std::out_of_range("Permutation: index");
        return w_[i - 1];
    }
    const std::vector<int>& one_line() const { return w_; }

    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(w_.size());
        for (int i = 1; i <= size(); ++i) inv[w_[i - 1] - 1] = i;
        return Permutation(std::move(inv));
    }

    // (u * v)(i) = u(v(i))
    friend Permutation operator*(const Permutation& u, const Permutation& v) {
        if (u.size() != v.size())
            throw std::invalid_argument("Permutation: size mismatch");
        std::vector<int> w(u.size());
        for (int i = 1; i <= u.size(); ++i) w[i - 1] = u(v(i));
        return Permutation(std::move(w));
    }

    static Permutation identity(int k) {
        std::vector<int> w(k);
        for (int i = 0; i < k; ++i) w[i] = i + 1;
        return Permutation(std::move(w));
    }

    static Permutation longest(int k) {
        std::vector<int> w(k);
        for (int i = 0; i < k; ++i) w[i] = k - i;
        return Permutation(std::move(w));
    }

    static std::vector<Permutation> all(int k) {
        std::vector<int> w(k);
        for (int i = 0; i < k; ++i) w[i] = i + 1;
        std::vector<Permutation> out;
        do {
            out.push_back(Permutation(w));
        } while (std::next_permutation(w.begin(), w.end()));
        return out;
    }

    std::string to_string() const {
        std::string s;
        bool digits = size() <= 9;
        for (int i = 0; i < size(); ++i) {
            if (i && !digits) s += ",";
            s += std::to_string(w_[i]);
        }
        return s;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> w_;
};

// r_w(p, q) = #{ i <= p : w(i) <= q }.
inline int permutation_rank(const Permutation& w, int p, int q) {
    int c = 0;
    for (int i = 1; i <= p; ++i)
        if (w(i) <= q) ++c;
    return c;
}

// Rank conditions of the 2m-bundle sequence G_1 -> ... -> G_m -> F_m -> ...
// -> F_1 with rank(G_i) = rank(F_i) = i: full flags within each half, and
// rank(G_q -> F_p) bounded by r_w(p, q).
inline RankConditions rank_conditions_from(const Permutation& w, int m) {
    if (w.size() != m + 1)
        throw std::invalid_argument("rank_conditions_from: w must lie in S_{m+1}");
    if (m < 1) throw std::invalid_argument("rank_conditions_from: m must be >= 1");
    const int n = 2 * m - 1;  // number of maps
    auto rank = [&](int i, int j) {  // 0 <= i <= j <= n
        auto e = [&](int a) { return a < m ? a + 1 : 2 * m - a; };
        if (j <= m - 1) return e(i);            // within the G flag
        if (i >= m) return e(j);                // within the F flag
        return permutation_rank(w, 2 * m - j, i + 1);
    };
    std::vector<std::vector<int>> rows(n + 1);
    for (int d = 0; d <= n; ++d) {
        rows[d].resize(n + 1 - d);
        for (int i = 0; i + d <= n; ++i) rows[d][i] = rank(i, i + d);
    }
    auto r = RankConditions::from_rows(std::move(rows));
    r.require_valid();
    return r;
}

// Diagram criterion for non-emptiness of the rectangle R_{ij} of the array
// of rank_conditions_from(w, m): within the mixed block, R_{ij} is non-empty
// iff w(2m+1-j) <= i+1 and w^{-1}(i+2) <= 2m-j; rectangles inside either
// flag are always empty.
inline bool dprime_criterion(const Permutation& w, int m, int i, int j) {
    const int n = 2 * m - 1;
    if (i < 0 || j > n || i >= j)
        throw std::invalid_argument("dprime_criterion: bad rectangle position");
    if (i > m - 1 || j < m) return false;
    Permutation winv = w.inverse();
    return w(2 * m + 1 - j) <= i + 1 && winv(i + 2) <= 2 * m - j;
}

namespace detail {

// A reduced word for u by repeatedly clearing the leftmost descent: if
// u = s_{a_k} ... s_{a_1} with the a's recorded in clearing order, applying
// divided differences in recorded order computes the operator of u.
inline std::vector<int> descent_word(Permutation u) {
    std::vector<int> word;
    std::vector<int> v = u.one_line();
    for (;;) {
        int d = -1;
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] > v[i + 1]) { d = static_cast<int>(i); break; }
        if (d < 0) break;
        std::swap(v[d], v[d + 1]);
        word.push_back(d + 1);
    }
    return word;
}

// Same, clearing the rightmost descent; used to cross-check that the result
// does not depend on the chosen reduced word.
inline std::vector<int> descent_word_rightmost(Permutation u) {
    std::vector<int> word;
    std::vector<int> v = u.one_line();
    for (;;) {
        int d = -1;
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] > v[i + 1]) d = static_cast<int>(i);
        if (d < 0) break;
        std::swap(v[d], v[d + 1]);
        word.push_back(d + 1);
    }
    return word;
}

}  // namespace detail

// Schubert polynomial of w in S_{m+1} by divided differences from the
// longest element: the single version starts from x_1^m x_2^{m-1} ... x_m,
// the double version from prod_{i+j <= m+1} (x_i - y_j); operators are
// applied along a reduced word for w^{-1} w_0.  The ring is x_1..x_m (and
// y_1..y_m for the double version); x_{m+1} is used internally and checked
// to vanish from the result.
inline MultiPolynomial schubert_oracle(const Permutation& w, int m, bool double_version,
                                       bool rightmost_word = false) {
    if (w.size() != m + 1)
        throw std::invalid_argument("schubert_oracle: w must lie in S_{m+1}");
    const int nx = m + 1, ny = double_version ? m : 0;

    MultiPolynomial f = MultiPolynomial::constant(nx, ny, 1);
    if (double_version) {
        for (int i = 1; i <= m; ++i)
            for (int j = 1; i + j <= m + 1; ++j)
                f *= MultiPolynomial::x(nx, ny, i) - MultiPolynomial::y(nx, ny, j);
    } else {
        for (int i = 1; i <= m; ++i)
            f *= pow(MultiPolynomial::x(nx, ny, i), m + 1 - i);
    }

    Permutation u = w.inverse() * Permutation::longest(m + 1);
    std::vector<int> word =
        rightmost_word ? detail::descent_word_rightmost(u) : detail::descent_word(u);
    for (int a : word) f = f.divided_difference(a);
    return f.restricted(m, ny);
}

// Specialization of the universal coefficient polynomial (arity 2m-1, from
// rank_conditions_from) to the double Schubert polynomial: the G slots keep
// only single rows (q) as y_{i+1}^q, the F slots only single columns (1)^p as
// (-x)^p, and the middle slot becomes s_tau(x/y).
inline MultiPolynomial specialize_double(const QuiverPolynomial& p, int m) {
    if (p.arity() != 2 * m - 1)
        throw std::invalid_argument("specialize_double: arity must be 2m-1");
    const int nx = m, ny = m;
    std::map<Partition, MultiPolynomial> schur_cache;
    MultiPolynomial out(nx, ny);
    for (const auto& [lam, c] : p.terms()) {
        MultiPolynomial term = MultiPolynomial::constant(nx, ny, c);
        bool dead = false;
        for (int slot = 1; slot <= 2 * m - 1 && !dead; ++slot) {
            const Partition& part = lam[slot - 1];
            if (slot <= m - 1) {           // (G_slot, G_slot+1) -> y_{slot+1}^q
                if (part.length() > 1) { dead = true; break; }
                term *= pow(MultiPolynomial::y(nx, ny, slot + 1), part.part(1));
            } else if (slot == m) {        // middle slot -> s_tau(x/y)
                auto it = schur_cache.find(part);
                if (it == schur_cache.end())
                    it = schur_cache.emplace(part, schur_xy(nx, ny, part)).first;
                term *= it->second;
            } else {                       // (F_{k+1}, F_k) -> (-x_{k+1})^p
                if (part.part(1) > 1) { dead = true; break; }
                int xi = 2 * m + 1 - slot;
                int e = part.length();
                term *= pow(-MultiPolynomial::x(nx, ny, xi), e);
            }
        }
        if (!dead) out += term;
    }
    return out;
}

// All y variables set to zero: only terms with empty G slots survive, and
// the middle slot becomes the ordinary Schur polynomial s_tau(x).
inline MultiPolynomial specialize_single(const QuiverPolynomial& p, int m) {
    if (p.arity() != 2 * m - 1)
        throw std::invalid_argument("specialize_single: arity must be 2m-1");
    const int nx = m;
    std::map<Partition, MultiPolynomial> schur_cache;
    MultiPolynomial out(nx, 0);
    for (const auto& [lam, c] : p.terms()) {
        MultiPolynomial term = MultiPolynomial::constant(nx, 0, c);
        bool dead = false;
        for (int slot = 1; slot <= 2 * m - 1 && !dead; ++slot) {
            const Partition& part = lam[slot - 1];
            if (slot <= m - 1) {
                if (!part.empty()) dead = true;
            } else if (slot == m) {
                auto it = schur_cache.find(part);
                if (it == schur_cache.end())
                    it = schur_cache.emplace(part, schur_xy(nx, 0, part)).first;
                term *= it->second;
            } else {
                if (part.part(1) > 1) { dead = true; break; }
                int xi = 2 * m + 1 - slot;
                term *= pow(-MultiPolynomial::x(nx, 0, xi), part.length());
            }
        }
        if (!dead) out += term;
    }
    return out;
}

}  // namespace quiver
