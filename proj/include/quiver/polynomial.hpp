#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quiver/bigint.hpp"
#include "quiver/partition.hpp"

namespace quiver {

// Sparse polynomial with exact integer coefficients in the variables
// x_1..x_nx, y_1..y_ny.  Exponent vectors store the x block first.
class MultiPolynomial {
public:
    MultiPolynomial(int nx, int ny) : nx_(nx), ny_(ny) {
        if (nx < 0 || ny < 0)
            throw std::invalid_argument("MultiPolynomial: negative variable count");
    }

    static MultiPolynomial constant(int nx, int ny, const Integer& c) {
        MultiPolynomial p(nx, ny);
        p.add_term(std::vector<int>(nx + ny, 0), c);
        return p;
    }

    static MultiPolynomial x(int nx, int ny, int i) {  // x_i, 1-based
        if (i < 1 || i > nx) throw std::invalid_argument("MultiPolynomial::x: index");
        MultiPolynomial p(nx, ny);
        std::vector<int> e(nx + ny, 0);
        e[i - 1] = 1;
        p.add_term(e, 1);
        return p;
    }

    static MultiPolynomial y(int nx, int ny, int i) {  // y_i, 1-based
        if (i < 1 || i > ny) throw std::invalid_argument("MultiPolynomial::y: index");
        MultiPolynomial p(nx, ny);
        std::vector<int> e(nx + ny, 0);
        e[nx + i - 1] = 1;
        p.add_term(e, 1);
        return p;
    }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Integer>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exps, const Integer& c) {
        if (static_cast<int>(exps.size()) != nx_ + ny_)
            throw std::invalid_argument("MultiPolynomial: exponent size mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(exps, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPolynomial& operator+=(const MultiPolynomial& o) {
        check_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPolynomial& operator-=(const MultiPolynomial& o) {
        check_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MultiPolynomial& operator*=(const MultiPolynomial& o) {
        check_ring(o);
        MultiPolynomial out(nx_, ny_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                std::vector<int> e(nx_ + ny_);
                for (int k = 0; k < nx_ + ny_; ++k) e[k] = e1[k] + e2[k];
                out.add_term(e, c1 * c2);
            }
        *this = std::move(out);
        return *this;
    }

    friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
    friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
    friend MultiPolynomial operator*(MultiPolynomial a, const MultiPolynomial& b) { return a *= b; }

    MultiPolynomial operator-() const {
        MultiPolynomial out(nx_, ny_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    MultiPolynomial scaled(const Integer& k) const {
        MultiPolynomial out(nx_, ny_);
        if (k.is_zero()) return out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * k);
        return out;
    }

    friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

    // Exchanges the variables x_i and x_{i+1}.
    MultiPolynomial swapped_x(int i) const {
        if (i < 1 || i >= nx_)
            throw std::invalid_argument("MultiPolynomial::swapped_x: index");
        MultiPolynomial out(nx_, ny_);
        for (const auto& [e, c] : terms_) {
            std::vector<int> f = e;
            std::swap(f[i - 1], f[i]);
            out.add_term(f, c);
        }
        return out;
    }

    // Divided difference (f - s_i f) / (x_i - x_{i+1}), as exact polynomial
    // division by the binomial.  A nonzero remainder is an internal error.
    // The working map is kept in the division order (exponent of x_i first),
    // so each step pops the leading term in logarithmic time.
    MultiPolynomial divided_difference(int i) const {
        if (i < 1 || i >= nx_)
            throw std::invalid_argument("MultiPolynomial::divided_difference: index");
        const int xi = i - 1, xi1 = i;

        struct DivOrder {
            int xi;
            bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
                if (a[xi] != b[xi]) return a[xi] > b[xi];
                return a > b;
            }
        };
        std::map<std::vector<int>, Integer, DivOrder> g{DivOrder{xi}};
        auto put = [&g](const std::vector<int>& e, const Integer& c) {
            auto it = g.find(e);
            if (it == g.end()) {
                if (!c.is_zero()) g.emplace(e, c);
            } else {
                it->second += c;
                if (it->second.is_zero()) g.erase(it);
            }
        };
        for (const auto& [e, c] : terms_) {
            put(e, c);
            std::vector<int> f = e;
            std::swap(f[xi], f[xi1]);
            put(f, -c);
        }

        MultiPolynomial q(nx_, ny_);
        while (!g.empty()) {
            auto lead = g.begin();
            if (lead->first[xi] == 0)
                throw std::logic_error("divided_difference: non-exact division");
            std::vector<int> m = lead->first;
            Integer c = lead->second;
            g.erase(lead);
            m[xi] -= 1;
            q.add_term(m, c);
            // cancel c * m * (-x_{i+1}); the x_i part was the popped lead
            std::vector<int> t2 = m;
            t2[xi1] += 1;
            put(t2, c);
        }
        return q;
    }

    // Sets every y variable to zero (drops monomials with y exponents).
    MultiPolynomial y_to_zero() const {
        MultiPolynomial out(nx_, ny_);
        for (const auto& [e, c] : terms_) {
            bool pure = true;
            for (int k = nx_; k < nx_ + ny_; ++k)
                if (e[k] != 0) { pure = false; break; }
            if (pure) out.terms_.emplace(e, c);
        }
        return out;
    }

    // Reinterprets the polynomial in a smaller ring, checking that the
    // dropped trailing x and y variables never occur.
    MultiPolynomial restricted(int nx2, int ny2) const {
        if (nx2 > nx_ || ny2 > ny_)
            throw std::invalid_argument("MultiPolynomial::restricted: growing ring");
        MultiPolynomial out(nx2, ny2);
        for (const auto& [e, c] : terms_) {
            std::vector<int> f(nx2 + ny2);
            for (int k = 0; k < nx_ + ny_; ++k) {
                bool keep_x = k < nx2;
                bool keep_y = k >= nx_ && k < nx_ + ny2;
                if (keep_x) {
                    f[k] = e[k];
                } else if (keep_y) {
                    f[nx2 + (k - nx_)] = e[k];
                } else if (e[k] != 0) {
                    throw std::logic_error("MultiPolynomial::restricted: dropped variable occurs");
                }
            }
            out.add_term(f, c);
        }
        return out;
    }

    // Sorted monomial list, one per line: `<coeff> x1^a1 ... ym^bm`.
    std::string to_string() const {
        if (terms_.empty()) return "0\n";
        std::string s;
        for (const auto& [e, c] : terms_) {
            s += c.to_string();
            for (int k = 0; k < nx_ + ny_; ++k) {
                if (e[k] == 0) continue;
                s += " ";
                s += (k < nx_) ? "x" + std::to_string(k + 1)
                               : "y" + std::to_string(k - nx_ + 1);
                s += "^" + std::to_string(e[k]);
            }
            s += "\n";
        }
        return s;
    }

private:
    void check_ring(const MultiPolynomial& o) const {
        if (o.nx_ != nx_ || o.ny_ != ny_)
            throw std::invalid_argument("MultiPolynomial: ring mismatch");
    }

    int nx_, ny_;
    std::map<std::vector<int>, Integer> terms_;
};

inline MultiPolynomial pow(const MultiPolynomial& base, int e) {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    MultiPolynomial r = MultiPolynomial::constant(base.nx(), base.ny(), 1);
    for (int k = 0; k < e; ++k) r *= base;
    return r;
}

namespace detail {

// Complete homogeneous polynomial of degree d in x_1..x_nx (inside the ring
// with ny extra y variables).
inline MultiPolynomial homogeneous_x(int nx, int ny, int d) {
    MultiPolynomial out(nx, ny);
    std::vector<int> e(nx + ny, 0);
    std::function<void(int, int)> rec = [&](int var, int rest) {
        if (var == nx - 1) {
            e[var] = rest;
            out.add_term(e, 1);
            e[var] = 0;
            return;
        }
        for (int k = 0; k <= rest; ++k) {
            e[var] = k;
            rec(var + 1, rest - k);
        }
        e[var] = 0;
    };
    if (d == 0) {
        out.add_term(e, 1);
    } else if (nx > 0) {
        rec(0, d);
    }
    return out;
}

// Elementary symmetric polynomial of degree d in y_1..y_ny.
inline MultiPolynomial elementary_y(int nx, int ny, int d) {
    MultiPolynomial out(nx, ny);
    std::vector<int> idx;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(idx.size()) == d) {
            std::vector<int> e(nx + ny, 0);
            for (int i : idx) e[nx + i] = 1;
            out.add_term(e, 1);
            return;
        }
        for (int i = start; i < ny; ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    if (d == 0) {
        out.add_term(std::vector<int>(nx + ny, 0), 1);
    } else if (d <= ny) {
        rec(0);
    }
    return out;
}

}  // namespace detail

// Degree-k coefficient h_k of the series prod(1 - y_i t) / prod(1 - x_j t),
// i.e. h_k = sum_{a+b=k} h_a(x) * (-1)^b e_b(y).  Negative k gives 0.
inline MultiPolynomial series_h(int nx, int ny, int k) {
    MultiPolynomial out(nx, ny);
    if (k < 0) return out;
    for (int b = 0; b <= std::min(k, ny); ++b) {
        MultiPolynomial term = detail::homogeneous_x(nx, ny, k - b) *
                               detail::elementary_y(nx, ny, b);
        if (b % 2) term = -term;
        out += term;
    }
    return out;
}

// Schur polynomial s_tau(x/y) = det(h_{tau_i + j - i}) on the series above.
// With ny = 0 this is the ordinary Schur polynomial s_tau(x).
inline MultiPolynomial schur_xy(int nx, int ny, const Partition& tau) {
    const int p = tau.length();
    if (p == 0) return MultiPolynomial::constant(nx, ny, 1);
    std::map<int, MultiPolynomial> hcache;
    auto h = [&](int k) -> const MultiPolynomial& {
        auto it = hcache.find(k);
        if (it == hcache.end()) it = hcache.emplace(k, series_h(nx, ny, k)).first;
        return it->second;
    };
    // Leibniz expansion over permutations of the p x p determinant
    MultiPolynomial det(nx, ny);
    std::vector<int> perm(p);
    for (int i = 0; i < p; ++i) perm[i] = i;
    do {
        int sign = 1;
        for (int a = 0; a < p; ++a)
            for (int b = a + 1; b < p; ++b)
                if (perm[a] > perm[b]) sign = -sign;
        MultiPolynomial prod = MultiPolynomial::constant(nx, ny, sign);
        bool zero = false;
        for (int i = 0; i < p && !zero; ++i) {
            int k = tau.part(i + 1) + perm[i] - i;
            if (k < 0) { zero = true; break; }
            prod *= h(k);
            if (prod.is_zero()) zero = true;
        }
        if (!zero) det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace quiver
