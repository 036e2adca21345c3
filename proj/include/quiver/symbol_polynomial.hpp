#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quiver/bigint.hpp"
#include "quiver/littlewood_richardson.hpp"
#include "quiver/partition.hpp"

namespace quiver {

// An n-tuple of partitions, one per symbol slot.
using LambdaTuple = std::vector<Partition>;

inline std::string tuple_to_string(const LambdaTuple& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += " ";
        s += t[i].to_string();
    }
    return s;
}

// Integer linear combination of symbols S(lambda(1),...,lambda(n)), kept in
// canonical (lexicographic) term order with no zero coefficients, so equality
// is structural and serialization is deterministic.
class QuiverPolynomial {
public:
    explicit QuiverPolynomial(int arity = 0) : arity_(arity) {
        if (arity < 0) throw std::invalid_argument("QuiverPolynomial: negative arity");
    }

    // The unit polynomial 1*S(empty,...,empty) with the given arity.
    static QuiverPolynomial unit(int arity) {
        QuiverPolynomial p(arity);
        p.add_term(LambdaTuple(arity), 1);
        return p;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<LambdaTuple, Integer>& terms() const { return terms_; }

    void add_term(const LambdaTuple& t, const Integer& c) {
        if (static_cast<int>(t.size()) != arity_)
            throw std::invalid_argument("QuiverPolynomial: arity mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            terms_.emplace(t, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Integer coefficient(const LambdaTuple& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? Integer() : it->second;
    }

    QuiverPolynomial& operator+=(const QuiverPolynomial& o) {
        if (o.arity_ != arity_)
            throw std::invalid_argument("QuiverPolynomial: arity mismatch");
        for (const auto& [t, c] : o.terms_) add_term(t, c);
        return *this;
    }

    friend QuiverPolynomial operator+(QuiverPolynomial a, const QuiverPolynomial& b) {
        return a += b;
    }

    QuiverPolynomial scaled(const Integer& k) const {
        QuiverPolynomial out(arity_);
        if (k.is_zero()) return out;
        for (const auto& [t, c] : terms_) out.terms_.emplace(t, c * k);
        return out;
    }

    // Applies f to every tuple; coefficients of coinciding images collect.
    QuiverPolynomial mapped(int new_arity,
                            const std::function<LambdaTuple(const LambdaTuple&)>& f) const {
        QuiverPolynomial out(new_arity);
        for (const auto& [t, c] : terms_) out.add_term(f(t), c);
        return out;
    }

    // Replaces slot `pos` (1-based) of every term by the fragments the rule
    // returns for the partition found there.  Each fragment is a list of
    // slots spliced in place, so the arity may grow or shrink uniformly.
    QuiverPolynomial substituted(
        int pos,
        const std::function<std::vector<std::pair<std::vector<Partition>, Integer>>(
            const Partition&)>& rule) const {
        if (pos < 1 || pos > arity_)
            throw std::invalid_argument("QuiverPolynomial: slot out of range");
        int new_arity = -1;
        QuiverPolynomial out(0);
        bool first = true;
        for (const auto& [t, c] : terms_) {
            for (const auto& [slots, k] : rule(t[pos - 1])) {
                LambdaTuple nt;
                nt.reserve(t.size() - 1 + slots.size());
                nt.insert(nt.end(), t.begin(), t.begin() + (pos - 1));
                nt.insert(nt.end(), slots.begin(), slots.end());
                nt.insert(nt.end(), t.begin() + pos, t.end());
                if (first) {
                    new_arity = static_cast<int>(nt.size());
                    out = QuiverPolynomial(new_arity);
                    first = false;
                }
                out.add_term(nt, c * k);
            }
        }
        if (first) out = QuiverPolynomial(arity_);
        return out;
    }

    friend bool operator==(const QuiverPolynomial&, const QuiverPolynomial&) = default;

    // One term per line: `<coeff> (<parts>) ... (<parts>)`; zero prints "0".
    std::string to_string() const {
        if (terms_.empty()) return "0\n";
        std::string s;
        for (const auto& [t, c] : terms_) {
            s += c.to_string();
            if (arity_ > 0) s += " " + tuple_to_string(t);
            s += "\n";
        }
        return s;
    }

private:
    int arity_;
    std::map<LambdaTuple, Integer> terms_;
};

// Splits slot `pos` into two slots via the Littlewood-Richardson coproduct:
// S(...,mu,...) -> sum over (sigma,tau) of c^mu_{sigma,tau} S(...,sigma,tau,...).
inline QuiverPolynomial expand_slot_split(const QuiverPolynomial& p, int pos) {
    return p.substituted(pos, [](const Partition& mu) {
        std::vector<std::pair<std::vector<Partition>, Integer>> out;
        for (const auto& [st, c] : split_expansion(mu))
            out.push_back({{st.first, st.second}, Integer(c)});
        return out;
    });
}

}  // namespace quiver
