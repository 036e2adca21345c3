#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quiver/partition.hpp"

namespace quiver {

// Admissible rank conditions for a sequence of n+1 bundles E_0 -> ... -> E_n:
// the triangular array r_{ij}, 0 <= i <= j <= n, with r_{ii} the bundle
// ranks.  Stored by triangle rows: row k holds r_{i,i+k} for i = 0..n-k.
class RankConditions {
public:
    static RankConditions from_rows(std::vector<std::vector<int>> rows) {
        if (rows.empty())
            throw std::invalid_argument("rank conditions: no rows");
        const int n = static_cast<int>(rows[0].size()) - 1;
        if (n < 0 || static_cast<int>(rows.size()) != n + 1)
            throw std::invalid_argument("rank conditions: need n+1 triangle rows");
        for (int k = 0; k <= n; ++k) {
            if (static_cast<int>(rows[k].size()) != n + 1 - k)
                throw std::invalid_argument("rank conditions: row " + std::to_string(k) +
                                            " must hold " + std::to_string(n + 1 - k) +
                                            " entries");
            for (int v : rows[k])
                if (v < 0)
                    throw std::invalid_argument("rank conditions: negative entry");
        }
        RankConditions r;
        r.n_ = n;
        r.rows_ = std::move(rows);
        return r;
    }

    int n() const { return n_; }

    // r_{ij} for 0 <= i <= j <= n
    int rank(int i, int j) const {
        if (i < 0 || j > n_ || i > j)
            throw std::out_of_range("rank conditions: bad index");
        return rows_[j - i][i];
    }

    // The rectangle R_{ij}, i < j: width r_{i,j-1} - r_{ij} and height
    // r_{i+1,j} - r_{ij}.  Only meaningful for valid rank conditions.
    Rectangle rect(int i, int j) const {
        return Rectangle{rank(i, j - 1) - rank(i, j), rank(i + 1, j) - rank(i, j)};
    }

    struct Violation {
        int i = 0, j = 0;
        std::string what;
    };

    // First violated admissibility constraint, if any.
    std::optional<Violation> validate() const {
        for (int j = 1; j <= n_; ++j)
            for (int i = 0; i < j; ++i) {
                if (rank(i, j) > rank(i, j - 1))
                    return Violation{i, j, "r(i,j) > r(i,j-1)"};
                if (rank(i, j) > rank(i + 1, j))
                    return Violation{i, j, "r(i,j) > r(i+1,j)"};
            }
        for (int j = 2; j <= n_; ++j)
            for (int i = 0; i < j - 1; ++i) {
                if (rank(i + 1, j - 1) - rank(i, j - 1) - rank(i + 1, j) + rank(i, j) < 0)
                    return Violation{i, j,
                                     "r(i+1,j-1) - r(i,j-1) - r(i+1,j) + r(i,j) < 0"};
            }
        return std::nullopt;
    }

    bool valid() const { return !validate().has_value(); }

    void require_valid() const {
        if (auto v = validate())
            throw std::invalid_argument("invalid rank conditions at (" +
                                        std::to_string(v->i) + "," + std::to_string(v->j) +
                                        "): " + v->what);
    }

    // Expected codimension: the total area of the rectangles.
    int codim() const {
        require_valid();
        int d = 0;
        for (int j = 1; j <= n_; ++j)
            for (int i = 0; i < j; ++i) d += rect(i, j).area();
        return d;
    }

    // The rank conditions of the bottom rows: drops the diagonal, so the new
    // bundle ranks are the old r_{i,i+1}.  Requires n >= 1.
    RankConditions delete_top_row() const {
        if (n_ < 1) throw std::invalid_argument("delete_top_row: n must be >= 1");
        std::vector<std::vector<int>> rows(rows_.begin() + 1, rows_.end());
        return from_rows(std::move(rows));
    }

    // The dual sequence: indices reversed, r~(i,j) = r(n-j, n-i).  Its
    // rectangle array is the vertical reflection with each rectangle
    // transposed.
    RankConditions dual() const {
        std::vector<std::vector<int>> rows(n_ + 1);
        for (int k = 0; k <= n_; ++k) {
            rows[k].resize(n_ + 1 - k);
            for (int i = 0; i + k <= n_; ++i) rows[k][i] = rank(n_ - (i + k), n_ - i);
        }
        return from_rows(std::move(rows));
    }

    // Adds the constant c to every entry (coefficients depend only on the
    // differences, so this must not change them).
    RankConditions shifted(int c) const {
        std::vector<std::vector<int>> rows = rows_;
        for (auto& row : rows)
            for (int& v : row) {
                v += c;
                if (v < 0) throw std::invalid_argument("shifted: negative entry");
            }
        return from_rows(std::move(rows));
    }

    // Bundles whose rank conditions are implied by the others: all rectangles
    // on the 45-degree lines descending from position k are empty.  Interior
    // and endpoint bundles qualify, but a one-map sequence has no removable
    // bundle.
    std::vector<int> inessential_indices() const {
        std::vector<int> out;
        if (n_ < 2) return out;
        for (int k = 0; k <= n_; ++k) {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) ok = rect(i, k).empty();
            for (int j = k + 1; j <= n_ && ok; ++j) ok = rect(k, j).empty();
            if (ok) out.push_back(k);
        }
        return out;
    }

    // Omits the bundle E_k, producing conditions on the shorter sequence
    // E_0 ... E_{k-1}, E_{k+1} ... E_n.
    RankConditions omit(int k) const {
        auto iness = inessential_indices();
        bool found = false;
        for (int v : iness) found = found || v == k;
        if (!found)
            throw std::invalid_argument("omit: bundle " + std::to_string(k) +
                                        " is not inessential");
        auto old_index = [&](int a) { return a < k ? a : a + 1; };
        std::vector<std::vector<int>> rows(n_);
        for (int d = 0; d <= n_ - 1; ++d) {
            rows[d].resize(n_ - d);
            for (int i = 0; i + d <= n_ - 1; ++i)
                rows[d][i] = rank(old_index(i), old_index(i + d));
        }
        auto out = from_rows(std::move(rows));
        out.require_valid();
        return out;
    }

    // Text format: n+1 lines, line k holding the n+1-k entries of triangle
    // row k, whitespace-separated.  Parsing is strict; trailing blank lines
    // are ignored.
    static RankConditions parse(std::string_view text) {
        std::vector<std::vector<int>> rows;
        std::istringstream in{std::string(text)};
        std::string line;
        std::vector<std::string> lines;
        while (std::getline(in, line)) lines.push_back(line);
        while (!lines.empty() &&
               lines.back().find_first_not_of(" \t\r") == std::string::npos)
            lines.pop_back();
        for (const std::string& l : lines) {
            std::istringstream ls(l);
            std::vector<int> row;
            std::string tok;
            while (ls >> tok) {
                std::size_t pos = 0;
                int v = 0;
                try {
                    v = std::stoi(tok, &pos);
                } catch (const std::exception&) {
                    throw std::invalid_argument("rank conditions: bad token '" + tok + "'");
                }
                if (pos != tok.size())
                    throw std::invalid_argument("rank conditions: bad token '" + tok + "'");
                if (v < 0)
                    throw std::invalid_argument("rank conditions: negative entry");
                row.push_back(v);
            }
            if (row.empty())
                throw std::invalid_argument("rank conditions: blank row inside triangle");
            rows.push_back(std::move(row));
        }
        return from_rows(std::move(rows));
    }

    std::string to_text() const {
        std::string s;
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) s += " ";
                s += std::to_string(row[i]);
            }
            s += "\n";
        }
        return s;
    }

    friend bool operator==(const RankConditions&, const RankConditions&) = default;

private:
    RankConditions() = default;

    int n_ = 0;
    std::vector<std::vector<int>> rows_;
};

}  // namespace quiver
