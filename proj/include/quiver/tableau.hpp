#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quiver/partition.hpp"

namespace quiver {

// Semistandard Young tableau: rows weakly increase left to right, columns
// strictly increase top to bottom.  Entries are positive integers.
class Tableau {
public:
    Tableau() = default;

    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r].empty())
                throw std::invalid_argument("Tableau: empty row inside the shape");
            if (r > 0 && rows_[r].size() > rows_[r - 1].size())
                throw std::invalid_argument("Tableau: row lengths must weakly decrease");
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (rows_[r][c] <= 0)
                    throw std::invalid_argument("Tableau: entries must be positive");
                if (c > 0 && rows_[r][c] < rows_[r][c - 1])
                    throw std::invalid_argument("Tableau: rows must weakly increase");
                if (r > 0 && rows_[r][c] <= rows_[r - 1][c])
                    throw std::invalid_argument("Tableau: columns must strictly increase");
            }
        }
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }

    int box_count() const {
        int b = 0;
        for (const auto& row : rows_) b += static_cast<int>(row.size());
        return b;
    }

    Partition shape() const {
        std::vector<int> parts;
        parts.reserve(rows_.size());
        for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
        return Partition(std::move(parts));
    }

    std::map<int, int> content() const {
        std::map<int, int> m;
        for (const auto& row : rows_)
            for (int v : row) ++m[v];
        return m;
    }

    // Row reading word: rows bottom to top, each left to right.
    std::vector<int> reading_word() const {
        std::vector<int> w;
        for (std::size_t r = rows_.size(); r-- > 0;)
            w.insert(w.end(), rows_[r].begin(), rows_[r].end());
        return w;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau& a, const Tableau& b) {
        return a.rows_ <=> b.rows_;
    }

    // Rows top to bottom, one per line; the empty tableau prints as "-".
    std::string to_string() const {
        if (rows_.empty()) return "-\n";
        std::string s;
        for (const auto& row : rows_) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) s += " ";
                s += std::to_string(row[c]);
            }
            s += "\n";
        }
        return s;
    }

    static Tableau parse(const std::string& text) {
        std::vector<std::vector<int>> rows;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::vector<int> row;
            std::string tok;
            while (ls >> tok) {
                if (tok == "-" && row.empty()) return Tableau();
                std::size_t pos = 0;
                int v = 0;
                try {
                    v = std::stoi(tok, &pos);
                } catch (const std::exception&) {
                    throw std::invalid_argument("Tableau: bad token '" + tok + "'");
                }
                if (pos != tok.size())
                    throw std::invalid_argument("Tableau: bad token '" + tok + "'");
                row.push_back(v);
            }
            if (!row.empty()) rows.push_back(std::move(row));
        }
        return Tableau(std::move(rows));
    }

private:
    std::vector<std::vector<int>> rows_;
};

namespace detail {

// Schensted row insertion of v into raw rows (no validation).
inline void row_insert(std::vector<std::vector<int>>& rows, int v) {
    for (auto& row : rows) {
        auto it = std::upper_bound(row.begin(), row.end(), v);
        if (it == row.end()) {
            row.push_back(v);
            return;
        }
        std::swap(*it, v);
    }
    rows.push_back({v});
}

}  // namespace detail

// Plactic product by row insertion of q's reading word into p.
inline Tableau product(const Tableau& p, const Tableau& q) {
    std::vector<std::vector<int>> rows = p.rows();
    for (int v : q.reading_word()) detail::row_insert(rows, v);
    return Tableau(std::move(rows));
}

// Plactic product by jeu de taquin: q is placed corner to corner above and
// to the right of p, and inside corners are slid out until the shape is
// straight.  Must agree with `product`; kept as the independent route.
inline Tableau jdt_product(const Tableau& p, const Tableau& q) {
    if (p.empty()) return q;
    if (q.empty()) return p;

    const int offset = p.shape().part(1);
    const int qrows = static_cast<int>(q.rows().size());
    const int height = qrows + static_cast<int>(p.rows().size());
    const int width = offset + q.shape().part(1);

    // skew tableau: q shifted right by p's width on top, p below
    std::vector<int> inner(height, 0), outer(height, 0);
    std::vector<std::vector<int>> m(height, std::vector<int>(width, 0));
    for (int r = 0; r < qrows; ++r) {
        inner[r] = offset;
        outer[r] = offset + static_cast<int>(q.rows()[r].size());
        for (std::size_t k = 0; k < q.rows()[r].size(); ++k)
            m[r][offset + k] = q.rows()[r][k];
    }
    for (int r = qrows; r < height; ++r) {
        const auto& row = p.rows()[r - qrows];
        outer[r] = static_cast<int>(row.size());
        for (std::size_t k = 0; k < row.size(); ++k) m[r][k] = row[k];
    }

    while (inner[0] > 0) {
        // bottom-most inside corner of the inner shape
        int r0 = 0;
        while (r0 + 1 < height && inner[r0 + 1] == inner[r0]) ++r0;
        int r = r0, c = inner[r0] - 1;
        for (;;) {
            bool east = c + 1 < outer[r];
            bool south = r + 1 < height && c < outer[r + 1];
            if (!east && !south) break;
            if (south && (!east || m[r + 1][c] <= m[r][c + 1])) {
                m[r][c] = m[r + 1][c];
                m[r + 1][c] = 0;
                ++r;
            } else {
                m[r][c] = m[r][c + 1];
                m[r][c + 1] = 0;
                ++c;
            }
        }
        outer[r] -= 1;
        inner[r0] -= 1;
    }

    std::vector<std::vector<int>> rows;
    for (int r = 0; r < height; ++r) {
        if (outer[r] == 0) continue;
        rows.emplace_back(m[r].begin(), m[r].begin() + outer[r]);
    }
    return Tableau(std::move(rows));
}

// The tableau of shape lambda whose row t is filled with t.
inline Tableau superstandard(const Partition& lambda) {
    std::vector<std::vector<int>> rows;
    for (int t = 1; t <= lambda.length(); ++t)
        rows.push_back(std::vector<int>(lambda.part(t), t));
    return Tableau(std::move(rows));
}

// All semistandard tableaux with exactly the given content multiset.
inline std::vector<Tableau> ssyt_with_content(const std::map<int, int>& content) {
    int total = 0;
    for (const auto& [v, k] : content) {
        if (k < 0) throw std::invalid_argument("ssyt_with_content: negative multiplicity");
        total += k;
    }
    std::vector<Tableau> out;
    if (total == 0) {
        out.emplace_back();
        return out;
    }
    for (const Partition& shape : partitions_of(total)) {
        std::vector<std::vector<int>> grid(shape.length());
        for (int r = 0; r < shape.length(); ++r) grid[r].assign(shape.part(r + 1), 0);
        std::map<int, int> left = content;

        std::function<void(int, int)> rec = [&](int r, int c) {
            if (r == shape.length()) {
                out.push_back(Tableau(grid));
                return;
            }
            int nr = r, nc = c + 1;
            if (nc >= shape.part(r + 1)) { nr = r + 1; nc = 0; }
            for (auto& [v, k] : left) {
                if (k == 0) continue;
                if (c > 0 && v < grid[r][c - 1]) continue;
                if (r > 0 && v <= grid[r - 1][c]) continue;
                grid[r][c] = v;
                --k;
                rec(nr, nc);
                ++k;
            }
            grid[r][c] = 0;
        };
        rec(0, 0);
    }
    return out;
}

// All semistandard tableaux of the given shape with entries in 1..max_entry.
inline std::vector<Tableau> ssyt_of_shape(const Partition& shape, int max_entry) {
    std::vector<Tableau> out;
    if (shape.empty()) {
        out.emplace_back();
        return out;
    }
    std::vector<std::vector<int>> grid(shape.length());
    for (int r = 0; r < shape.length(); ++r) grid[r].assign(shape.part(r + 1), 0);
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == shape.length()) {
            out.push_back(Tableau(grid));
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= shape.part(r + 1)) { nr = r + 1; nc = 0; }
        int lo = 1;
        if (c > 0) lo = std::max(lo, grid[r][c - 1]);
        if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
        for (int v = lo; v <= max_entry; ++v) {
            grid[r][c] = v;
            rec(nr, nc);
        }
        grid[r][c] = 0;
    };
    rec(0, 0);
    return out;
}

}  // namespace quiver
