#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quiver {

// Index sequences that are not necessarily weakly decreasing.
using IntSequence = std::vector<int>;

// Weakly decreasing sequence of positive integers; trailing zeros are never
// stored, so the empty partition is the empty vector.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Partition: parts must weakly decrease");
        }
    }

    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    // part(k) for 1-based k, zero beyond the stored length
    int part(int k) const {
        return (k >= 1 && k <= length()) ? parts_[k - 1] : 0;
    }

    bool contains(const Partition& inner) const {
        if (inner.length() > length()) return false;
        for (int k = 1; k <= inner.length(); ++k)
            if (inner.part(k) > part(k)) return false;
        return true;
    }

    Partition conjugate() const {
        std::vector<int> cols;
        if (!parts_.empty()) {
            cols.resize(parts_[0]);
            for (int p : parts_)
                for (int c = 0; c < p; ++c) ++cols[c];
        }
        return Partition(std::move(cols));
    }

    std::vector<int> padded(int len) const {
        std::vector<int> out = parts_;
        if (static_cast<int>(out.size()) < len) out.resize(len, 0);
        return out;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return std::lexicographical_compare_three_way(
            a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
    }

private:
    std::vector<int> parts_;
};

// A signed Schur index: +/- a partition, or the distinguished zero.
struct SignedPartition {
    int sign = 0;  // -1, +1, or 0 for the zero value
    Partition shape;

    static SignedPartition zero() { return {}; }
    bool is_zero() const { return sign == 0; }

    friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
};

// Rectangle of boxes; width or height zero makes it empty, but both
// dimensions are kept because parts of the algorithm consume the height of a
// rectangle whose width is zero.
struct Rectangle {
    int width = 0;
    int height = 0;

    bool empty() const { return width == 0 || height == 0; }
    int area() const { return width * height; }
    Rectangle transposed() const { return {height, width}; }

    Partition to_partition() const {
        if (empty()) return Partition();
        return Partition(std::vector<int>(height, width));
    }

    friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

// All partitions of weight w.
inline std::vector<Partition> partitions_of(int w) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(w, w == 0 ? 1 : w);
    return out;
}

// All partitions contained in a w x h box (at most h rows, parts at most w).
inline std::vector<Partition> partitions_in_box(int w, int h) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int maxpart) {
        out.emplace_back(cur);
        if (row >= h || maxpart == 0) return;
        for (int p = maxpart; p >= 1; --p) {
            cur.push_back(p);
            rec(row + 1, p);
            cur.pop_back();
        }
    };
    rec(0, w);
    std::sort(out.begin(), out.end());
    return out;
}

// All partitions sigma with sigma <= mu componentwise.
inline std::vector<Partition> subdiagrams_of(const Partition& mu) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int maxpart) {
        out.emplace_back(cur);
        if (row > mu.length()) return;
        for (int p = std::min(maxpart, mu.part(row)); p >= 1; --p) {
            cur.push_back(p);
            rec(row + 1, p);
            cur.pop_back();
        }
    };
    rec(1, mu.part(1));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// The 180-degree rotated complement of sigma inside a w x h rectangle.
// Requires sigma to fit in the box.
inline Partition rotated_complement(const Partition& sigma, const Rectangle& r) {
    if (sigma.length() > r.height || sigma.part(1) > r.width)
        throw std::invalid_argument("rotated_complement: shape exceeds rectangle");
    std::vector<int> out;
    out.reserve(r.height);
    for (int t = 1; t <= r.height; ++t)
        out.push_back(r.width - sigma.part(r.height + 1 - t));
    return Partition(std::move(out));
}

}  // namespace quiver
