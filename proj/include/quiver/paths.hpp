#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "quiver/coefficients.hpp"
#include "quiver/rank_conditions.hpp"
#include "quiver/straighten.hpp"
#include "quiver/symbol_polynomial.hpp"

namespace quiver {

// A monotone path through the triangular array from r_00 to r_nn.  Vertices
// are array positions (i,j); every step moves right in the printed triangle:
//   (i,j) -> (i,j+1)    descending diagonal step
//   (i,j) -> (i+1,j)    ascending diagonal step
//   (i,j) -> (i+1,j+1)  horizontal step between row neighbors
// The horizontal position i+j strictly increases, so the path meets every
// vertical line at most once.  The lowest path has 2n unit steps; the path
// across the top row has n horizontal steps.
class Path {
public:
    Path(int n, std::vector<std::pair<int, int>> points)
        : n_(n), points_(std::move(points)) {
        if (points_.empty() || points_.front() != std::pair<int, int>{0, 0} ||
            points_.back() != std::pair<int, int>{n, n})
            throw std::invalid_argument("Path: must run from (0,0) to (n,n)");
        for (std::size_t t = 0; t < points_.size(); ++t) {
            auto [i, j] = points_[t];
            if (i < 0 || j > n_ || i > j)
                throw std::invalid_argument("Path: position outside the triangle");
            if (t > 0) {
                int di = i - points_[t - 1].first;
                int dj = j - points_[t - 1].second;
                bool ok = (di == 0 && dj == 1) || (di == 1 && dj == 0) ||
                          (di == 1 && dj == 1);
                if (!ok) throw std::invalid_argument("Path: bad step");
            }
        }
    }

    static Path lowest(int n) {
        std::vector<std::pair<int, int>> pts;
        for (int j = 0; j <= n; ++j) pts.push_back({0, j});
        for (int i = 1; i <= n; ++i) pts.push_back({i, n});
        return Path(n, std::move(pts));
    }

    static Path top(int n) {
        std::vector<std::pair<int, int>> pts;
        for (int i = 0; i <= n; ++i) pts.push_back({i, i});
        return Path(n, std::move(pts));
    }

    int n() const { return n_; }
    int segments() const { return static_cast<int>(points_.size()) - 1; }
    const std::vector<std::pair<int, int>>& points() const { return points_; }

    friend bool operator==(const Path&, const Path&) = default;

private:
    int n_;
    std::vector<std::pair<int, int>> points_;
};

namespace detail {

// Depth profile of a path: depth[x] = j - i along the path at horizontal
// position x = i + j, with the midpoint of a horizontal step taking the
// common depth of its endpoints.
inline std::vector<int> depth_profile(const std::vector<std::pair<int, int>>& pts, int n) {
    std::vector<int> depth(2 * n + 1, -1);
    for (std::size_t t = 0; t < pts.size(); ++t) {
        auto [i, j] = pts[t];
        depth[i + j] = j - i;
        if (t + 1 < pts.size() && pts[t + 1].first == i + 1 && pts[t + 1].second == j + 1)
            depth[i + j + 1] = j - i;  // horizontal step midpoint
    }
    return depth;
}

}  // namespace detail

// The formal sum Phi(gamma): one partition slot per path segment, computed by
// raising the lowest path to gamma.  Removing a valley at (i,j) (two unit
// steps becoming one horizontal step) merges the adjacent slots mu, nu into
// straighten(<R_ij; nu, mu>), discarding terms where nu is longer than the
// rectangle height; inserting a peak (one horizontal step splitting into two
// unit steps) replaces the slot mu by all Littlewood-Richardson splits
// (sigma, tau).  Corners are raised leftmost-first by default; the rightmost
// order must give the same polynomial.
inline QuiverPolynomial path_phi(const RankConditions& r, const Path& gamma,
                                 bool raise_rightmost = false) {
    r.require_valid();
    const int n = r.n();
    if (gamma.n() != n) throw std::invalid_argument("path_phi: path size mismatch");

    std::vector<std::pair<int, int>> cur = Path::lowest(n).points();
    QuiverPolynomial phi = QuiverPolynomial::unit(2 * n);
    const std::vector<int> target = detail::depth_profile(gamma.points(), n);

    while (cur != gamma.points()) {
        std::vector<int> depth = detail::depth_profile(cur, n);

        struct Raise {
            int x = 0;
            bool valley = false;  // valley vertex merge vs horizontal-mid split
            int idx = 0;          // vertex index (valley) or segment index (mid)
        };
        std::vector<Raise> raises;
        for (std::size_t t = 1; t + 1 < cur.size(); ++t) {
            auto [pi, pj] = cur[t - 1];
            auto [i, j] = cur[t];
            auto [qi, qj] = cur[t + 1];
            bool in_desc = (i == pi && j == pj + 1);
            bool out_asc = (qi == i + 1 && qj == j);
            if (in_desc && out_asc && depth[i + j] > target[i + j])
                raises.push_back({i + j, true, static_cast<int>(t)});
        }
        for (std::size_t s = 0; s + 1 < cur.size(); ++s) {
            auto [i, j] = cur[s];
            if (cur[s + 1].first == i + 1 && cur[s + 1].second == j + 1 &&
                depth[i + j + 1] > target[i + j + 1])
                raises.push_back({i + j + 1, false, static_cast<int>(s)});
        }
        if (raises.empty())
            throw std::logic_error("path_phi: no raisable corner toward the target");

        Raise pick = raises.front();
        for (const Raise& c : raises)
            if (raise_rightmost ? c.x > pick.x : c.x < pick.x) pick = c;

        if (pick.valley) {
            const int t = pick.idx;
            auto [i, j] = cur[t];
            Rectangle rc = r.rect(i, j);
            QuiverPolynomial next(phi.arity() - 1);
            for (const auto& [tup, c] : phi.terms()) {
                const Partition& mu = tup[t - 1];
                const Partition& nu = tup[t];
                if (nu.length() > rc.height) continue;  // vanishing slot
                SignedPartition s = straighten(attach(rc, nu, mu));
                if (s.is_zero()) continue;
                LambdaTuple nt;
                nt.reserve(tup.size() - 1);
                nt.insert(nt.end(), tup.begin(), tup.begin() + (t - 1));
                nt.push_back(s.shape);
                nt.insert(nt.end(), tup.begin() + t + 1, tup.end());
                next.add_term(nt, c * Integer(s.sign));
            }
            phi = std::move(next);
            cur.erase(cur.begin() + t);
        } else {
            const int s = pick.idx;
            auto [i, j] = cur[s];
            QuiverPolynomial next(phi.arity() + 1);
            for (const auto& [tup, c] : phi.terms()) {
                for (const auto& [st, k] : split_expansion(tup[s])) {
                    LambdaTuple nt;
                    nt.reserve(tup.size() + 1);
                    nt.insert(nt.end(), tup.begin(), tup.begin() + s);
                    nt.push_back(st.first);
                    nt.push_back(st.second);
                    nt.insert(nt.end(), tup.begin() + s + 1, tup.end());
                    next.add_term(nt, c * Integer(k));
                }
            }
            phi = std::move(next);
            cur.insert(cur.begin() + s + 1, {i + 1, j});
        }
    }
    return phi;
}

}  // namespace quiver
