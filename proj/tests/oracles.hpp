#pragma once

// Test-only oracles, kept independent of the branch-and-bound implementations
// they cross-check: exhaustive subset enumeration for the exact parameters,
// polygon clipping for overlap areas, max-norm covering/independence for the
// axis-parallel equivalences, and dense sampling for swept distances.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sqhit/geometry.hpp"

namespace sqhit::oracles {

inline std::vector<std::uint64_t> pair_intersections(const SquareFamily& fam) {
    const int n = static_cast<int>(fam.size());
    std::vector<std::uint64_t> adj(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && squares_intersect(fam[i], fam[j], fam.tol))
                adj[i] |= std::uint64_t{1} << j;
    return adj;
}

// Exhaustive maximum packing over all 2^n subsets.
inline int naive_nu(const SquareFamily& fam) {
    const int n = static_cast<int>(fam.size());
    const auto adj = pair_intersections(fam);
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (mask >> i & 1)
                if (adj[i] & mask) ok = false;
        if (ok) best = std::max(best, __builtin_popcountll(mask));
    }
    return best;
}

// Exhaustive maximum clique over all 2^n subsets.
inline int naive_omega(const SquareFamily& fam) {
    const int n = static_cast<int>(fam.size());
    const auto adj = pair_intersections(fam);
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (mask >> i & 1) {
                const std::uint64_t others = mask & ~(std::uint64_t{1} << i);
                if ((adj[i] & others) != others) ok = false;
            }
        if (ok) best = std::max(best, __builtin_popcountll(mask));
    }
    return best;
}

// Candidate hitting points recomputed from scratch: vertices, centres and all
// pairwise boundary intersections, with fresh containment masks.
inline std::vector<std::uint64_t> coverage_masks(const SquareFamily& fam) {
    const int n = static_cast<int>(fam.size());
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        for (const Point& v : vertices(fam[i])) pts.push_back(v);
        pts.push_back(fam[i].centre);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (const Point& p : boundary_intersections(fam[i], fam[j], fam.tol))
                pts.push_back(p);
    std::vector<std::uint64_t> masks;
    for (const Point& p : pts) {
        std::uint64_t m = 0;
        for (int i = 0; i < n; ++i)
            if (contains_point(fam[i], p, fam.tol)) m |= std::uint64_t{1} << i;
        if (m) masks.push_back(m);
    }
    return masks;
}

// Exhaustive set-cover DP over all 2^n coverage states.
inline int naive_tau(const SquareFamily& fam) {
    const int n = static_cast<int>(fam.size());
    const auto masks = coverage_masks(fam);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<int> dp(full + 1, 1 << 20);
    dp[full] = 0;  // dp[m] = points needed to hit the squares NOT in m
    for (std::uint64_t covered = full; covered-- > 0;) {
        // find the lowest uncovered square
        const std::uint64_t uncovered = full & ~covered;
        if (!uncovered) continue;
        const int sq = __builtin_ctzll(uncovered);
        for (const std::uint64_t m : masks) {
            if (!(m >> sq & 1)) continue;
            dp[covered] = std::min(dp[covered], 1 + dp[covered | m]);
        }
    }
    return dp[0];
}

// Exhaustive chromatic number: dp over subsets, peeling independent sets.
inline int naive_chi(const SquareFamily& fam) {
    const int n = static_cast<int>(fam.size());
    const auto adj = pair_intersections(fam);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<int> dp(full + 1, 1 << 20);
    dp[0] = 0;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        // enumerate submasks containing the lowest bit
        const int low = __builtin_ctzll(mask);
        const std::uint64_t rest = mask & ~(std::uint64_t{1} << low);
        for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
            const std::uint64_t cls = sub | (std::uint64_t{1} << low);
            bool independent = true;
            for (int i = 0; i < n && independent; ++i)
                if (cls >> i & 1)
                    if (adj[i] & cls) independent = false;
            if (independent) dp[mask] = std::min(dp[mask], 1 + dp[mask & ~cls]);
            if (sub == 0) break;
        }
    }
    return dp[full];
}

// Maximum subset of points with pairwise max-norm distance > 1.
inline int alpha_inf(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if ((mask >> i & 1) && (mask >> j & 1)) {
                    const double d = std::max(std::abs(pts[i].x - pts[j].x),
                                              std::abs(pts[i].y - pts[j].y));
                    if (d <= 1.0) ok = false;
                }
        if (ok) best = std::max(best, __builtin_popcountll(mask));
    }
    return best;
}

// Minimum number of axis-parallel unit squares covering the points; an
// optimal cover may be assumed to have each square's lower-left corner at
// some (p.x, q.y), so the candidate set is the n x n corner grid.
inline int zeta_inf(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    if (n == 0) return 0;
    std::vector<std::uint64_t> masks;
    for (const Point& p : pts)
        for (const Point& q : pts) {
            std::uint64_t m = 0;
            for (int i = 0; i < n; ++i)
                if (pts[i].x >= p.x - 1e-12 && pts[i].x <= p.x + 1.0 + 1e-12 &&
                    pts[i].y >= q.y - 1e-12 && pts[i].y <= q.y + 1.0 + 1e-12)
                    m |= std::uint64_t{1} << i;
            masks.push_back(m);
        }
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<int> dp(full + 1, 1 << 20);
    dp[full] = 0;
    for (std::uint64_t covered = full; covered-- > 0;) {
        const std::uint64_t uncovered = full & ~covered;
        if (!uncovered) continue;
        const int i = __builtin_ctzll(uncovered);
        for (const std::uint64_t m : masks)
            if (m >> i & 1) dp[covered] = std::min(dp[covered], 1 + dp[covered | m]);
    }
    return dp[0];
}

// Convex polygon intersection area via half-plane clipping.
inline double overlap_area(const Square& a, const Square& b) {
    const auto va = vertices(a);
    std::vector<Point> poly(va.begin(), va.end());
    const auto vb = vertices(b);
    for (int i = 0; i < 4 && !poly.empty(); ++i) {
        const Point e0 = vb[i];
        const Point e1 = vb[(i + 1) % 4];
        std::vector<Point> next;
        for (std::size_t j = 0; j < poly.size(); ++j) {
            const Point cur = poly[j];
            const Point nxt = poly[(j + 1) % poly.size()];
            const double dc = cross(e1 - e0, cur - e0);
            const double dn = cross(e1 - e0, nxt - e0);
            if (dc >= 0) next.push_back(cur);
            if ((dc > 0 && dn < 0) || (dc < 0 && dn > 0)) {
                const double t = dc / (dc - dn);
                next.push_back(cur + t * (nxt - cur));
            }
        }
        poly = std::move(next);
    }
    double area2 = 0.0;
    for (std::size_t j = 0; j < poly.size(); ++j)
        area2 += cross(poly[j], poly[(j + 1) % poly.size()]);
    return std::abs(area2) / 2.0;
}

// Upper bound on the distance from q to the swept region by dense sampling.
inline double swept_dist_upper(const Point& q, Point centre, double side, double lo, double hi,
                               int samples) {
    double best = 1e300;
    for (int i = 0; i <= samples; ++i) {
        const double a = lo + (hi - lo) * i / samples;
        best = std::min(best, dist_point_square(q, square_from_vertex_angle(centre, side, a)));
    }
    return best;
}

}  // namespace sqhit::oracles
