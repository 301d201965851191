#pragma once

// Guaranteed approximation algorithms: greedy hitting-degenerate induction
// for hitting sets (tau <= k * nu with k in {2,4,6,10,12} by mode) and
// degeneracy orderings for colourings (chi <= 6*Delta for unit squares,
// chi <= 9*(Delta-1) in general).

#include <vector>

#include "sqhit/exact.hpp"
#include "sqhit/geometry.hpp"
#include "sqhit/hitters.hpp"

namespace sqhit {

struct ModeInapplicable : Error {
    using Error::Error;
};

struct NotUnitFamily : Error {
    using Error::Error;
};

struct HittingRun {
    struct Round {
        int pivot = -1;
        HitterKind kind = HitterKind::TenPoint;
        std::vector<Point> points_added;
        std::vector<int> squares_removed;
    };

    std::vector<Point> points;
    std::vector<Round> rounds;
    int per_round_bound = 0;  // k: |points| <= k * rounds <= k * nu
};

inline int hitter_bound(HitterKind kind) {
    switch (kind) {
        case HitterKind::AxisParallelLeftmost2: return 2;
        case HitterKind::AxisParallel4: return 4;
        case HitterKind::SixPointLeftmost: return 6;
        case HitterKind::TenPoint: return 10;
        case HitterKind::TwelvePointCover: return 12;
    }
    return 0;
}

namespace detail {

// Deterministic pivot choice; ties by lowest y, then lowest index.
inline int pick_pivot(const SquareFamily& fam, const std::vector<int>& alive, HitterKind kind) {
    int best = alive.front();
    for (int i : alive) {
        const Square& s = fam[i];
        const Square& b = fam[best];
        bool better = false;
        switch (kind) {
            case HitterKind::TenPoint:
            case HitterKind::AxisParallel4:
            case HitterKind::TwelvePointCover:
                // Smallest side keeps every remaining neighbour at least as
                // large as the pivot, which the vertex/cover hitters need.
                better = s.side < b.side - 1e-15 ||
                         (std::abs(s.side - b.side) <= 1e-15 &&
                          (s.centre.y < b.centre.y || (s.centre.y == b.centre.y && i < best)));
                break;
            case HitterKind::SixPointLeftmost:
            case HitterKind::AxisParallelLeftmost2:
                better = s.centre.x < b.centre.x ||
                         (s.centre.x == b.centre.x &&
                          (s.centre.y < b.centre.y || (s.centre.y == b.centre.y && i < best)));
                break;
        }
        if (better) best = i;
    }
    return best;
}

inline std::vector<Point> pivot_hitter(const SquareFamily& fam, int pivot, HitterKind kind) {
    switch (kind) {
        case HitterKind::TenPoint: return ten_point_hitter(fam[pivot]);
        case HitterKind::SixPointLeftmost: return six_point_hitter(fam[pivot]);
        case HitterKind::AxisParallel4: return axis_parallel_hitter(fam[pivot], false, fam.tol);
        case HitterKind::AxisParallelLeftmost2:
            return axis_parallel_hitter(fam[pivot], true, fam.tol);
        case HitterKind::TwelvePointCover: return twelve_point_cover_hitter(fam[pivot], fam.tol);
    }
    return {};
}

}  // namespace detail

inline HittingRun hit_greedy(const SquareFamily& fam, HitterKind mode) {
    if (fam.empty()) throw PreconditionViolated("hit_greedy: empty family");
    if ((mode == HitterKind::SixPointLeftmost || mode == HitterKind::TwelvePointCover) &&
        !is_unit_family(fam))
        throw ModeInapplicable("hit_greedy: mode requires squares of equal side");
    if ((mode == HitterKind::AxisParallel4 || mode == HitterKind::AxisParallelLeftmost2) &&
        !is_axis_parallel_family(fam))
        throw ModeInapplicable("hit_greedy: mode requires axis-parallel squares");
    if (mode == HitterKind::AxisParallelLeftmost2 && !is_unit_family(fam))
        throw ModeInapplicable("hit_greedy: leftmost-2 mode requires squares of equal side");

    HittingRun run;
    run.per_round_bound = hitter_bound(mode);
    std::vector<int> alive(fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) alive[i] = static_cast<int>(i);

    while (!alive.empty()) {
        const int pivot = detail::pick_pivot(fam, alive, mode);
        if (mode == HitterKind::TenPoint)
            for (int i : alive)
                if (fam[i].side < fam[pivot].side - fam.tol.eps)
                    throw std::logic_error("hit_greedy: pivot is not minimal in side");

        HittingRun::Round round;
        round.pivot = pivot;
        round.kind = mode;
        round.points_added = detail::pivot_hitter(fam, pivot, mode);

        std::vector<int> next_alive;
        for (int i : alive) {
            bool hit = false;
            for (const Point& p : round.points_added)
                if (contains_point(fam[i], p, fam.tol)) {
                    hit = true;
                    break;
                }
            if (hit)
                round.squares_removed.push_back(i);
            else
                next_alive.push_back(i);
        }
        bool pivot_removed = false;
        for (int i : round.squares_removed) pivot_removed = pivot_removed || i == pivot;
        if (!pivot_removed) throw std::logic_error("hit_greedy: pivot not hit by its own hitter");

        for (const Point& p : round.points_added) run.points.push_back(p);
        run.rounds.push_back(std::move(round));
        alive = std::move(next_alive);
    }
    return run;
}

struct ColouringRun {
    std::vector<int> colour_of;
    std::vector<int> order;  // elimination order
    int k_used = 0;
    int bound = 0;  // declared guarantee (6*Delta or 9*(Delta-1))
};

namespace detail {

// Reverse greedy colouring along an elimination order.
inline ColouringRun colour_by_order(const IntersectionGraph& g, std::vector<int> order) {
    ColouringRun run;
    run.order = std::move(order);
    run.colour_of.assign(g.n, -1);
    for (int idx = g.n - 1; idx >= 0; --idx) {
        const int v = run.order[idx];
        std::vector<char> used(g.n + 1, 0);
        for (int u : g.neighbors[v])
            if (run.colour_of[u] >= 0) used[run.colour_of[u]] = 1;
        int c = 0;
        while (used[c]) ++c;
        run.colour_of[v] = c;
        run.k_used = std::max(run.k_used, c + 1);
    }
    return run;
}

}  // namespace detail

// Colours a unit-square family along the leftmost-centre elimination order.
// Each square's neighbourhood in the remainder is hit by 6 points, so its
// back-degree is at most 6*Delta - 1 and at most 6*Delta colours are used.
inline ColouringRun colour_unit_squares(const SquareFamily& fam) {
    if (fam.empty()) throw PreconditionViolated("colour_unit_squares: empty family");
    if (!is_unit_family(fam)) throw NotUnitFamily("colour_unit_squares: sides must be equal");
    const IntersectionGraph g = build_graph(fam);

    std::vector<int> order;
    std::vector<char> removed(g.n, 0);
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int i = 0; i < g.n; ++i) {
            if (removed[i]) continue;
            if (best < 0 || fam[i].centre.x < fam[best].centre.x ||
                (fam[i].centre.x == fam[best].centre.x &&
                 (fam[i].centre.y < fam[best].centre.y ||
                  (fam[i].centre.y == fam[best].centre.y && i < best))))
                best = i;
        }
        order.push_back(best);
        removed[best] = 1;
    }

    ColouringRun run = detail::colour_by_order(g, order);
    const int delta = max_degree_delta(fam).value;
    run.bound = 6 * delta;
    if (run.k_used > run.bound)
        throw std::logic_error("colour_unit_squares: 6*Delta bound violated");
    return run;
}

// Per-vertex count of neighbours appearing later in the elimination order
// (the real certificate behind the colouring bound).
inline std::vector<int> back_degrees(const IntersectionGraph& g, const std::vector<int>& order) {
    std::vector<int> pos(g.n, 0);
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    std::vector<int> back(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        for (int u : g.neighbors[v])
            if (pos[u] > pos[v]) ++back[v];
    return back;
}

// Exact degeneracy of the intersection graph by repeated minimum-degree
// removal, with the removal order.
inline std::pair<int, std::vector<int>> degeneracy(const SquareFamily& fam) {
    const IntersectionGraph g = build_graph(fam);
    std::vector<int> deg(g.n, 0);
    for (int i = 0; i < g.n; ++i) deg[i] = static_cast<int>(g.neighbors[i].size());
    std::vector<char> removed(g.n, 0);
    std::vector<int> order;
    int k = 0;
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int i = 0; i < g.n; ++i)
            if (!removed[i] && (best < 0 || deg[i] < deg[best])) best = i;
        k = std::max(k, deg[best]);
        order.push_back(best);
        removed[best] = 1;
        for (int u : g.neighbors[best])
            if (!removed[u]) --deg[u];
    }
    return {k, order};
}

// Colours an arbitrary square family along the minimum-degree elimination
// order. The averaging argument over vertices and centres bounds every
// subgraph's minimum degree strictly below 9*(Delta-1) when Delta >= 2.
inline ColouringRun colour_squares(const SquareFamily& fam) {
    if (fam.empty()) throw PreconditionViolated("colour_squares: empty family");
    const IntersectionGraph g = build_graph(fam);
    const auto [k, order] = degeneracy(fam);
    ColouringRun run = detail::colour_by_order(g, order);
    const int delta = max_degree_delta(fam).value;
    run.bound = delta >= 2 ? 9 * (delta - 1) : 1;
    if (run.k_used > run.bound)
        throw std::logic_error("colour_squares: 9*(Delta-1) bound violated");
    return run;
}

}  // namespace sqhit
