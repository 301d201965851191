#pragma once

// Desk-scale exact computation of tau, nu, chi, omega and Delta. These are
// the ground truth behind every approximation guarantee in the project, so
// the solvers re-check their witnesses with the geometry predicates rather
// than trusting graph adjacency alone.

#include <cstdint>
#include <vector>

#include "sqhit/geometry.hpp"

namespace sqhit {

struct InstanceTooLarge : Error {
    using Error::Error;
};

struct IntersectionGraph {
    int n = 0;
    std::vector<std::vector<int>> neighbors;  // sorted adjacency lists

    bool adjacent(int i, int j) const {
        const auto& ni = neighbors[i];
        return std::binary_search(ni.begin(), ni.end(), j);
    }
    std::size_t edge_count() const {
        std::size_t s = 0;
        for (const auto& ni : neighbors) s += ni.size();
        return s / 2;
    }
};

inline IntersectionGraph build_graph(const SquareFamily& fam) {
    IntersectionGraph g;
    g.n = static_cast<int>(fam.size());
    g.neighbors.resize(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (squares_intersect(fam[i], fam[j], fam.tol)) {
                g.neighbors[i].push_back(j);
                g.neighbors[j].push_back(i);
            }
    return g;
}

struct CandidatePoint {
    Point p;
    std::uint64_t mask = 0;  // squares containing the point
};

// Vertices, centres, and pairwise boundary intersections: any non-empty
// intersection of closed squares is a convex polygon whose vertices are
// square vertices or boundary crossings, so an optimal hitting set can be
// assumed to use only these points (centres cover the isolated-square case).
inline std::vector<CandidatePoint> candidate_points(const SquareFamily& fam) {
    const int n = static_cast<int>(fam.size());
    if (n > 64) throw InstanceTooLarge("candidate_points: more than 64 squares");
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        for (const Point& v : vertices(fam[i])) pts.push_back(v);
        pts.push_back(fam[i].centre);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (const Point& p : boundary_intersections(fam[i], fam[j], fam.tol))
                pts.push_back(p);
    detail::dedup_points(pts, fam.tol.eps);

    std::vector<CandidatePoint> out;
    out.reserve(pts.size());
    for (const Point& p : pts) {
        CandidatePoint c;
        c.p = p;
        for (int i = 0; i < n; ++i)
            if (contains_point(fam[i], p, fam.tol)) c.mask |= std::uint64_t{1} << i;
        out.push_back(c);
    }
    return out;
}

struct ExactResult {
    int value = 0;
    bool optimal = true;
    std::uint64_t nodes_explored = 0;
    std::vector<Point> witness_points;   // tau (hitting set), delta (deepest point)
    std::vector<int> witness_indices;    // nu / omega (subfamily)
    std::vector<int> witness_colours;    // chi (colour per square)
};

struct SolveLimits {
    int max_n_tau_chi = 30;
    int max_n_nu_omega = 40;
    bool override_cap = false;
};

namespace detail {

inline int popcount(std::uint64_t x) { return static_cast<int>(__builtin_popcountll(x)); }

inline std::vector<std::uint64_t> adjacency_masks(const IntersectionGraph& g) {
    std::vector<std::uint64_t> adj(g.n, 0);
    for (int i = 0; i < g.n; ++i)
        for (int j : g.neighbors[i]) adj[i] |= std::uint64_t{1} << j;
    return adj;
}

// Tomita-style max clique with greedy colouring bound on mask graphs.
class MaxCliqueSolver {
  public:
    explicit MaxCliqueSolver(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {
        n_ = static_cast<int>(adj_.size());
    }

    std::uint64_t solve(std::uint64_t start_mask) {
        best_ = 0;
        best_mask_ = 0;
        nodes_ = 0;
        expand(start_mask, 0, 0);
        return best_mask_;
    }

    std::uint64_t nodes() const { return nodes_; }
    int best_size() const { return best_; }

  private:
    void expand(std::uint64_t cand, std::uint64_t current, int size) {
        ++nodes_;
        if (cand == 0) {
            if (size > best_) {
                best_ = size;
                best_mask_ = current;
            }
            return;
        }
        // Greedy colouring bound: vertices ordered by colour class.
        std::vector<int> order;
        std::vector<int> colour_of;
        int n_colours = 0;
        std::uint64_t rem = cand;
        while (rem) {
            ++n_colours;
            std::uint64_t avail = rem;
            while (avail) {
                const int v = __builtin_ctzll(avail);
                order.push_back(v);
                colour_of.push_back(n_colours);
                rem &= ~(std::uint64_t{1} << v);
                avail &= ~(std::uint64_t{1} << v);
                avail &= ~adj_[v];
            }
        }
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            if (size + colour_of[idx] <= best_) return;
            const int v = order[idx];
            const std::uint64_t vbit = std::uint64_t{1} << v;
            expand(cand & adj_[v] & below_(order, idx), current | vbit, size + 1);
            cand &= ~vbit;
        }
    }

    static std::uint64_t below_(const std::vector<int>& order, int idx) {
        std::uint64_t m = 0;
        for (int i = 0; i < idx; ++i) m |= std::uint64_t{1} << order[i];
        return m;
    }

    int n_ = 0;
    int best_ = 0;
    std::uint64_t best_mask_ = 0;
    std::uint64_t nodes_ = 0;
    std::vector<std::uint64_t> adj_;
};

inline std::vector<int> mask_to_indices(std::uint64_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(__builtin_ctzll(m));
        m &= m - 1;
    }
    return out;
}

// Greedy packing of `mask`: lower bound on nu (and hence on tau) of that
// subfamily.
inline int greedy_packing_size(std::uint64_t mask, const std::vector<std::uint64_t>& adj) {
    int count = 0;
    while (mask) {
        const int v = __builtin_ctzll(mask);
        ++count;
        mask &= ~(adj[v] | (std::uint64_t{1} << v));
    }
    return count;
}

struct SetCoverSolver {
    const std::vector<std::uint64_t>& cand_masks;
    const std::vector<std::uint64_t>& adj;
    std::uint64_t full = 0;
    std::vector<int> best_sel;
    std::vector<std::vector<int>> covers;  // square -> candidate indices covering it
    std::uint64_t nodes = 0;

    void run(int n_squares) {
        covers.assign(n_squares, {});
        for (std::size_t i = 0; i < cand_masks.size(); ++i) {
            std::uint64_t m = cand_masks[i];
            while (m) {
                covers[__builtin_ctzll(m)].push_back(static_cast<int>(i));
                m &= m - 1;
            }
        }
        // Greedy initial cover as the incumbent.
        std::vector<int> greedy;
        std::uint64_t covered = 0;
        while (covered != full) {
            int best_i = -1;
            int best_gain = -1;
            for (std::size_t i = 0; i < cand_masks.size(); ++i) {
                const int gain = popcount(cand_masks[i] & ~covered);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_i = static_cast<int>(i);
                }
            }
            greedy.push_back(best_i);
            covered |= cand_masks[best_i];
        }
        best_sel = greedy;
        std::vector<int> sel;
        branch(0, sel);
    }

    void branch(std::uint64_t covered, std::vector<int>& sel) {
        ++nodes;
        if (covered == full) {
            if (sel.size() < best_sel.size()) best_sel = sel;
            return;
        }
        const std::uint64_t uncovered = full & ~covered;
        if (sel.size() + 1 >= best_sel.size()) return;
        const int lb = greedy_packing_size(uncovered, adj);
        if (sel.size() + lb >= best_sel.size()) return;

        // Branch on the uncovered square with the fewest covering candidates.
        int target = -1;
        std::size_t fewest = cand_masks.size() + 1;
        std::uint64_t rem = uncovered;
        while (rem) {
            const int sq = __builtin_ctzll(rem);
            rem &= rem - 1;
            if (covers[sq].size() < fewest) {
                fewest = covers[sq].size();
                target = sq;
            }
        }
        if (target < 0 || fewest == 0) return;

        std::vector<int> options = covers[target];
        std::sort(options.begin(), options.end(), [&](int a, int b) {
            const int ga = popcount(cand_masks[a] & uncovered);
            const int gb = popcount(cand_masks[b] & uncovered);
            if (ga != gb) return ga > gb;
            return a < b;
        });
        for (int i : options) {
            sel.push_back(i);
            branch(covered | cand_masks[i], sel);
            sel.pop_back();
        }
    }
};

inline void check_cap(const SquareFamily& fam, int cap, bool override_cap, const char* op) {
    if (fam.empty()) throw PreconditionViolated(std::string(op) + ": empty family");
    const int n = static_cast<int>(fam.size());
    if (n > 64) throw InstanceTooLarge(std::string(op) + ": hard cap of 64 squares");
    if (!override_cap && n > cap)
        throw InstanceTooLarge(std::string(op) + ": instance above the soft cap (use override)");
}

}  // namespace detail

inline ExactResult exact_tau(const SquareFamily& fam, const SolveLimits& limits = {}) {
    detail::check_cap(fam, limits.max_n_tau_chi, limits.override_cap, "exact_tau");
    const int n = static_cast<int>(fam.size());
    const auto graph = build_graph(fam);
    const auto adj = detail::adjacency_masks(graph);
    const auto cands = candidate_points(fam);

    // Drop candidates dominated by another candidate's coverage.
    std::vector<std::uint64_t> masks;
    std::vector<int> cand_idx;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < cands.size() && !dominated; ++j) {
            if (i == j) continue;
            const std::uint64_t mi = cands[i].mask, mj = cands[j].mask;
            if ((mi & mj) == mi && (mi != mj || j < i)) dominated = true;
        }
        if (!dominated) {
            masks.push_back(cands[i].mask);
            cand_idx.push_back(static_cast<int>(i));
        }
    }

    detail::SetCoverSolver solver{masks, adj};
    solver.full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    solver.run(n);

    ExactResult res;
    res.value = static_cast<int>(solver.best_sel.size());
    res.nodes_explored = solver.nodes;
    for (int i : solver.best_sel) res.witness_points.push_back(cands[cand_idx[i]].p);
    // Witness validity, geometry level.
    for (int i = 0; i < n; ++i) {
        bool hit = false;
        for (const Point& p : res.witness_points)
            if (contains_point(fam[i], p, fam.tol)) hit = true;
        if (!hit) throw std::logic_error("exact_tau: witness fails to hit a square");
    }
    return res;
}

inline ExactResult exact_nu(const SquareFamily& fam, const SolveLimits& limits = {}) {
    detail::check_cap(fam, limits.max_n_nu_omega, limits.override_cap, "exact_nu");
    const int n = static_cast<int>(fam.size());
    const auto graph = build_graph(fam);
    const auto adj = detail::adjacency_masks(graph);
    // Maximum independent set = maximum clique of the complement.
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> comp(n);
    for (int i = 0; i < n; ++i) comp[i] = full & ~adj[i] & ~(std::uint64_t{1} << i);
    detail::MaxCliqueSolver mis(comp);
    const std::uint64_t best = mis.solve(full);

    ExactResult res;
    res.value = mis.best_size();
    res.nodes_explored = mis.nodes();
    res.witness_indices = detail::mask_to_indices(best);
    for (std::size_t a = 0; a < res.witness_indices.size(); ++a)
        for (std::size_t b = a + 1; b < res.witness_indices.size(); ++b)
            if (squares_intersect(fam[res.witness_indices[a]], fam[res.witness_indices[b]],
                                  fam.tol))
                throw std::logic_error("exact_nu: witness is not a packing");
    return res;
}

inline ExactResult exact_omega(const SquareFamily& fam, const SolveLimits& limits = {}) {
    detail::check_cap(fam, limits.max_n_nu_omega, limits.override_cap, "exact_omega");
    const int n = static_cast<int>(fam.size());
    const auto graph = build_graph(fam);
    const auto adj = detail::adjacency_masks(graph);
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    detail::MaxCliqueSolver mc(adj);
    const std::uint64_t best = mc.solve(full);

    ExactResult res;
    res.value = mc.best_size();
    res.nodes_explored = mc.nodes();
    res.witness_indices = detail::mask_to_indices(best);
    for (std::size_t a = 0; a < res.witness_indices.size(); ++a)
        for (std::size_t b = a + 1; b < res.witness_indices.size(); ++b)
            if (!squares_intersect(fam[res.witness_indices[a]], fam[res.witness_indices[b]],
                                   fam.tol))
                throw std::logic_error("exact_omega: witness is not a clique");
    return res;
}

namespace detail {

// Backtracking k-colourability; vertices in static degree order, colours
// capped at one above the number already used.
struct KColourSolver {
    const std::vector<std::uint64_t>& adj;
    int n = 0;
    int k = 0;
    std::vector<int> order;
    std::vector<int> colour;
    std::uint64_t nodes = 0;

    bool run() {
        colour.assign(n, -1);
        return place(0, 0);
    }

    bool place(int idx, int used) {
        ++nodes;
        if (idx == n) return true;
        const int v = order[idx];
        const int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            std::uint64_t nb = adj[v];
            while (nb) {
                const int u = __builtin_ctzll(nb);
                nb &= nb - 1;
                if (colour[u] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            colour[v] = c;
            if (place(idx + 1, std::max(used, c + 1))) return true;
            colour[v] = -1;
        }
        return false;
    }
};

}  // namespace detail

inline ExactResult exact_chi(const SquareFamily& fam, const SolveLimits& limits = {}) {
    detail::check_cap(fam, limits.max_n_tau_chi, limits.override_cap, "exact_chi");
    const int n = static_cast<int>(fam.size());
    const auto graph = build_graph(fam);
    const auto adj = detail::adjacency_masks(graph);

    // Clique lower bound, greedy upper bound.
    SolveLimits inner = limits;
    inner.override_cap = true;
    const int lb = exact_omega(fam, inner).value;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int da = detail::popcount(adj[a]), db = detail::popcount(adj[b]);
        if (da != db) return da > db;
        return a < b;
    });
    std::vector<int> greedy(n, -1);
    int ub = 0;
    for (int v : order) {
        std::uint64_t used = 0;
        std::uint64_t nb = adj[v];
        while (nb) {
            const int u = __builtin_ctzll(nb);
            nb &= nb - 1;
            if (greedy[u] >= 0) used |= std::uint64_t{1} << greedy[u];
        }
        int c = 0;
        while (used >> c & 1) ++c;
        greedy[v] = c;
        ub = std::max(ub, c + 1);
    }

    ExactResult res;
    res.witness_colours = greedy;
    res.value = ub;
    for (int k = lb; k < ub; ++k) {
        detail::KColourSolver solver{adj, n, k, order, {}, 0};
        if (solver.run()) {
            res.value = k;
            res.witness_colours = solver.colour;
            res.nodes_explored += solver.nodes;
            break;
        }
        res.nodes_explored += solver.nodes;
    }
    // Properness, geometry level.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (res.witness_colours[i] == res.witness_colours[j] &&
                squares_intersect(fam[i], fam[j], fam.tol))
                throw std::logic_error("exact_chi: witness colouring is not proper");
    return res;
}

inline ExactResult max_degree_delta(const SquareFamily& fam) {
    if (fam.empty()) throw PreconditionViolated("max_degree_delta: empty family");
    if (fam.size() > 64) throw InstanceTooLarge("max_degree_delta: hard cap of 64 squares");
    const auto cands = candidate_points(fam);
    ExactResult res;
    for (const CandidatePoint& c : cands) {
        const int depth = detail::popcount(c.mask);
        if (depth > res.value) {
            res.value = depth;
            res.witness_points = {c.p};
        }
    }
    return res;
}

}  // namespace sqhit
