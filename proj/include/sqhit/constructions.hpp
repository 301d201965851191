#pragma once

// Generators for the extremal families: the touching pinwheel, the 9-square
// tau=3 and 13-square tau=4 families, the C5 cycle, the pivot with seven
// disjoint neighbours, the k-chain gadgets, and seeded random instances.
// The frozen parameters below were found by search and are re-verified by
// the exact solvers in the test suite. Generators validate their structural
// contracts (contact patterns, adjacency) and throw ConstructionInvalid on
// any mismatch.

#include <optional>
#include <string>
#include <vector>

#include "sqhit/exact.hpp"
#include "sqhit/geometry.hpp"
#include "sqhit/rng.hpp"

namespace sqhit {

struct ConstructionInvalid : Error {
    using Error::Error;
};

struct MalformedPath : Error {
    using Error::Error;
};

struct ExpectedValues {
    std::optional<int> nu, tau, chi, omega, delta;
};

struct NamedConstruction {
    std::string name;
    SquareFamily family;
    ExpectedValues expected;
    // Construction-specific anchor points (triangle vertices, contact points,
    // designated chain squares), used by verification tests.
    std::vector<Point> key_points;
    std::vector<int> designated;  // k_chain: indices of x, y (and z in edge mode)
};

namespace detail {

inline Point rot_third(Point p, int k) { return rotated(p, 2.0 * kPi * k / 3.0); }

inline constexpr double kTriInradius = 0.28867513459481287;  // 1/(2*sqrt(3))

// Unit-triangle pinwheel: each square contributes one full side of the
// equilateral triangle of side 1 centred at the origin, so the squares touch
// pairwise exactly at the triangle's corners.
inline std::vector<Square> unit_pinwheel() {
    std::vector<Square> out;
    for (int k = 0; k < 3; ++k)
        out.emplace_back(rot_third(Point{0.0, -kTriInradius - 0.5}, k), 1.0, 2.0 * kPi * k / 3.0);
    return out;
}

inline std::vector<Point> triangle_vertices() {
    return {Point{-0.5, -kTriInradius}, Point{0.5, -kTriInradius},
            Point{0.0, 2.0 * kTriInradius}};
}

// Square inscribed in the unit triangle touching all three side lines with
// three of its corners; solvable as a 3x3 linear system in (cx, cy, side).
inline bool inscribed_square(double rot, Square* out, Point contacts[3]) {
    double phi[4];
    for (int k = 0; k < 4; ++k) phi[k] = rot + kPi / 4.0 + k * kHalfPi;
    auto nearest = [&](double target) {
        int best = 0;
        double bd = 1e9;
        for (int k = 0; k < 4; ++k) {
            const double d = std::abs(std::remainder(phi[k] - target, 2.0 * kPi));
            if (d < bd) {
                bd = d;
                best = k;
            }
        }
        return best;
    };
    const int kk[3] = {nearest(3.0 * kPi / 2.0), nearest(kPi / 6.0), nearest(5.0 * kPi / 6.0)};
    if (kk[0] == kk[1] || kk[1] == kk[2] || kk[0] == kk[2]) return false;
    const Point n[3] = {{0.0, -1.0},
                        {0.8660254037844386, 0.5},
                        {-0.8660254037844386, 0.5}};
    double m[3][4];
    for (int i = 0; i < 3; ++i) {
        m[i][0] = n[i].x;
        m[i][1] = n[i].y;
        m[i][2] = (std::cos(phi[kk[i]]) * n[i].x + std::sin(phi[kk[i]]) * n[i].y) / kSqrt2;
        m[i][3] = kTriInradius;
    }
    for (int c = 0; c < 3; ++c) {
        int piv = c;
        for (int r = c; r < 3; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        if (std::abs(m[piv][c]) < 1e-12) return false;
        std::swap(m[piv], m[c]);
        for (int r = 0; r < 3; ++r) {
            if (r == c) continue;
            const double f = m[r][c] / m[c][c];
            for (int cc = c; cc < 4; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    const double cx = m[0][3] / m[0][0], cy = m[1][3] / m[1][1], s = m[2][3] / m[2][2];
    if (s <= 0.0) return false;
    *out = Square({cx, cy}, s, rot);
    for (int i = 0; i < 3; ++i)
        contacts[i] = Point{cx + s / kSqrt2 * std::cos(phi[kk[i]]),
                            cy + s / kSqrt2 * std::sin(phi[kk[i]])};
    return true;
}

inline void require(bool cond, const char* what) {
    if (!cond) throw ConstructionInvalid(what);
}

inline void require_complete(const SquareFamily& fam, const char* what) {
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j)
            if (!squares_intersect(fam[i], fam[j], fam.tol)) throw ConstructionInvalid(what);
}

}  // namespace detail

// Three pairwise touching unit squares with no common point (omega = 3 but
// Delta = 2).
inline NamedConstruction three_pairwise_unit() {
    NamedConstruction c;
    c.name = "three_pairwise_unit";
    c.family = SquareFamily(detail::unit_pinwheel());
    c.expected.nu = 1;
    c.expected.omega = 3;
    c.expected.delta = 2;
    c.key_points = detail::triangle_vertices();
    detail::require_complete(c.family, "three_pairwise_unit: squares must pairwise intersect");
    return c;
}

// The same pinwheel viewed as a hitting instance: nu = 1, tau = 2, and any
// 2-point hitting set must use a triangle vertex.
inline NamedConstruction pinwheel_tau2() {
    NamedConstruction c;
    c.name = "pinwheel_tau2";
    c.family = SquareFamily(detail::unit_pinwheel());
    c.expected.nu = 1;
    c.expected.tau = 2;
    c.key_points = detail::triangle_vertices();
    detail::require_complete(c.family, "pinwheel_tau2: squares must pairwise intersect");
    return c;
}

// Pinwheel plus two shifted copies per triangle vertex. The copy of the
// square whose edge ENDS at the vertex slides back along its own edge and
// into the triangle; the copy of the square whose edge STARTS there slides
// shallowly down-left in its own frame. Both lose the vertex but keep every
// pairwise intersection, which forces a third hitting point.
inline NamedConstruction nine_square_tau3(double shift = 0.06) {
    if (!(shift > 0.0 && shift <= 0.12))
        throw ConstructionInvalid("nine_square_tau3: shift must be in (0, 0.12]");
    const auto base = detail::unit_pinwheel();
    std::vector<Square> fam = base;
    const Point end_copy_shift{-0.5 * shift, shift};
    const Point start_copy_shift{0.154 * shift, 1.066 * shift};
    for (int k = 0; k < 3; ++k) {
        fam.emplace_back(base[k].centre + detail::rot_third(end_copy_shift, k), 1.0, base[k].rot);
        fam.emplace_back(base[k].centre + detail::rot_third(start_copy_shift, k), 1.0,
                         base[k].rot);
    }
    NamedConstruction c;
    c.name = "nine_square_tau3";
    c.family = SquareFamily(std::move(fam));
    c.expected.nu = 1;
    c.expected.tau = 3;
    c.key_points = detail::triangle_vertices();
    detail::require_complete(c.family, "nine_square_tau3: family must be pairwise intersecting");
    // Each vertex must be lost by exactly the two copies placed at it.
    const auto verts = detail::triangle_vertices();
    for (int k = 0; k < 3; ++k) {
        const Point v = verts[(k + 1) % 3];  // end vertex of square k's edge
        detail::require(!contains_point(c.family[3 + 2 * k], v, c.family.tol),
                        "nine_square_tau3: end-copy must miss its vertex");
        const Point w = verts[k];  // start vertex of square k's edge
        detail::require(!contains_point(c.family[3 + 2 * k + 1], w, c.family.tol),
                        "nine_square_tau3: start-copy must miss its vertex");
    }
    return c;
}

// Thirteen squares in four layers around the unit pinwheel:
//   pinks   - the pinwheel itself (side 1);
//   reds    - side 0.92 mills lifted into the triangle (no triple point, and
//             their pairwise regions clear the oranges);
//   oranges - side 0.62 mills lifted further (their triple region hides in
//             the red-free central zone);
//   greens  - three rotated copies of a square inscribed in the triangle,
//             each touching every pink at a single contact point.
// The 13th square is another inscribed square whose contacts are disjoint
// from the greens', which defeats every 3-point hitting set.
inline NamedConstruction thirteen_square_tau4() {
    const double red_side = 0.92, red_lift = 0.095;
    const double orange_side = 0.62, orange_lift = 0.35;
    const double green_rot = 10.0 * kPi / 180.0;
    const double thirteenth_rot = 24.0 * kPi / 180.0;

    std::vector<Square> fam = detail::unit_pinwheel();
    for (int k = 0; k < 3; ++k)
        fam.emplace_back(
            detail::rot_third(Point{0.0, -detail::kTriInradius - red_side / 2 + red_lift}, k),
            red_side, 2.0 * kPi * k / 3.0);
    for (int k = 0; k < 3; ++k)
        fam.emplace_back(
            detail::rot_third(Point{0.0, -detail::kTriInradius - orange_side / 2 + orange_lift},
                              k),
            orange_side, 2.0 * kPi * k / 3.0);

    Square green;
    Point green_contacts[3];
    detail::require(detail::inscribed_square(green_rot, &green, green_contacts),
                    "thirteen_square_tau4: inscribed green square not found");
    std::vector<Point> contacts(green_contacts, green_contacts + 3);
    fam.push_back(green);
    for (int k = 1; k < 3; ++k) {
        fam.emplace_back(detail::rot_third(green.centre, k), green.side,
                         green.rot + 2.0 * kPi * k / 3.0);
        for (int i = 0; i < 3; ++i) contacts.push_back(detail::rot_third(green_contacts[i], k));
    }
    Square last;
    Point last_contacts[3];
    detail::require(detail::inscribed_square(thirteenth_rot, &last, last_contacts),
                    "thirteen_square_tau4: inscribed 13th square not found");
    fam.push_back(last);
    for (int i = 0; i < 3; ++i) contacts.push_back(last_contacts[i]);

    NamedConstruction c;
    c.name = "thirteen_square_tau4";
    c.family = SquareFamily(std::move(fam));
    c.expected.nu = 1;
    c.expected.tau = 4;
    c.key_points = contacts;
    detail::require_complete(c.family, "thirteen_square_tau4: family must be pairwise intersecting");
    // Contact points of the inscribed squares must be pairwise separated.
    for (std::size_t i = 0; i < contacts.size(); ++i)
        for (std::size_t j = i + 1; j < contacts.size(); ++j)
            detail::require(dist(contacts[i], contacts[j]) > 0.02,
                            "thirteen_square_tau4: contact points too close");
    // Triangle corners must stay clear of every inner-layer square.
    for (const Point& v : detail::triangle_vertices())
        for (std::size_t i = 3; i < c.family.size(); ++i)
            detail::require(!contains_point(c.family[i], v, c.family.tol),
                            "thirteen_square_tau4: inner square covers a pinwheel vertex");
    return c;
}

// Five unit squares whose intersection graph is the 5-cycle, replicated m
// times each (replication preserves C5-adjacency between groups).
inline NamedConstruction c5_cycle(int replication = 1) {
    if (replication < 1) throw ConstructionInvalid("c5_cycle: replication must be >= 1");
    const double radius = 0.75;
    std::vector<Square> fam;
    for (int rep = 0; rep < replication; ++rep)
        for (int k = 0; k < 5; ++k) {
            const double a = kHalfPi + 2.0 * kPi * k / 5.0;
            fam.emplace_back(Point{radius * std::cos(a), radius * std::sin(a)}, 1.0, 0.0);
        }
    NamedConstruction c;
    c.name = "c5_cycle";
    c.family = SquareFamily(std::move(fam));
    c.expected.omega = 2 * replication;
    c.expected.chi = replication == 1 ? 3 : (5 * replication + 1) / 2;
    if (replication == 1) {
        c.expected.nu = 2;
        c.expected.tau = 3;
    }
    return c;
}

// A unit pivot with seven pairwise disjoint unit neighbours, exactly two of
// them with centres strictly left of the pivot centre. Coordinates found by
// seeded local search; pairwise gaps and pivot overlaps all exceed 0.015.
// The pivot is square 0. With trim_left, the two left neighbours are dropped,
// leaving a left-most pivot with five disjoint neighbours.
inline NamedConstruction seven_disjoint_neighbors(bool trim_left = false) {
    static const double coords[7][3] = {
        {0.020000000000, -1.181906959175, 0.955044388032},
        {1.060602233768, -0.654427442813, 0.630361972685},
        {0.080000000000, 0.023575187008, 1.071089510388},
        {1.110067146040, 0.653798375254, 1.103654391188},
        {0.145801484765, 1.172375042683, 1.020269264803},
        {-1.066815836413, 0.700456855057, 0.542805886916},   // strictly left
        {-1.008100476811, -0.522151592061, 0.554451268475},  // strictly left
    };
    std::vector<Square> fam;
    fam.emplace_back(Point{0.0, 0.0}, 1.0, 0.0);  // pivot
    const int count = trim_left ? 5 : 7;
    for (int i = 0; i < count; ++i)
        fam.emplace_back(Point{coords[i][0], coords[i][1]}, 1.0, coords[i][2]);
    NamedConstruction c;
    c.name = trim_left ? "seven_disjoint_neighbors_trimmed" : "seven_disjoint_neighbors";
    c.family = SquareFamily(std::move(fam));
    // One point can hit the pivot and a neighbour simultaneously, so tau of
    // the closed neighbourhood equals the number of disjoint neighbours.
    c.expected.tau = trim_left ? 5 : 7;
    c.expected.nu = trim_left ? 5 : 7;
    // Validate: every neighbour meets the pivot, neighbours pairwise disjoint.
    for (std::size_t i = 1; i < c.family.size(); ++i) {
        detail::require(squares_intersect(c.family[0], c.family[i], c.family.tol),
                        "seven_disjoint_neighbors: neighbour must meet the pivot");
        for (std::size_t j = i + 1; j < c.family.size(); ++j)
            detail::require(!squares_intersect(c.family[i], c.family[j], c.family.tol),
                            "seven_disjoint_neighbors: neighbours must be pairwise disjoint");
    }
    if (trim_left)
        for (std::size_t i = 1; i < c.family.size(); ++i)
            detail::require(c.family[i].centre.x >= c.family[0].centre.x,
                            "seven_disjoint_neighbors: trimmed variant must keep pivot leftmost");
    return c;
}

namespace detail {

struct ChainPlan {
    std::vector<Square> squares;
    std::vector<std::pair<int, int>> intended_edges;
    int x_index = -1, y_index = -1, z_index = -1;
};

}  // namespace detail

// Axis-parallel unit-square k-chain along a rectilinear path: junction
// squares at pitch ~1.6, with (k-1) middle squares per link forming the
// forcing cliques. In every proper k-colouring the endpoints x and y get the
// same colour; the chain-edge variant appends a square z adjacent only to y,
// forcing colour(x) != colour(z).
inline NamedConstruction k_chain(const std::vector<Point>& waypoints, int k,
                                 bool edge_mode = false) {
    if (k < 3) throw MalformedPath("k_chain: k must be at least 3");
    if (waypoints.size() < 2) throw MalformedPath("k_chain: need at least one segment");
    const double eps = 1e-9;
    // Validate rectilinear, alternating, shared-endpoint path.
    std::vector<int> axis;  // 0 horizontal, 1 vertical
    for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
        const Point d = waypoints[i + 1] - waypoints[i];
        const bool horiz = std::abs(d.y) <= eps && std::abs(d.x) > eps;
        const bool vert = std::abs(d.x) <= eps && std::abs(d.y) > eps;
        if (!horiz && !vert) throw MalformedPath("k_chain: segments must be axis-parallel");
        axis.push_back(horiz ? 0 : 1);
        if (axis.size() >= 2 && axis[axis.size() - 1] == axis[axis.size() - 2])
            throw MalformedPath("k_chain: segments must alternate between horizontal and vertical");
    }

    const double pitch_target = 1.6;
    detail::ChainPlan plan;
    auto add_junction = [&](Point p) {
        plan.squares.emplace_back(p, 1.0, 0.0);
        return static_cast<int>(plan.squares.size()) - 1;
    };

    int prev_junction = add_junction(waypoints[0]);
    plan.x_index = prev_junction;
    for (std::size_t seg = 0; seg + 1 < waypoints.size(); ++seg) {
        const Point a = waypoints[seg], b = waypoints[seg + 1];
        const Point d = b - a;
        const double len = norm(d);
        const bool corner_at_start = seg > 0;
        const bool corner_at_end = seg + 2 < waypoints.size();
        int links = std::max(1, static_cast<int>(std::llround(len / pitch_target)));
        if (corner_at_start && corner_at_end) links = std::max(links, 2);
        const double pitch = len / links;
        if (pitch <= 1.05 || pitch >= 1.95)
            throw MalformedPath("k_chain: segment length not realizable at unit-square pitch");
        const Point dir{d.x / len, d.y / len};
        const Point perp{-dir.y, dir.x};

        for (int link = 0; link < links; ++link) {
            const Point j0 = a + (link * pitch) * dir;
            const int next_junction =
                link + 1 == links ? add_junction(b) : add_junction(a + ((link + 1) * pitch) * dir);
            // Perpendicular offset pushing middles away from the arm of the
            // nearest corner, so cross-arm middles stay farther than 1 apart.
            double offset = 0.0;
            if (link == 0 && corner_at_start) {
                const Point inc = waypoints[seg] - waypoints[seg - 1];
                offset = -0.25 * (inc.x * perp.x + inc.y * perp.y > 0 ? 1.0 : -1.0);
            } else if (link + 1 == links && corner_at_end) {
                const Point out = waypoints[seg + 2] - waypoints[seg + 1];
                offset = -0.25 * (out.x * perp.x + out.y * perp.y > 0 ? 1.0 : -1.0);
            }
            for (int mid = 0; mid < k - 1; ++mid) {
                const double along = pitch / 2.0 + 0.015 * (mid - (k - 2) / 2.0);
                const Point m = j0 + along * dir + offset * perp;
                plan.squares.emplace_back(m, 1.0, 0.0);
                const int mi = static_cast<int>(plan.squares.size()) - 1;
                plan.intended_edges.emplace_back(prev_junction, mi);
                plan.intended_edges.emplace_back(next_junction, mi);
                for (int other = 1; other <= mid; ++other)
                    plan.intended_edges.emplace_back(mi - other, mi);
            }
            prev_junction = next_junction;
        }
    }
    plan.y_index = prev_junction;
    if (edge_mode) {
        const Point last_dir = [&] {
            const Point d = waypoints.back() - waypoints[waypoints.size() - 2];
            const double len = norm(d);
            return Point{d.x / len, d.y / len};
        }();
        plan.squares.emplace_back(waypoints.back() + 0.9 * last_dir, 1.0, 0.0);
        plan.z_index = static_cast<int>(plan.squares.size()) - 1;
        plan.intended_edges.emplace_back(plan.y_index, plan.z_index);
    }

    NamedConstruction c;
    c.name = edge_mode ? "k_chain_edge" : "k_chain";
    c.family = SquareFamily(std::move(plan.squares));
    c.designated = {plan.x_index, plan.y_index};
    if (edge_mode) c.designated.push_back(plan.z_index);

    // The realized intersection graph must match the intended chain exactly.
    const IntersectionGraph g = build_graph(c.family);
    std::vector<std::vector<char>> want(g.n, std::vector<char>(g.n, 0));
    for (auto [u, v] : plan.intended_edges) want[u][v] = want[v][u] = 1;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (static_cast<bool>(want[i][j]) != g.adjacent(i, j))
                throw ConstructionInvalid("k_chain: realized adjacency differs from the gadget");
    c.expected.chi = k;  // middles plus a junction form a k-clique
    return c;
}

// Disjoint translated copies; nu and tau scale additively.
inline NamedConstruction disjoint_copies(const NamedConstruction& base, int copies) {
    if (copies < 1) throw ConstructionInvalid("disjoint_copies: copies must be >= 1");
    double min_x = 1e300, max_x = -1e300;
    for (const Square& s : base.family.squares) {
        min_x = std::min(min_x, s.centre.x - s.circumradius());
        max_x = std::max(max_x, s.centre.x + s.circumradius());
    }
    const double stride = (max_x - min_x) + 1.0;
    std::vector<Square> fam;
    for (int c = 0; c < copies; ++c)
        for (const Square& s : base.family.squares)
            fam.emplace_back(Point{s.centre.x + c * stride, s.centre.y}, s.side, s.rot);
    NamedConstruction out;
    out.name = base.name + "_x" + std::to_string(copies);
    out.family = SquareFamily(std::move(fam), base.family.tol);
    if (base.expected.nu) out.expected.nu = *base.expected.nu * copies;
    if (base.expected.tau) out.expected.tau = *base.expected.tau * copies;
    return out;
}

enum class AngleMode { Axis, UnitRotated, Free };

// Seeded random family inside a square window.
inline SquareFamily random_family(int n, double side_lo, double side_hi, AngleMode mode,
                                  double window, std::uint64_t seed) {
    if (n < 1) throw PreconditionViolated("random_family: n must be >= 1");
    Rng rng(seed);
    std::vector<Square> fam;
    fam.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double side = mode == AngleMode::UnitRotated ? 1.0 : rng.uniform(side_lo, side_hi);
        const double rot = mode == AngleMode::Axis ? 0.0 : rng.uniform(0.0, kHalfPi);
        const Point c{rng.uniform(-window / 2, window / 2), rng.uniform(-window / 2, window / 2)};
        fam.emplace_back(c, side, rot);
    }
    return SquareFamily(std::move(fam));
}

inline NamedConstruction construction_by_name(const std::string& name, int param = 1) {
    if (name == "three_pairwise_unit") return three_pairwise_unit();
    if (name == "pinwheel_tau2") return pinwheel_tau2();
    if (name == "nine_square_tau3") return nine_square_tau3();
    if (name == "thirteen_square_tau4") return thirteen_square_tau4();
    if (name == "c5_cycle") return c5_cycle(param);
    if (name == "seven_disjoint_neighbors") return seven_disjoint_neighbors(false);
    if (name == "seven_disjoint_neighbors_trimmed") return seven_disjoint_neighbors(true);
    if (name == "k_chain")
        return k_chain({Point{0.0, 0.0}, Point{1.6, 0.0}}, std::max(3, param), false);
    if (name == "k_chain_edge")
        return k_chain({Point{0.0, 0.0}, Point{1.6, 0.0}}, std::max(3, param), true);
    throw ConstructionInvalid("unknown construction: " + name);
}

}  // namespace sqhit
