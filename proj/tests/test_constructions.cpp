#include <gtest/gtest.h>

#include "sqhit/approx.hpp"
#include "sqhit/constructions.hpp"
#include "sqhit/exact.hpp"

using namespace sqhit;

namespace {

SolveLimits unlimited() {
    SolveLimits lim;
    lim.override_cap = true;
    return lim;
}

void expect_reproduces(const NamedConstruction& c) {
    if (c.expected.tau) EXPECT_EQ(exact_tau(c.family, unlimited()).value, *c.expected.tau) << c.name;
    if (c.expected.nu) EXPECT_EQ(exact_nu(c.family, unlimited()).value, *c.expected.nu) << c.name;
    if (c.expected.chi) EXPECT_EQ(exact_chi(c.family, unlimited()).value, *c.expected.chi) << c.name;
    if (c.expected.omega)
        EXPECT_EQ(exact_omega(c.family, unlimited()).value, *c.expected.omega) << c.name;
    if (c.expected.delta)
        EXPECT_EQ(max_degree_delta(c.family).value, *c.expected.delta) << c.name;
}

// All proper k-colourings of a small family, reported through a callback.
template <typename F>
void for_each_colouring(const IntersectionGraph& g, int k, std::vector<int>& colour, int v,
                        const F& f) {
    if (v == g.n) {
        f(colour);
        return;
    }
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u : g.neighbors[v])
            if (u < v && colour[u] == c) ok = false;
        if (!ok) continue;
        colour[v] = c;
        for_each_colouring(g, k, colour, v + 1, f);
    }
    colour[v] = -1;
}

}  // namespace

TEST(Constructions, ExpectedValuesReproduced) {
    expect_reproduces(three_pairwise_unit());
    expect_reproduces(pinwheel_tau2());
    expect_reproduces(nine_square_tau3());
    expect_reproduces(thirteen_square_tau4());
    expect_reproduces(c5_cycle(1));
    expect_reproduces(c5_cycle(2));
    expect_reproduces(seven_disjoint_neighbors(false));
    expect_reproduces(seven_disjoint_neighbors(true));
}

TEST(Constructions, NineSquareRobustToShiftChoice) {
    for (double shift : {0.03, 0.06, 0.10}) {
        const auto c = nine_square_tau3(shift);
        EXPECT_EQ(exact_tau(c.family, unlimited()).value, 3) << "shift " << shift;
        EXPECT_EQ(exact_nu(c.family, unlimited()).value, 1) << "shift " << shift;
        EXPECT_EQ(build_graph(c.family).edge_count(), 36u) << "shift " << shift;
    }
    EXPECT_THROW(nine_square_tau3(0.0), ConstructionInvalid);
    EXPECT_THROW(nine_square_tau3(0.5), ConstructionInvalid);
}

TEST(Constructions, ThirteenSquareLayers) {
    const auto c = thirteen_square_tau4();
    ASSERT_EQ(c.family.size(), 13u);
    // complete intersection graph
    EXPECT_EQ(build_graph(c.family).edge_count(), 78u);
    // at least three distinct sizes
    std::vector<double> sides;
    for (const Square& s : c.family.squares) sides.push_back(s.side);
    std::sort(sides.begin(), sides.end());
    sides.erase(std::unique(sides.begin(), sides.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                sides.end());
    EXPECT_GE(sides.size(), 3u);

    // every pair of mill layers (pink/red/orange) needs 3 points
    auto layer = [&](int first) {
        std::vector<Square> v;
        for (int i = first; i < first + 3; ++i) v.push_back(c.family[i]);
        return v;
    };
    const auto pinks = layer(0), reds = layer(3), oranges = layer(6);
    auto pair_tau = [&](const std::vector<Square>& a, const std::vector<Square>& b) {
        std::vector<Square> all = a;
        for (const Square& s : b) all.push_back(s);
        return exact_tau(SquareFamily(all), unlimited()).value;
    };
    EXPECT_EQ(pair_tau(pinks, reds), 3);
    EXPECT_EQ(pair_tau(pinks, oranges), 3);
    EXPECT_EQ(pair_tau(reds, oranges), 3);
}

TEST(Constructions, PinwheelTwoPointCoversNeedAVertex) {
    const auto pw = pinwheel_tau2();
    const auto tau = exact_tau(pw.family);
    ASSERT_EQ(tau.value, 2);
    bool witness_has_vertex = false;
    for (const Point& p : tau.witness_points)
        for (const Point& v : pw.key_points)
            if (dist(p, v) < 1e-6) witness_has_vertex = true;
    EXPECT_TRUE(witness_has_vertex);
}

TEST(Constructions, SevenNeighbours) {
    const auto full = seven_disjoint_neighbors(false);
    ASSERT_EQ(full.family.size(), 8u);
    // pivot meets everyone; neighbours pairwise disjoint
    for (std::size_t i = 1; i < full.family.size(); ++i) {
        EXPECT_TRUE(squares_intersect(full.family[0], full.family[i], full.family.tol));
        for (std::size_t j = i + 1; j < full.family.size(); ++j)
            EXPECT_FALSE(squares_intersect(full.family[i], full.family[j], full.family.tol));
    }
    // exactly two neighbours strictly left of the pivot centre
    int left = 0;
    for (std::size_t i = 1; i < full.family.size(); ++i)
        if (full.family[i].centre.x < full.family[0].centre.x) ++left;
    EXPECT_EQ(left, 2);

    const auto trimmed = seven_disjoint_neighbors(true);
    ASSERT_EQ(trimmed.family.size(), 6u);
    for (std::size_t i = 1; i < trimmed.family.size(); ++i)
        EXPECT_GE(trimmed.family[i].centre.x, trimmed.family[0].centre.x);
}

TEST(Constructions, KChainForcesEqualEndpointColours) {
    for (int k : {3, 4}) {
        const auto chain = k_chain({Point{0, 0}, Point{1.6, 0}}, k, false);
        const IntersectionGraph g = build_graph(chain.family);
        std::vector<int> colour(g.n, -1);
        int total = 0;
        const int x = chain.designated[0], y = chain.designated[1];
        for_each_colouring(g, k, colour, 0, [&](const std::vector<int>& c) {
            ++total;
            EXPECT_EQ(c[x], c[y]);
        });
        EXPECT_GT(total, 0) << "gadget must be " << k << "-colourable";
    }
}

TEST(Constructions, KChainEdgeForcesDifferentColours) {
    const auto chain = k_chain({Point{0, 0}, Point{1.6, 0}}, 3, true);
    const IntersectionGraph g = build_graph(chain.family);
    std::vector<int> colour(g.n, -1);
    int total = 0;
    const int x = chain.designated[0], z = chain.designated[2];
    for_each_colouring(g, 3, colour, 0, [&](const std::vector<int>& c) {
        ++total;
        EXPECT_NE(c[x], c[z]);
    });
    EXPECT_GT(total, 0);
}

TEST(Constructions, KChainAroundCorners) {
    const auto chain =
        k_chain({Point{0, 0}, Point{3.2, 0}, Point{3.2, 3.2}, Point{6.4, 3.2}}, 3, false);
    const IntersectionGraph g = build_graph(chain.family);
    std::vector<int> colour(g.n, -1);
    int total = 0;
    const int x = chain.designated[0], y = chain.designated[1];
    for_each_colouring(g, 3, colour, 0, [&](const std::vector<int>& c) {
        ++total;
        EXPECT_EQ(c[x], c[y]);
    });
    EXPECT_GT(total, 0);
}

TEST(Constructions, KChainMalformedPaths) {
    EXPECT_THROW(k_chain({Point{0, 0}}, 3, false), MalformedPath);
    EXPECT_THROW(k_chain({Point{0, 0}, Point{1, 1}}, 3, false), MalformedPath);  // diagonal
    EXPECT_THROW(k_chain({Point{0, 0}, Point{1.6, 0}, Point{3.2, 0}}, 3, false),
                 MalformedPath);  // two horizontal segments in a row
    EXPECT_THROW(k_chain({Point{0, 0}, Point{0.5, 0}}, 3, false), MalformedPath);  // too short
    EXPECT_THROW(k_chain({Point{0, 0}, Point{1.6, 0}}, 2, false), MalformedPath);
}

TEST(Constructions, DisjointCopiesScaleAdditively) {
    const auto one = disjoint_copies(nine_square_tau3(), 1);
    EXPECT_EQ(one.family.size(), 9u);
    EXPECT_EQ(exact_tau(one.family, unlimited()).value, 3);

    const auto three = disjoint_copies(nine_square_tau3(), 3);
    EXPECT_EQ(three.family.size(), 27u);
    ASSERT_TRUE(three.expected.tau);
    EXPECT_EQ(*three.expected.tau, 9);
    ASSERT_TRUE(three.expected.nu);
    EXPECT_EQ(*three.expected.nu, 3);
}

TEST(Constructions, RandomFamilyContracts) {
    const SquareFamily a = random_family(1, 0.5, 1.0, AngleMode::Free, 4.0, 5);
    EXPECT_EQ(a.size(), 1u);
    EXPECT_LE(std::abs(a[0].centre.x), 2.0);

    const SquareFamily b = random_family(20, 0.5, 1.0, AngleMode::UnitRotated, 4.0, 9);
    for (const Square& s : b.squares) EXPECT_DOUBLE_EQ(s.side, 1.0);

    const SquareFamily c1 = random_family(15, 0.5, 2.0, AngleMode::Free, 6.0, 1234);
    const SquareFamily c2 = random_family(15, 0.5, 2.0, AngleMode::Free, 6.0, 1234);
    for (std::size_t i = 0; i < c1.size(); ++i) {
        EXPECT_DOUBLE_EQ(c1[i].centre.x, c2[i].centre.x);
        EXPECT_DOUBLE_EQ(c1[i].centre.y, c2[i].centre.y);
        EXPECT_DOUBLE_EQ(c1[i].side, c2[i].side);
        EXPECT_DOUBLE_EQ(c1[i].rot, c2[i].rot);
    }

    const SquareFamily d = random_family(10, 0.5, 1.0, AngleMode::Axis, 4.0, 77);
    for (const Square& s : d.squares) EXPECT_DOUBLE_EQ(s.rot, 0.0);
}

TEST(Constructions, ByNameLookup) {
    EXPECT_EQ(construction_by_name("pinwheel_tau2").family.size(), 3u);
    EXPECT_EQ(construction_by_name("c5_cycle", 2).family.size(), 10u);
    EXPECT_THROW(construction_by_name("unknown"), ConstructionInvalid);
}
