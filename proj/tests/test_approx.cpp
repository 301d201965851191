#include <gtest/gtest.h>

#include "sqhit/approx.hpp"
#include "sqhit/constructions.hpp"

using namespace sqhit;

namespace {

SolveLimits unlimited() {
    SolveLimits lim;
    lim.override_cap = true;
    return lim;
}

void expect_valid_hitting(const SquareFamily& fam, const HittingRun& run) {
    for (std::size_t i = 0; i < fam.size(); ++i) {
        bool hit = false;
        for (const Point& p : run.points)
            if (contains_point(fam[i], p, fam.tol)) {
                hit = true;
                break;
            }
        EXPECT_TRUE(hit) << "square " << i << " unhit";
    }
    EXPECT_LE(run.points.size(), run.per_round_bound * run.rounds.size());
    // recorded pivots form a packing
    for (std::size_t a = 0; a < run.rounds.size(); ++a)
        for (std::size_t b = a + 1; b < run.rounds.size(); ++b)
            EXPECT_FALSE(squares_intersect(fam[run.rounds[a].pivot], fam[run.rounds[b].pivot],
                                           fam.tol));
}

}  // namespace

TEST(HitGreedy, DisjointUnitFamilySixPoint) {
    std::vector<Square> squares;
    for (int i = 0; i < 6; ++i) squares.emplace_back(Point{3.0 * i, 0.0}, 1.0, 0.2 * i);
    SquareFamily fam(std::move(squares));
    const auto run = hit_greedy(fam, HitterKind::SixPointLeftmost);
    EXPECT_EQ(run.rounds.size(), 6u);
    EXPECT_LE(run.points.size(), 36u);
    expect_valid_hitting(fam, run);
}

TEST(HitGreedy, ThirteenSquareFamilyTenPointSingleRound) {
    const auto c = thirteen_square_tau4();
    const auto run = hit_greedy(c.family, HitterKind::TenPoint);
    EXPECT_EQ(run.rounds.size(), 1u);
    EXPECT_LE(run.points.size(), 10u);
    expect_valid_hitting(c.family, run);
}

TEST(HitGreedy, RatioAgainstExactNuOnRandomUnitFamilies) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const SquareFamily fam = random_family(20, 1.0, 1.0, AngleMode::UnitRotated, 5.0, seed);
        const auto run = hit_greedy(fam, HitterKind::SixPointLeftmost);
        expect_valid_hitting(fam, run);
        const int nu = exact_nu(fam, unlimited()).value;
        EXPECT_LE(static_cast<int>(run.rounds.size()), nu);
        EXPECT_LE(run.points.size(), 6u * nu);
    }
}

TEST(HitGreedy, RatioTenPointOnFreeFamilies) {
    for (std::uint64_t seed = 50; seed < 70; ++seed) {
        const SquareFamily fam = random_family(15, 0.5, 2.0, AngleMode::Free, 5.0, seed);
        const auto run = hit_greedy(fam, HitterKind::TenPoint);
        expect_valid_hitting(fam, run);
        const int nu = exact_nu(fam, unlimited()).value;
        EXPECT_LE(run.points.size(), 10u * nu);
        const int tau = exact_tau(fam, unlimited()).value;
        EXPECT_LE(tau, static_cast<int>(run.points.size()));
    }
}

TEST(HitGreedy, AxisParallelModes) {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        const SquareFamily fam = random_family(12, 0.5, 2.0, AngleMode::Axis, 4.0, seed);
        const auto run = hit_greedy(fam, HitterKind::AxisParallel4);
        expect_valid_hitting(fam, run);
        EXPECT_LE(run.points.size(), 4u * exact_nu(fam, unlimited()).value);
    }
    for (std::uint64_t seed = 120; seed < 130; ++seed) {
        const SquareFamily fam = random_family(12, 1.0, 1.0, AngleMode::Axis, 4.0, seed);
        const auto run = hit_greedy(fam, HitterKind::AxisParallelLeftmost2);
        expect_valid_hitting(fam, run);
        EXPECT_LE(run.points.size(), 2u * exact_nu(fam, unlimited()).value);
    }
}

TEST(HitGreedy, TwelveCoverMode) {
    for (std::uint64_t seed = 140; seed < 146; ++seed) {
        const SquareFamily fam = random_family(10, 1.0, 1.0, AngleMode::UnitRotated, 4.0, seed);
        const auto run = hit_greedy(fam, HitterKind::TwelvePointCover);
        expect_valid_hitting(fam, run);
        EXPECT_LE(run.points.size(), 12u * exact_nu(fam, unlimited()).value);
    }
}

TEST(HitGreedy, ModeApplicabilityErrors) {
    const SquareFamily mixed_sides = random_family(6, 0.5, 2.0, AngleMode::Free, 4.0, 7);
    EXPECT_THROW(hit_greedy(mixed_sides, HitterKind::SixPointLeftmost), ModeInapplicable);
    EXPECT_THROW(hit_greedy(mixed_sides, HitterKind::TwelvePointCover), ModeInapplicable);
    const SquareFamily rotated = random_family(6, 1.0, 1.0, AngleMode::UnitRotated, 4.0, 8);
    EXPECT_THROW(hit_greedy(rotated, HitterKind::AxisParallel4), ModeInapplicable);
    EXPECT_THROW(hit_greedy(rotated, HitterKind::AxisParallelLeftmost2), ModeInapplicable);
    EXPECT_THROW(hit_greedy(SquareFamily{}, HitterKind::TenPoint), PreconditionViolated);
}

TEST(ColourUnitSquares, Examples) {
    const auto c5 = c5_cycle(1);
    const auto run = colour_unit_squares(c5.family);
    EXPECT_EQ(run.k_used, 3);
    EXPECT_LE(run.k_used, run.bound);

    SquareFamily disjoint({Square({0, 0}, 1, 0), Square({5, 0}, 1, 0)});
    EXPECT_EQ(colour_unit_squares(disjoint).k_used, 1);

    const SquareFamily mixed = random_family(5, 0.5, 2.0, AngleMode::Free, 4.0, 3);
    EXPECT_THROW(colour_unit_squares(mixed), NotUnitFamily);
}

TEST(ColourUnitSquares, RandomFamiliesProperAndBounded) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SquareFamily fam = random_family(30, 1.0, 1.0, AngleMode::UnitRotated, 5.0, seed);
        const auto run = colour_unit_squares(fam);
        const IntersectionGraph g = build_graph(fam);
        for (int i = 0; i < g.n; ++i)
            for (int j : g.neighbors[i]) EXPECT_NE(run.colour_of[i], run.colour_of[j]);
        const int delta = max_degree_delta(fam).value;
        EXPECT_LE(run.k_used, 6 * delta);
        // elimination-order certificate: per-vertex back-degrees
        const auto back = back_degrees(g, run.order);
        for (int b : back) EXPECT_LE(b, 6 * delta - 1);
    }
}

TEST(ColourSquares, ExamplesAndBounds) {
    // a family with Delta = 2 gets at most 9 colours
    const auto fig1 = three_pairwise_unit();
    const auto run = colour_squares(fig1.family);
    EXPECT_LE(run.k_used, 9);

    // replicated C5 with omega = 4: proper, within 9*(Delta-1), optimum is 5
    const auto rep = c5_cycle(2);
    const auto run2 = colour_squares(rep.family);
    const int delta = max_degree_delta(rep.family).value;
    ASSERT_GE(delta, 2);
    EXPECT_LE(run2.k_used, 9 * (delta - 1));
    EXPECT_EQ(exact_chi(rep.family).value, 5);

    SquareFamily single({Square({0, 0}, 1, 0)});
    EXPECT_EQ(colour_squares(single).k_used, 1);
}

TEST(ColourSquares, RandomFamiliesProperAndBounded) {
    for (std::uint64_t seed = 30; seed < 50; ++seed) {
        const SquareFamily fam = random_family(25, 0.5, 2.0, AngleMode::Free, 5.0, seed);
        const auto run = colour_squares(fam);
        const IntersectionGraph g = build_graph(fam);
        for (int i = 0; i < g.n; ++i)
            for (int j : g.neighbors[i]) EXPECT_NE(run.colour_of[i], run.colour_of[j]);
        const int delta = max_degree_delta(fam).value;
        if (delta >= 2) EXPECT_LE(run.k_used, 9 * (delta - 1));
    }
}

TEST(Degeneracy, Examples) {
    EXPECT_EQ(degeneracy(c5_cycle(1).family).first, 2);
    // pivot with disjoint neighbours: a star has degeneracy 1
    EXPECT_EQ(degeneracy(seven_disjoint_neighbors().family).first, 1);
    SquareFamily disjoint({Square({0, 0}, 1, 0), Square({5, 0}, 1, 0)});
    EXPECT_EQ(degeneracy(disjoint).first, 0);
}
