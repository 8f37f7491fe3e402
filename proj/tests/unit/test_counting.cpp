#include "support.hpp"

#include "wedgelab/counting.hpp"
#include "wedgelab/error.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace wlt;

TEST(DistinctAreas, Examples)
{
    EXPECT_EQ(distinct_areas(pts("1 0\n0 1")), 1u);
    EXPECT_EQ(distinct_areas(pts("1 1\n2 2\n3 3")), 0u);
    EXPECT_EQ(distinct_areas(grid(3)), 8u);
    EXPECT_EQ(distinct_areas(PointSet{}), 0u);
}

TEST(DistinctAreasBipartite, Examples)
{
    const PointSet basis = pts("1 0\n0 1");
    EXPECT_EQ(distinct_areas_bipartite(basis, basis), 1u);
    EXPECT_EQ(distinct_areas_bipartite(pts("1 0"), pts("0 1\n0 2")), 2u);
    // grid {1,2}^2 against its perp, brute force over the 16 pairs
    const PointSet g = grid(2);
    const PointSet q = perp(g);
    std::set<Scalar> halves;
    for (const auto& u : g)
        for (const auto& v : q)
            if (wedge(u, v) != 0)
                halves.insert(abs(wedge(u, v)) / 2);
    EXPECT_EQ(distinct_areas_bipartite(g, q), halves.size());
}

TEST(DistinctDots, Examples)
{
    EXPECT_EQ(distinct_dot_products(pts("1 0")), 1u);
    EXPECT_EQ(distinct_dot_products(pts("1 0\n0 1")), 2u);
    EXPECT_EQ(distinct_dot_products(grid(3)), 14u);
}

TEST(WedgeHistogram, Examples)
{
    const auto basis = wedge_histogram(pts("1 0\n0 1"));
    ASSERT_EQ(basis.entries.size(), 1u);
    EXPECT_EQ(basis.entries[0], std::make_pair(Scalar(1), std::uint64_t{1}));

    const auto tri = wedge_histogram(pts("1 0\n0 1\n1 1"));
    ASSERT_EQ(tri.entries.size(), 1u);
    EXPECT_EQ(tri.entries[0], std::make_pair(Scalar(1), std::uint64_t{3}));
    EXPECT_EQ(tri.total, 3u);

    const auto flat = wedge_histogram(pts("1 1\n2 2"));
    EXPECT_TRUE(flat.entries.empty());
    EXPECT_EQ(flat.total, 0u);
}

TEST(Energy, Examples)
{
    EXPECT_EQ(energy(pts("1 0\n0 1")).energy, 1u);
    EXPECT_EQ(energy(pts("1 0\n0 1\n1 1")).energy, 9u);
    const PointSet g = grid(2);
    EXPECT_EQ(energy(g).energy, quadruple_count_naive(g, false));
}

TEST(QuadrupleOracle, Examples)
{
    const PointSet basis = pts("1 0\n0 1");
    EXPECT_EQ(quadruple_count_naive(basis, false), 1u);
    EXPECT_EQ(quadruple_count_naive(basis, true), 0u);
    const PointSet tri = pts("1 0\n0 1\n1 1");
    EXPECT_EQ(quadruple_count_naive(tri, false), 9u);
    EXPECT_EQ(quadruple_count_naive(tri, true), 2u);
}

TEST(QuadrupleOracle, CapIsEnforced)
{
    try {
        quadruple_count_naive(grid(4), false, 12);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
    }
    EXPECT_NO_THROW(quadruple_count_naive(grid(4), false, 16));
}

TEST(CountingProperties, HistogramInvariants)
{
    for (const auto& [name, p] : small_sets(12, 10)) {
        const auto h = wedge_histogram(p);
        std::uint64_t sum = 0, sq = 0;
        for (std::size_t k = 0; k < h.entries.size(); ++k) {
            EXPECT_GT(h.entries[k].first, 0) << name;
            EXPECT_GE(h.entries[k].second, 1u) << name;
            if (k > 0)
                EXPECT_LT(h.entries[k - 1].first, h.entries[k].first) << name;
            sum += h.entries[k].second;
            sq += h.entries[k].second * h.entries[k].second;
        }
        std::uint64_t positive = 0;
        for (const auto& u : p)
            for (const auto& v : p)
                positive += wedge(u, v) > 0;
        EXPECT_EQ(h.total, sum) << name;
        EXPECT_EQ(h.total, positive) << name;
        const auto e = energy(p);
        EXPECT_EQ(e.energy, sq) << name;
        EXPECT_EQ(e.distinct_values, h.entries.size()) << name;
        EXPECT_TRUE(cauchy_schwarz_holds(e)) << name;
    }
}

TEST(CountingProperties, EnergyMatchesOracle)
{
    for (const auto& [name, p] : small_sets(10, 10)) {
        const auto unrestricted = quadruple_count_naive(p, false);
        EXPECT_EQ(energy(p).energy, unrestricted) << name;
        EXPECT_LE(quadruple_count_naive(p, true), unrestricted) << name;
    }
}

TEST(CountingProperties, DotsBracketedByBipartiteAreas)
{
    for (const auto& [name, p] : small_sets(12, 10)) {
        const auto dots = distinct_dot_products(p);
        const auto bip = distinct_areas_bipartite(p, perp(p));
        EXPECT_GE(dots, bip) << name;
        EXPECT_LE(dots, 2 * bip + 1) << name;
    }
}

TEST(CountingProperties, CountsAreRotationInvariant)
{
    for (const auto& [name, p] : small_sets(12, 10)) {
        const PointSet q = normalize_rotation(p).points;
        EXPECT_EQ(distinct_areas(q), distinct_areas(p)) << name;
        EXPECT_EQ(distinct_dot_products(q), distinct_dot_products(p)) << name;
        EXPECT_EQ(energy(q).energy, energy(p).energy) << name;
    }
}

TEST(CountingProperties, WorkerCountDoesNotChangeResults)
{
    const PointSet p = random_set(40, 6, 77);
    const auto h1 = wedge_histogram(p, 1);
    const auto areas = distinct_areas(p, 1);
    const auto dots = distinct_dot_products(p, 1);
    for (unsigned w : {2u, 3u, 8u, 0u}) {
        const auto hw = wedge_histogram(p, w);
        EXPECT_EQ(hw.entries, h1.entries) << w;
        EXPECT_EQ(hw.total, h1.total) << w;
        EXPECT_EQ(distinct_areas(p, w), areas) << w;
        EXPECT_EQ(distinct_dot_products(p, w), dots) << w;
        EXPECT_EQ(distinct_areas_bipartite(p, perp(p), w), distinct_areas_bipartite(p, perp(p), 1)) << w;
    }
}

TEST(CauchySchwarz, VacuousWithoutPairs)
{
    EXPECT_TRUE(cauchy_schwarz_holds(EnergyReport{}));
    EXPECT_FALSE(cauchy_schwarz_holds(EnergyReport{1, 1, 2, std::nullopt}));
}
