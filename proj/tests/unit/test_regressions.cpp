// Bit-compares against the frozen tables in tests/data/regressions.json.
#include "support.hpp"

#include "wedgelab/counting.hpp"
#include "wedgelab/incidence.hpp"
#include "wedgelab/report.hpp"
#include "wedgelab/sumproduct.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>

using namespace wlt;
using Json = nlohmann::json;

namespace {

const Json& tables()
{
    static const Json data = [] {
        std::ifstream in(std::string(WEDGELAB_DATA_DIR) + "/regressions.json");
        if (!in)
            throw std::runtime_error("regressions.json not found");
        return Json::parse(in);
    }();
    return data;
}

} // namespace

TEST(Regressions, GridTable)
{
    for (const auto& row : tables()["grid"]) {
        const std::size_t n = row["n"];
        SCOPED_TRACE("grid " + std::to_string(n));
        const PointSet g = grid(n);
        const EnergyReport e = energy(g, 2);
        EXPECT_EQ(distinct_areas(g, 2), row["distinct_areas"].get<std::size_t>());
        EXPECT_EQ(distinct_dot_products(g, 2), row["distinct_dots"].get<std::size_t>());
        EXPECT_EQ(e.energy, row["energy"].get<std::uint64_t>());
        EXPECT_EQ(e.distinct_values, row["wedge_values"].get<std::uint64_t>());
        EXPECT_EQ(e.total_pairs, row["positive_pairs"].get<std::uint64_t>());
        EXPECT_EQ(max_collinear(g), row["max_collinear"].get<std::size_t>());
        if (row.contains("quadruples_restricted")) {
            EXPECT_EQ(quadruple_count_naive(g, true), row["quadruples_restricted"].get<std::uint64_t>());
            EXPECT_EQ(quadruple_count_naive(g, false), e.energy);
        }
    }
}

TEST(Regressions, RangeSets)
{
    for (const auto& row : tables()["range_sets"]) {
        const std::size_t n = row["n"];
        SCOPED_TRACE("range " + std::to_string(n));
        const RealSet a = RealSet::range(n);
        EXPECT_EQ(product_sumset(a, SumSign::Minus), row["difference_set"].get<std::size_t>());
        EXPECT_EQ(product_sumset(a, SumSign::Plus), row["sum_set"].get<std::size_t>());
        EXPECT_EQ(dio_solution_count(a), row["dio_solutions"].get<std::uint64_t>());
    }
}

TEST(Regressions, AreaTrend)
{
    for (const auto& row : tables()["area_trend"]) {
        const std::size_t n = row["n"];
        const PointSet g = grid(n);
        const std::size_t areas = distinct_areas(g, 2);
        EXPECT_EQ(areas, row["distinct_areas"].get<std::size_t>());
        const long double N = static_cast<long double>(g.size());
        EXPECT_EQ(to_decimal(areas * std::log(N) / N), row["ratio"].get<std::string>()) << "n=" << n;
    }
}

TEST(Regressions, GridThreeFamily)
{
    const Json& want = tables()["grid3_family"];
    const NormalizedSet rotated = normalize_rotation(grid(3));
    EXPECT_EQ(to_string(rotated.rotation.cos), want["rotation"][0].get<std::string>());
    EXPECT_EQ(to_string(rotated.rotation.sin), want["rotation"][1].get<std::string>());

    const LineFamily fam4 = build_family(rotated.points, false);
    const Line3Family fam3 = project(fam4);
    EXPECT_EQ(fam4.size(), want["line_count"].get<std::size_t>());
    EXPECT_EQ(pairwise_intersections(fam4).size(), want["intersections_4d"].get<std::size_t>());
    EXPECT_EQ(pairwise_intersections(fam3).size(), want["intersections_3d"].get<std::size_t>());
    EXPECT_EQ(max_concurrency(fam4), want["max_concurrency_4d"].get<std::size_t>());
    EXPECT_EQ(max_concurrency(fam3), want["max_concurrency_3d"].get<std::size_t>());
    EXPECT_EQ(max_coplanar(fam3).count, want["max_coplanar"].get<std::size_t>());

    const Line3Family oriented = project(build_family(rotated.points, true));
    EXPECT_EQ(oriented.size(), want["oriented_line_count"].get<std::size_t>());
    const RegulusResult reg = regulus_max(oriented);
    EXPECT_FALSE(reg.lower_bound);
    EXPECT_EQ(reg.count, want["oriented_regulus_max"].get<std::size_t>());
}

TEST(Regressions, BipartitePerp)
{
    const PointSet g = grid(2);
    EXPECT_EQ(distinct_areas_bipartite(g, perp(g)), tables()["bipartite_grid2_perp"].get<std::size_t>());
}
