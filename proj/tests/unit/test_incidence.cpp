#include "support.hpp"

#include "wedgelab/error.hpp"
#include "wedgelab/incidence.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace wlt;

namespace {

Vec3 v3(const Scalar& a, const Scalar& b, const Scalar& c)
{
    return {a, b, c};
}

Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Scalar dot3(const Vec3& a, const Vec3& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 sub(const Vec3& a, const Vec3& b)
{
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

bool is_zero(const Vec3& a)
{
    return a[0] == 0 && a[1] == 0 && a[2] == 0;
}

// Brute-force coplanar count: every plane spanned by two distinct coplanar
// lines, scored against every line by direct normal tests.
std::size_t coplanar_oracle(const std::vector<AffineLine<3>>& lines)
{
    std::size_t best = lines.empty() ? 0 : 1;
    for (std::size_t a = 0; a < lines.size(); ++a)
        for (std::size_t b = a + 1; b < lines.size(); ++b) {
            const Vec3 offset = sub(lines[b].base, lines[a].base);
            Vec3 normal = cross(lines[a].dir, lines[b].dir);
            if (is_zero(normal))
                normal = cross(lines[a].dir, offset);
            else if (dot3(normal, offset) != 0)
                continue; // skew
            if (is_zero(normal))
                continue; // same line
            std::size_t count = 0;
            for (const auto& l : lines)
                count += dot3(normal, l.dir) == 0 && dot3(normal, sub(l.base, lines[a].base)) == 0;
            best = std::max(best, count);
        }
    return best;
}

std::vector<AffineLine<3>> lines_of(const Line3Family& f)
{
    std::vector<AffineLine<3>> out;
    for (const auto& l : f.lines)
        out.push_back(l.line);
    return out;
}

Line3Family synthetic(std::vector<AffineLine<3>> lines)
{
    Line3Family f;
    for (std::size_t k = 0; k < lines.size(); ++k)
        f.lines.push_back({lines[k].canonical(), {k, k}});
    return f;
}

// Both rulings of x3 = x1*x2.
std::vector<AffineLine<3>> paraboloid_rulings(const std::vector<Scalar>& params)
{
    std::vector<AffineLine<3>> out;
    for (const auto& a : params)
        out.push_back({v3(a, 0, 0), v3(0, 1, a)});
    for (const auto& b : params)
        out.push_back({v3(0, b, 0), v3(1, 0, b)});
    return out;
}

} // namespace

TEST(SolvePair, IntersectionOfTheTriangleLines)
{
    const auto a = transform_line(pt(1, 0), pt(1, 1));
    const auto b = transform_line(pt(1, 1), pt(0, 1));
    const auto s = solve_pair(a.line, b.line);
    ASSERT_EQ(s.relation, LineRelation::Intersecting);
    EXPECT_EQ(s.point, (Vec4{1, -1, 1, 0}));
    EXPECT_EQ(a.line.at(s.t1), s.point);
    EXPECT_EQ(b.line.at(s.t2), s.point);
}

TEST(SolvePair, SameSourceParallelAndCoincident)
{
    const auto a = transform_line(pt(1, 2), pt(3, 5));
    const auto b = transform_line(pt(1, 2), pt(-2, 7));
    EXPECT_NE(solve_pair(a.line, b.line).relation, LineRelation::Intersecting);

    const AffineLine<3> p1{v3(0, 0, 0), v3(1, 2, 3)};
    const AffineLine<3> p2{v3(1, 0, 0), v3(2, 4, 6)};
    EXPECT_EQ(solve_pair(p1, p2).relation, LineRelation::Parallel);
    const AffineLine<3> p3{p1.at(4), v3(-1, -2, -3)};
    EXPECT_EQ(solve_pair(p1, p3).relation, LineRelation::Coincident);
    const AffineLine<3> skew{v3(0, 0, 1), v3(1, 0, 0)};
    EXPECT_EQ(solve_pair(AffineLine<3>{v3(0, 0, 0), v3(0, 1, 0)}, skew).relation, LineRelation::Skew);
}

TEST(PairwiseIntersections, CoincidentLinesAreAnError)
{
    const std::vector<AffineLine<3>> lines{{v3(0, 0, 0), v3(1, 2, 3)}, {v3(1, 2, 3), v3(2, 4, 6)}};
    try {
        pairwise_intersections<3>(std::span<const AffineLine<3>>(lines));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CoincidentLines);
    }
}

TEST(PairwiseIntersections, CapIsEnforced)
{
    const auto f = build_family(grid(3), false);
    try {
        pairwise_intersections(f, {10, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
    }
}

TEST(PairwiseIntersections, RecordsResubstituteExactly)
{
    for (const auto& [name, p] : small_sets(9, 6)) {
        const auto f = dedupe_family(build_family(normalize_rotation(p).points, false));
        for (const auto& r : pairwise_intersections(f)) {
            EXPECT_LT(r.first, r.second);
            EXPECT_EQ(f.lines[r.first].line.at(r.t1), r.point) << name;
            EXPECT_EQ(f.lines[r.second].line.at(r.t2), r.point) << name;
        }
        const auto f3 = project(f);
        for (const auto& r : pairwise_intersections(f3)) {
            EXPECT_EQ(f3.lines[r.first].line.at(r.t1), r.point) << name;
            EXPECT_EQ(f3.lines[r.second].line.at(r.t2), r.point) << name;
        }
    }
}

TEST(PairwiseIntersections, WorkerCountDoesNotChangeRecords)
{
    const auto f = dedupe_family(build_family(normalize_rotation(grid(4)).points, true));
    const auto ref = pairwise_intersections(f, {400, 1});
    for (unsigned w : {2u, 5u, 0u}) {
        const auto got = pairwise_intersections(f, {400, w});
        ASSERT_EQ(got.size(), ref.size());
        for (std::size_t k = 0; k < got.size(); ++k) {
            EXPECT_EQ(got[k].first, ref[k].first);
            EXPECT_EQ(got[k].second, ref[k].second);
            EXPECT_EQ(got[k].point, ref[k].point);
        }
    }
}

TEST(Correspondence, Examples)
{
    const auto tri = correspondence_check(pts("1 0\n0 1\n1 1"));
    EXPECT_EQ(tri.quadruples_restricted, 2u);
    EXPECT_EQ(tri.intersecting_line_pairs, 2u);
    EXPECT_TRUE(tri.bijection_holds);
    EXPECT_TRUE(tri.passed);
    ASSERT_EQ(tri.witnesses.size(), 2u);
    for (const auto& w : tri.witnesses)
        EXPECT_TRUE((w.matrix == Vec4{1, -1, 1, 0}) || (w.matrix == Vec4{0, 1, -1, 1})) << to_string(w.matrix[0]);

    const auto basis = correspondence_check(pts("1 0\n0 1"));
    EXPECT_EQ(basis.quadruples_restricted, 0u);
    EXPECT_EQ(basis.intersecting_line_pairs, 0u);
    EXPECT_TRUE(basis.passed);

    const auto g2 = correspondence_check(grid(2));
    EXPECT_EQ(g2.quadruples_restricted, g2.intersecting_line_pairs);
    EXPECT_TRUE(g2.passed);
}

TEST(Correspondence, HoldsOnEverySmallSet)
{
    for (const auto& [name, p] : small_sets(8, 12)) {
        const auto r = correspondence_check(p);
        EXPECT_EQ(r.quadruples_restricted, quadruple_count_naive(p, true)) << name;
        EXPECT_EQ(r.quadruples_restricted, r.intersecting_line_pairs) << name;
        EXPECT_TRUE(r.passed) << name;
    }
}

TEST(Correspondence, WitnessesAreGenuine)
{
    const PointSet p = grid(2);
    const auto r = correspondence_check(p, 12, 1000);
    ASSERT_EQ(r.witnesses.size(), r.quadruples_restricted);
    for (const auto& w : r.witnesses) {
        const auto& q = w.quadruple;
        EXPECT_EQ(wedge(p[q[0]], p[q[1]]), wedge(p[q[2]], p[q[3]]));
        EXPECT_GT(wedge(p[q[0]], p[q[1]]), 0);
        EXPECT_EQ(w.first_line, (IndexPair{q[0], q[2]}));
        EXPECT_EQ(w.second_line, (IndexPair{q[1], q[3]}));
        // the common matrix sends v1 -> v3 and v2 -> v4
        for (int k : {0, 1}) {
            const Point2& from = p[q[k]];
            const Point2& to = p[q[k + 2]];
            EXPECT_EQ(w.matrix[0] * from.x + w.matrix[1] * from.y, to.x);
            EXPECT_EQ(w.matrix[2] * from.x + w.matrix[3] * from.y, to.y);
        }
        EXPECT_EQ(w.matrix[0] * w.matrix[3] - w.matrix[1] * w.matrix[2], 1);
    }
}

TEST(Correspondence, CapIsEnforced)
{
    EXPECT_THROW(correspondence_check(grid(4), 12), Error);
}

TEST(MaxConcurrency, Examples)
{
    const auto tri = build_family(pts("1 0\n0 1\n1 1"), false);
    EXPECT_EQ(max_concurrency(tri), 2u);

    const auto f = build_family(grid(3), false);
    LineFamily same_source;
    same_source.points = f.points;
    for (std::size_t k = 0; k < f.size(); ++k)
        if (f.index[k].source == 0) {
            same_source.lines.push_back(f.lines[k]);
            same_source.index.push_back(f.index[k]);
        }
    ASSERT_GT(same_source.size(), 1u);
    EXPECT_EQ(max_concurrency(same_source), 1u);
    EXPECT_EQ(max_concurrency(LineFamily{}), 0u);
}

TEST(MaxCoplanar, ThreeLinesInAPlanePlusATransversal)
{
    const auto f = synthetic({{v3(0, 0, 0), v3(1, 0, 0)},
                              {v3(0, 0, 0), v3(0, 1, 0)},
                              {v3(0, 1, 0), v3(1, 1, 0)},
                              {v3(5, 5, -1), v3(0, 0, 1)}});
    const auto r = max_coplanar(f);
    EXPECT_EQ(r.count, 3u);
    ASSERT_TRUE(r.plane);
    EXPECT_EQ(r.plane->coeffs, (std::array<Integer, 4>{0, 0, 1, 0}));
    EXPECT_TRUE(r.plane->verified);
    EXPECT_EQ(r.plane->members, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(MaxCoplanar, MatchesBruteForceOnNormalizedFamilies)
{
    for (const auto& [name, p] : small_sets(8, 6)) {
        const auto f3 = project(dedupe_family(build_family(normalize_rotation(p).points, false)));
        const auto r = max_coplanar(f3);
        EXPECT_EQ(r.count, coplanar_oracle(lines_of(f3))) << name;
        EXPECT_LE(r.count, 2 * p.size()) << name;
        if (r.plane) {
            EXPECT_TRUE(r.plane->verified) << name;
            for (auto m : r.plane->members)
                EXPECT_TRUE(line_in_plane(f3.lines[m].line, r.plane->coeffs)) << name;
        }
    }
}

TEST(MaxCoplanar, TriangleFamily)
{
    const PointSet tri = pts("1 0\n0 1\n1 1");
    const auto f3 = project(build_family(normalize_rotation(tri).points, false));
    const auto r = max_coplanar(f3);
    EXPECT_LE(r.count, 6u);
    EXPECT_EQ(r.count, coplanar_oracle(lines_of(f3)));
}

TEST(CanonicalPlane, ScalesToCoprimeIntegers)
{
    const auto plane = canonical_plane(v3(make_scalar(-1, 2), 1, make_scalar(3, 4)), make_scalar(5, 4));
    EXPECT_EQ(plane, (std::array<Integer, 4>{2, -4, -3, -5}));
}

TEST(Quadric, FitThroughThreeSkewLines)
{
    const std::vector<AffineLine<3>> lines{{v3(0, 0, 0), v3(1, 0, 0)},
                                           {v3(0, 0, 1), v3(0, 1, 0)},
                                           {v3(1, 1, 2), v3(1, -1, 2)}};
    const auto q = quadric_through(lines[0], lines[1], lines[2]);
    ASSERT_TRUE(q);
    for (const auto& l : lines)
        EXPECT_TRUE(q->contains(l));
    EXPECT_EQ(q->kind, QuadricKind::RuledCandidate);
    const auto r = regulus_max(std::span<const AffineLine<3>>(lines));
    EXPECT_GE(r.count, 3u);
    EXPECT_EQ(r.skew_triples, 1u);
}

TEST(Quadric, ClassificationOfKnownSurfaces)
{
    // x1^2 + x2^2 - x3^2 - 1: one-sheet hyperboloid
    EXPECT_EQ(make_quadric({1, 1, -1, 0, 0, 0, 0, 0, 0, -1}).kind, QuadricKind::RuledCandidate);
    // x1^2 + x2^2 + x3^2 - 1: sphere
    EXPECT_EQ(make_quadric({1, 1, 1, 0, 0, 0, 0, 0, 0, -1}).kind, QuadricKind::Other);
    // x1*x2: a pair of planes
    EXPECT_EQ(make_quadric({0, 0, 0, 1, 0, 0, 0, 0, 0, 0}).kind, QuadricKind::Degenerate);
    // x1 + x2 - 1: a plane
    EXPECT_EQ(make_quadric({0, 0, 0, 0, 0, 0, 1, 1, 0, -1}).kind, QuadricKind::Degenerate);
    // x1*x2 - x3: hyperbolic paraboloid
    const auto hp = make_quadric({0, 0, 0, 2, 0, 0, 0, 0, -2, 0});
    EXPECT_EQ(hp.kind, QuadricKind::RuledCandidate);
    EXPECT_EQ(hp.coeffs[3], 1);
    EXPECT_EQ(hp.coeffs[8], -1);
}

TEST(Regulus, ConcurrentLinesHaveNoSkewTriple)
{
    const std::vector<AffineLine<3>> lines{{v3(1, 1, 1), v3(1, 0, 0)},
                                           {v3(1, 1, 1), v3(0, 1, 0)},
                                           {v3(1, 1, 1), v3(0, 0, 1)},
                                           {v3(1, 1, 1), v3(1, 2, 3)}};
    const auto r = regulus_max(std::span<const AffineLine<3>>(lines));
    EXPECT_EQ(r.count, 0u);
    EXPECT_FALSE(r.surface);
    EXPECT_EQ(r.skew_triples, 0u);
}

TEST(Regulus, HyperbolicParaboloidRulings)
{
    const auto lines = paraboloid_rulings({Scalar(1), Scalar(2), make_scalar(-1, 2), Scalar(3)});
    const auto r = regulus_max(std::span<const AffineLine<3>>(lines));
    EXPECT_EQ(r.count, 8u);
    ASSERT_TRUE(r.surface);
    for (const auto& l : lines)
        EXPECT_TRUE(r.surface->contains(l));
    const std::array<Scalar, 10> expected{0, 0, 0, 1, 0, 0, 0, 0, -1, 0};
    EXPECT_EQ(r.surface->coeffs, expected);
    EXPECT_FALSE(r.lower_bound);
}

TEST(Regulus, BudgetSubsamplesAndFlagsALowerBound)
{
    const auto lines = paraboloid_rulings({Scalar(1), Scalar(2), make_scalar(-1, 2), Scalar(3), Scalar(5)});
    RegulusOptions opts;
    opts.triple_budget = 20;
    const auto r = regulus_max(std::span<const AffineLine<3>>(lines), opts);
    EXPECT_TRUE(r.lower_bound);
    EXPECT_LE(r.triples_examined, 20u);
    EXPECT_LE(r.count, 10u);
    const auto again = regulus_max(std::span<const AffineLine<3>>(lines), opts);
    EXPECT_EQ(again.count, r.count);
    EXPECT_EQ(again.triples_examined, r.triples_examined);
}

TEST(Regulus, WorkerCountDoesNotChangeResult)
{
    const auto f3 = project(build_family(normalize_rotation(random_set(7, 4, 3)).points, true));
    ASSERT_LE(f3.size(), 60u);
    RegulusOptions one;
    const auto ref = regulus_max(f3, one);
    for (unsigned w : {2u, 4u, 0u}) {
        RegulusOptions o;
        o.workers = w;
        const auto got = regulus_max(f3, o);
        EXPECT_EQ(got.count, ref.count);
        EXPECT_EQ(got.skew_triples, ref.skew_triples);
        EXPECT_EQ(got.surface.has_value(), ref.surface.has_value());
        if (got.surface && ref.surface)
            EXPECT_EQ(got.surface->coeffs, ref.surface->coeffs);
    }
}

TEST(GktReport, GridThreeWithinBounds)
{
    const auto f = build_family(normalize_rotation(grid(3)).points, false);
    GktOptions opts;
    opts.include_regulus = false;
    const auto r = gkt_condition_report(f, opts);
    EXPECT_EQ(r.n_points, 9u);
    EXPECT_LE(r.max_concurrency_3d, 9u);
    EXPECT_LE(*r.max_concurrency_4d, 9u);
    EXPECT_LE(r.coplanar.count, 18u);
    EXPECT_GE(r.intersections_3d, *r.intersections_4d);
    EXPECT_TRUE(r.projection_witnesses_valid);
    EXPECT_EQ(r.intersections_3d - *r.intersections_4d, r.projection_witnesses.size());
    EXPECT_TRUE(r.passed());
}

TEST(GktReport, CollinearSetGivesAnEmptyReport)
{
    const auto f = build_family(normalize_rotation(generate({GeneratorKind::Collinear, 5, 0, std::nullopt, {}})).points);
    const auto r = gkt_condition_report(f);
    EXPECT_EQ(r.line_count, 0u);
    EXPECT_EQ(*r.intersections_4d, 0u);
    EXPECT_EQ(r.intersections_3d, 0u);
    EXPECT_EQ(r.max_concurrency_3d, 0u);
    EXPECT_EQ(r.coplanar.count, 0u);
    ASSERT_TRUE(r.regulus);
    EXPECT_EQ(r.regulus->count, 0u);
    EXPECT_TRUE(r.passed());
}

TEST(GktReport, ConcurrencyViolationIsFlagged)
{
    // N + 1 = 4 lines through one point, reported against N = 3
    const auto f = synthetic({{v3(1, 1, 1), v3(1, 0, 0)},
                              {v3(1, 1, 1), v3(0, 1, 0)},
                              {v3(1, 1, 1), v3(0, 0, 1)},
                              {v3(1, 1, 1), v3(1, 2, 3)}});
    const auto r = gkt_condition_report(f, 3);
    EXPECT_EQ(r.max_concurrency_3d, 4u);
    EXPECT_EQ(r.concurrency_ratio(), make_scalar(4, 3));
    EXPECT_TRUE(r.concurrency_violation());
    EXPECT_FALSE(r.passed());
}

TEST(GktReport, CoplanarViolationIsFlagged)
{
    std::vector<AffineLine<3>> lines;
    for (long k = 0; k < 7; ++k)
        lines.push_back({v3(0, k, 0), v3(1, 0, 0)});
    const auto r = gkt_condition_report(synthetic(lines), 3);
    EXPECT_EQ(r.coplanar.count, 7u);
    EXPECT_TRUE(r.coplanar_violation());
    EXPECT_FALSE(r.passed());
}

TEST(GktReport, StructuralBoundsOnNormalizedFamilies)
{
    for (const auto& [name, p] : small_sets(12, 10)) {
        const auto f = build_family(normalize_rotation(p).points, false);
        GktOptions opts;
        opts.include_regulus = false;
        const auto r = gkt_condition_report(f, opts);
        EXPECT_LE(r.max_concurrency_3d, p.size()) << name;
        EXPECT_LE(*r.max_concurrency_4d, p.size()) << name;
        EXPECT_LE(r.coplanar.count, 2 * p.size()) << name;
        EXPECT_GE(r.intersections_3d, *r.intersections_4d) << name;
        EXPECT_TRUE(r.projection_witnesses_valid) << name;
        EXPECT_TRUE(r.passed()) << name;
    }
}

TEST(Dedupe, MergesProportionalPairs)
{
    std::size_t removed = 0;
    const auto f = build_family(grid(4), false);
    const auto d = dedupe_family(f, &removed);
    EXPECT_GT(removed, 0u);
    EXPECT_EQ(d.size() + removed, f.size());
    std::map<std::vector<std::string>, int> seen;
    for (const auto& l : d.lines) {
        const auto c = l.line.canonical();
        std::vector<std::string> key;
        for (int k = 0; k < 4; ++k) {
            key.push_back(to_string(c.base[k]));
            key.push_back(to_string(c.dir[k]));
        }
        EXPECT_EQ(++seen[key], 1);
    }
}
