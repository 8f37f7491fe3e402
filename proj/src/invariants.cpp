#include "wedgelab/error.hpp"
#include "wedgelab/report.hpp"

#include <algorithm>
#include <array>

namespace wedgelab {

namespace {

struct Unimodular {
    long a, b, c, d;
};

constexpr std::array<Unimodular, 4> kUnimodular{{{1, 1, 0, 1}, {2, 1, 1, 1}, {0, -1, 1, 0}, {3, 2, 1, 1}}};

Point2 apply(const Unimodular& m, const Point2& v)
{
    return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
}

// Lines l(a -> b) and l(a' -> b') coincide exactly when (a', b') = k(a, b).
bool proportional_pairs(const Point2& a, const Point2& b, const Point2& a2, const Point2& b2)
{
    if (!collinear_with_origin(a, a2))
        return false;
    const Scalar k = a.x != 0 ? Scalar(a2.x / a.x) : Scalar(a2.y / a.y);
    return b2.x == k * b.x && b2.y == k * b.y;
}

} // namespace

InvariantsReport verify_invariants(const PointSet& p, const InvariantOptions& opts)
{
    InvariantsReport report;
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        report.checks.push_back({std::move(name), ok, false, std::move(detail)});
    };
    auto skip = [&](std::string name, std::string why) {
        report.checks.push_back({std::move(name), true, true, std::move(why)});
    };
    const std::size_t n = p.size();

    bool antisym = true, perp_ok = true, sl2 = true;
    for (const auto& u : p)
        for (const auto& v : p) {
            antisym = antisym && wedge(u, v) == -wedge(v, u);
            perp_ok = perp_ok && dot(u, v) == wedge(u, perp(v));
            for (const auto& m : kUnimodular)
                sl2 = sl2 && wedge(apply(m, u), apply(m, v)) == wedge(u, v);
        }
    for (const auto& u : p)
        antisym = antisym && wedge(u, u) == 0;
    add("wedge_antisymmetry", antisym);
    add("dot_equals_wedge_with_perp", perp_ok);
    add("sl2_invariance", sl2);

    const EnergyReport e = energy(p, opts.workers);
    add("cauchy_schwarz", cauchy_schwarz_holds(e),
        std::to_string(e.distinct_values) + " * " + std::to_string(e.energy) + " vs " + std::to_string(e.total_pairs) + "^2");

    const std::size_t areas = distinct_areas(p, opts.workers);
    const std::size_t dots = distinct_dot_products(p, opts.workers);
    const std::size_t bip = distinct_areas_bipartite(p, perp(p), opts.workers);
    add("dots_versus_bipartite_areas", bip <= dots && dots <= 2 * bip + 1,
        "dots=" + std::to_string(dots) + " bipartite=" + std::to_string(bip));

    if (n <= opts.oracle_cap) {
        const auto unrestricted = quadruple_count_naive(p, false, opts.oracle_cap);
        const auto restricted = quadruple_count_naive(p, true, opts.oracle_cap);
        add("energy_equals_quadruple_oracle", unrestricted == e.energy,
            std::to_string(e.energy) + " vs " + std::to_string(unrestricted));
        add("restricted_at_most_unrestricted", restricted <= unrestricted);
        const auto corr = correspondence_check(p, opts.oracle_cap, 0);
        add("quadruple_line_correspondence", corr.passed,
            std::to_string(corr.quadruples_restricted) + " vs " + std::to_string(corr.intersecting_line_pairs));
    } else {
        const std::string why = "N exceeds oracle cap " + std::to_string(opts.oracle_cap);
        skip("energy_equals_quadruple_oracle", why);
        skip("restricted_at_most_unrestricted", why);
        skip("quadruple_line_correspondence", why);
    }

    std::optional<NormalizedSet> rotated;
    if (n > 0) {
        try {
            rotated = normalize_rotation(p, opts.rotation_attempts);
        } catch (const Error& e2) {
            if (e2.code() != ErrorCode::RotationExhausted)
                throw;
            add("rotation_found", false, e2.what());
        }
    }
    if (rotated) {
        const auto& rec = rotated->rotation;
        bool preserved = true;
        for (const auto& u : p)
            for (const auto& v : p) {
                const Point2 ru = rotate(u, rec.cos, rec.sin), rv = rotate(v, rec.cos, rec.sin);
                preserved = preserved && wedge(ru, rv) == wedge(u, v) && dot(ru, rv) == dot(u, v);
            }
        add("rotation_preserves_wedge_and_dot", preserved);
        add("rotation_is_normalizing", is_rotation_normalized(rotated->points));
        const auto& q = rotated->points;
        const bool counts = distinct_areas(q, opts.workers) == areas && distinct_dot_products(q, opts.workers) == dots &&
                            energy(q, opts.workers).energy == e.energy && max_collinear(q) == max_collinear(p);
        add("rotation_preserves_counts", counts);
    }

    const LineFamily family = build_family(p, false);
    bool identities = true;
    for (const auto& l : family.lines)
        identities = identities && on_quadric_check(l).holds && maps_source_to_target(l);
    add("line_identities", identities, std::to_string(family.size()) + " lines");

    if (family.size() <= opts.max_lines) {
        bool same_source_disjoint = true, coincidence_rule = true;
        for (std::size_t a = 0; a < family.size(); ++a)
            for (std::size_t b = a + 1; b < family.size(); ++b) {
                const auto& la = family.lines[a];
                const auto& lb = family.lines[b];
                const auto rel = solve_pair(la.line, lb.line).relation;
                if (family.index[a].source == family.index[b].source)
                    same_source_disjoint = same_source_disjoint && rel != LineRelation::Intersecting &&
                                           rel != LineRelation::Coincident;
                const bool coincide = la.line.canonical() == lb.line.canonical();
                coincidence_rule = coincidence_rule &&
                                   coincide == proportional_pairs(la.source, la.target, lb.source, lb.target) &&
                                   coincide == (rel == LineRelation::Coincident);
            }
        add("same_source_lines_disjoint", same_source_disjoint);
        add("lines_coincide_only_for_proportional_pairs", coincidence_rule);
    } else {
        const std::string why = std::to_string(family.size()) + " lines exceed cap " + std::to_string(opts.max_lines);
        skip("same_source_lines_disjoint", why);
        skip("lines_coincide_only_for_proportional_pairs", why);
    }

    if (rotated) {
        bool recovers = true;
        std::string detail;
        try {
            const LineFamily rf = build_family(rotated->points, false);
            for (const auto& l : rf.lines) {
                project(l);
                for (int t : {0, 1}) {
                    const Vec4 x = l.line.at(t);
                    if (x[0] != 0)
                        recovers = recovers && recover_x4({x[0], x[1], x[2]}) == x[3];
                }
            }
        } catch (const Error& e2) {
            recovers = false;
            detail = e2.what();
        }
        add("projection_recovers_x4", recovers, detail);
    }
    return report;
}

} // namespace wedgelab
