#include "wedgelab/report.hpp"

#include "wedgelab/error.hpp"

#include <json.hpp>

#include <cmath>

namespace wedgelab {

using Json = nlohmann::ordered_json;

namespace {

Json nullable(const std::optional<std::uint64_t>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

Json ratio_json(const Ratio& r)
{
    return Json{{"exact", r.exact ? Json(to_string(*r.exact)) : Json(nullptr)},
                {"decimal", r.value ? Json(to_decimal(*r.value)) : Json(nullptr)}};
}

Ratio exact_ratio(std::uint64_t num, std::uint64_t den)
{
    if (den == 0)
        return {};
    Scalar s = make_scalar(Integer(static_cast<unsigned long>(num)), Integer(static_cast<unsigned long>(den)));
    const long double v = s.get_d();
    return {std::move(s), v};
}

Ratio log_ratio(long double numerator, std::size_t n, int power)
{
    if (n < 2)
        return {};
    const long double nn = static_cast<long double>(n);
    return {std::nullopt, numerator * (power == 1 ? std::log(nn) / nn : 1 / (std::pow(nn, power) * std::log(nn)))};
}

Json rotation_json(const std::optional<RotationRecord>& r)
{
    if (!r)
        return nullptr;
    return Json{{"cos", to_string(r->cos)}, {"sin", to_string(r->sin)}, {"attempt", r->attempt}};
}

template <std::size_t D>
Json vec_json(const Vec<D>& v)
{
    Json out = Json::array();
    for (const auto& s : v)
        out.push_back(to_string(s));
    return out;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_opt(const std::optional<std::uint64_t>& v)
{
    return v ? std::to_string(*v) : std::string();
}

std::string csv_ratio(const Ratio& r)
{
    return r.value ? to_decimal(*r.value) : std::string();
}

} // namespace

Report emit_report(const PointSet& p, const ReportOptions& opts)
{
    Report r;
    const std::size_t n = p.size();
    r.n_points = n;
    r.generator = p.provenance().generator;
    r.seed = p.provenance().seed;

    r.distinct_areas = distinct_areas(p, opts.workers);
    r.distinct_dots = distinct_dot_products(p, opts.workers);
    r.energy = energy(p, opts.workers).energy;
    if (n <= opts.oracle_cap)
        r.quadruples_restricted = quadruple_count_naive(p, true, opts.oracle_cap);
    else
        r.flags["quadruples_restricted"] = "N=" + std::to_string(n) + " exceeds oracle cap " + std::to_string(opts.oracle_cap);

    r.areas_log = log_ratio(static_cast<long double>(r.distinct_areas), n, 1);
    r.dots_log = log_ratio(static_cast<long double>(r.distinct_dots), n, 1);
    r.energy_growth = log_ratio(static_cast<long double>(r.energy), n, 3);

    auto skip_incidence = [&](const std::string& why) {
        for (const char* f : {"intersections_4d", "intersections_3d", "max_concurrency", "max_coplanar", "regulus_max"})
            r.flags[f] = why;
    };

    if (n == 0) {
        r.line_count = 0;
        skip_incidence("empty point set");
        return r;
    }

    std::optional<NormalizedSet> normalized;
    try {
        normalized = normalize_rotation(p, opts.rotation_attempts);
        r.rotation_used = normalized->rotation;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::RotationExhausted)
            throw;
        r.flags["rotation_used"] = e.what();
        r.flags["line_count"] = "no admissible rotation";
        skip_incidence("no admissible rotation");
        return r;
    }

    const LineFamily family = build_family(normalized->points, opts.oriented);
    r.line_count = family.size();
    if (family.size() > opts.max_lines) {
        skip_incidence(std::to_string(family.size()) + " lines exceed incidence cap " + std::to_string(opts.max_lines));
        return r;
    }

    GktOptions g;
    g.incidence = {opts.max_lines, opts.workers};
    g.regulus.triple_budget = opts.triple_budget;
    g.regulus.workers = opts.workers;
    const GktReport gkt = gkt_condition_report(family, g);
    r.intersections_4d = gkt.intersections_4d;
    r.intersections_3d = gkt.intersections_3d;
    r.max_concurrency = gkt.max_concurrency_3d;
    r.max_coplanar = gkt.coplanar.count;
    r.regulus_max = gkt.regulus->count;
    if (gkt.regulus->lower_bound)
        r.flags["regulus_max"] = "lower bound: " + std::to_string(gkt.regulus->triples_examined) + " sampled triples";
    if (gkt.duplicate_lines)
        r.flags["line_count"] = std::to_string(gkt.duplicate_lines) + " coincident lines merged before incidence counts";
    r.concurrency = exact_ratio(*r.max_concurrency, n);
    r.coplanar = exact_ratio(*r.max_coplanar, 2 * n);
    return r;
}

std::string to_json(const Report& r)
{
    Json j;
    j["n_points"] = r.n_points;
    j["distinct_areas"] = r.distinct_areas;
    j["distinct_dots"] = r.distinct_dots;
    j["energy"] = r.energy;
    j["quadruples_restricted"] = nullable(r.quadruples_restricted);
    j["line_count"] = nullable(r.line_count);
    j["intersections_4d"] = nullable(r.intersections_4d);
    j["intersections_3d"] = nullable(r.intersections_3d);
    j["max_concurrency"] = nullable(r.max_concurrency);
    j["max_coplanar"] = nullable(r.max_coplanar);
    j["regulus_max"] = nullable(r.regulus_max);
    j["ratios"] = Json{{"areas_lnN_over_N", ratio_json(r.areas_log)},
                       {"dots_lnN_over_N", ratio_json(r.dots_log)},
                       {"concurrency_over_N", ratio_json(r.concurrency)},
                       {"coplanar_over_2N", ratio_json(r.coplanar)},
                       {"energy_over_N3lnN", ratio_json(r.energy_growth)}};
    j["rotation_used"] = rotation_json(r.rotation_used);
    j["generator"] = r.generator.empty() ? Json(nullptr) : Json(r.generator);
    j["seed"] = nullable(r.seed);
    Json flags = Json::object();
    for (const auto& [k, v] : r.flags)
        flags[k] = v;
    j["flags"] = flags;
    return j.dump(2) + "\n";
}

std::string csv_header()
{
    return "generator,seed,n_points,distinct_areas,distinct_dots,energy,quadruples_restricted,line_count,"
           "intersections_4d,intersections_3d,max_concurrency,max_coplanar,regulus_max,areas_lnN_over_N,"
           "dots_lnN_over_N,concurrency_over_N,coplanar_over_2N,energy_over_N3lnN,rotation\n";
}

std::string csv_row(const Report& r)
{
    std::string row;
    bool first = true;
    auto add = [&](const std::string& s) {
        if (!first)
            row += ',';
        first = false;
        row += s;
    };
    add(csv_field(r.generator));
    add(csv_opt(r.seed));
    add(std::to_string(r.n_points));
    add(std::to_string(r.distinct_areas));
    add(std::to_string(r.distinct_dots));
    add(std::to_string(r.energy));
    add(csv_opt(r.quadruples_restricted));
    add(csv_opt(r.line_count));
    add(csv_opt(r.intersections_4d));
    add(csv_opt(r.intersections_3d));
    add(csv_opt(r.max_concurrency));
    add(csv_opt(r.max_coplanar));
    add(csv_opt(r.regulus_max));
    add(csv_ratio(r.areas_log));
    add(csv_ratio(r.dots_log));
    add(csv_ratio(r.concurrency));
    add(csv_ratio(r.coplanar));
    add(csv_ratio(r.energy_growth));
    add(r.rotation_used ? to_string(r.rotation_used->cos) + " " + to_string(r.rotation_used->sin) : std::string());
    return row + "\n";
}

std::string to_json(const CorrespondenceReport& r)
{
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back(Json{{"quadruple", w.quadruple},
                                 {"first_line", {w.first_line.source, w.first_line.target}},
                                 {"second_line", {w.second_line.source, w.second_line.target}},
                                 {"matrix", vec_json<4>(w.matrix)}});
    Json j{{"check", "correspondence"},
           {"quadruples_restricted", r.quadruples_restricted},
           {"intersecting_line_pairs", r.intersecting_line_pairs},
           {"bijection_holds", r.bijection_holds},
           {"witnesses", witnesses},
           {"passed", r.passed}};
    return j.dump(2) + "\n";
}

std::string to_json(const GktReport& r)
{
    Json plane = nullptr;
    if (r.coplanar.plane) {
        Json coeffs = Json::array();
        for (const auto& c : r.coplanar.plane->coeffs)
            coeffs.push_back(c.get_str());
        plane = Json{{"coefficients", coeffs}, {"members", r.coplanar.plane->members}, {"verified", r.coplanar.plane->verified}};
    }
    Json regulus = nullptr;
    if (r.regulus) {
        Json surface = nullptr;
        if (r.regulus->surface) {
            Json coeffs = Json::array();
            for (const auto& c : r.regulus->surface->coeffs)
                coeffs.push_back(to_string(c));
            surface = Json{{"coefficients", coeffs}, {"kind", to_string(r.regulus->surface->kind)}};
        }
        regulus = Json{{"count", r.regulus->count},
                       {"surface", surface},
                       {"lower_bound", r.regulus->lower_bound},
                       {"triples_examined", r.regulus->triples_examined},
                       {"skew_triples", r.regulus->skew_triples}};
    }
    Json witnesses = Json::array();
    for (const auto& w : r.projection_witnesses)
        witnesses.push_back(vec_json<3>(w));
    const auto ir = r.intersection_ratio();
    Json j{{"check", "gkt"},
           {"n_points", r.n_points},
           {"line_count", r.line_count},
           {"duplicate_lines", r.duplicate_lines},
           {"intersections_4d", r.intersections_4d ? Json(*r.intersections_4d) : Json(nullptr)},
           {"intersections_3d", r.intersections_3d},
           {"max_concurrency_4d", r.max_concurrency_4d ? Json(*r.max_concurrency_4d) : Json(nullptr)},
           {"max_concurrency_3d", r.max_concurrency_3d},
           {"max_coplanar", r.coplanar.count},
           {"plane", plane},
           {"regulus", regulus},
           {"projection_witnesses", witnesses},
           {"projection_witnesses_on_x1_zero", r.projection_witnesses_valid},
           {"ratios",
            {{"concurrency_over_N", ratio_json({r.concurrency_ratio(), r.concurrency_ratio().get_d()})},
             {"coplanar_over_2N", ratio_json({r.coplanar_ratio(), r.coplanar_ratio().get_d()})},
             {"intersections_over_N3lnN", ratio_json({std::nullopt, ir})}}},
           {"concurrency_violation", r.concurrency_violation()},
           {"coplanar_violation", r.coplanar_violation()},
           {"passed", r.passed()}};
    return j.dump(2) + "\n";
}

std::string to_json(const CsCertificate& c, const RealSet& a, std::size_t sum_set,
                    const std::optional<GridWedgeEquivalence>& grid)
{
    Json g = nullptr;
    if (grid)
        g = Json{{"wedge_values", grid->wedge_values}, {"difference_values", grid->difference_values}, {"equal", grid->equal}};
    Json j{{"check", "sumprod"},
           {"size", a.size()},
           {"difference_set", c.difference_set},
           {"sum_set", sum_set},
           {"dio_solutions", c.dio_solutions},
           {"cs_lhs", c.lhs.get_str()},
           {"cs_rhs", c.rhs.get_str()},
           {"cs_ratio", to_decimal(c.ratio)},
           {"dio_over_A6lnA", a.size() >= 2 ? Json(to_decimal(c.dio_growth)) : Json(nullptr)},
           {"grid_wedge_equivalence", g},
           {"passed", c.passed && (!grid || grid->equal)}};
    return j.dump(2) + "\n";
}

bool InvariantsReport::passed() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

std::string to_json(const InvariantsReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"detail", c.detail}});
    Json j{{"check", "invariants"}, {"checks", checks}, {"passed", r.passed()}};
    return j.dump(2) + "\n";
}

} // namespace wedgelab
