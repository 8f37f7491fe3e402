#include "wedgelab/wedgelab.h"

#include "wedgelab/error.hpp"
#include "wedgelab/io.hpp"
#include "wedgelab/report.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <string>

using namespace wedgelab;

struct wl_point_set {
    PointSet value;
};

struct wl_real_set {
    RealSet value;
};

struct wl_line_family {
    int dim = 4;
    LineFamily family4;
    Line3Family family3;
};

namespace {

thread_local std::string g_last_error;

template <class Fn>
wl_status guarded(Fn&& fn)
{
    try {
        fn();
        return WL_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return static_cast<wl_status>(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
    } catch (const std::exception& e) {
        g_last_error = e.what();
    } catch (...) {
        g_last_error = "unknown failure";
    }
    return WL_ERR_INTERNAL;
}

template <class... Ptrs>
void require(const Ptrs*... ptrs)
{
    if (((ptrs == nullptr) || ...))
        throw Error(ErrorCode::InvalidArgument, "null argument");
}

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ReportOptions report_options(const wl_options* o)
{
    ReportOptions r;
    r.oracle_cap = o->oracle_cap;
    r.max_lines = o->max_lines;
    r.triple_budget = o->triple_budget;
    r.rotation_attempts = o->rotation_attempts;
    r.oriented = o->oriented != 0;
    r.workers = o->workers;
    return r;
}

GktOptions gkt_options(const wl_options* o)
{
    GktOptions g;
    g.incidence = {o->max_lines, o->workers};
    g.regulus.triple_budget = o->triple_budget;
    g.regulus.workers = o->workers;
    return g;
}

wl_options defaults()
{
    wl_options o;
    wl_options_default(&o);
    return o;
}

} // namespace

extern "C" {

const char* wl_last_error(void)
{
    return g_last_error.c_str();
}

const char* wl_status_name(wl_status status)
{
    switch (status) {
    case WL_OK:
        return "ok";
    case WL_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case WL_ERR_IO:
        return "i/o error";
    case WL_ERR_PARSE:
        return "parse error";
    case WL_ERR_DUPLICATE_POINT:
        return "duplicate point";
    case WL_ERR_ORIGIN_POINT:
        return "origin in point set";
    case WL_ERR_CAP_EXCEEDED:
        return "cap exceeded";
    case WL_ERR_COLLINEAR_PAIR:
        return "collinear pair";
    case WL_ERR_PROJECTION:
        return "projection error";
    case WL_ERR_COINCIDENT_LINES:
        return "coincident lines";
    case WL_ERR_ROTATION_EXHAUSTED:
        return "rotation exhausted";
    case WL_ERR_GENERATOR_EXHAUSTED:
        return "generator exhausted";
    case WL_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

void wl_string_free(char* s)
{
    std::free(s);
}

void wl_options_default(wl_options* opts)
{
    if (!opts)
        return;
    opts->oracle_cap = kDefaultOracleCap;
    opts->sumprod_cap = kDefaultSumProductCap;
    opts->max_lines = kDefaultMaxLines;
    opts->triple_budget = kDefaultTripleBudget;
    opts->rotation_attempts = kDefaultRotationAttempts;
    opts->oriented = 0;
    opts->workers = 1;
}

wl_status wl_point_set_read(const char* path, wl_point_set** out)
{
    return guarded([&] {
        require(path, out);
        *out = new wl_point_set{read_point_set(path)};
    });
}

wl_status wl_point_set_parse(const char* text, wl_point_set** out)
{
    return guarded([&] {
        require(text, out);
        *out = new wl_point_set{parse_point_set(text)};
    });
}

wl_status wl_point_set_write(const wl_point_set* p, const char* path)
{
    return guarded([&] {
        require(p, path);
        write_point_set(p->value, path);
    });
}

wl_status wl_point_set_format(const wl_point_set* p, char** out)
{
    return guarded([&] {
        require(p, out);
        *out = dup_string(format_point_set(p->value));
    });
}

wl_status wl_point_set_perp(const wl_point_set* p, wl_point_set** out)
{
    return guarded([&] {
        require(p, out);
        *out = new wl_point_set{perp(p->value)};
    });
}

size_t wl_point_set_size(const wl_point_set* p)
{
    return p ? p->value.size() : 0;
}

void wl_point_set_free(wl_point_set* p)
{
    delete p;
}

wl_status wl_generate(const wl_generator_spec* spec, wl_point_set** out)
{
    return guarded([&] {
        require(spec, out);
        require(spec->kind);
        const auto kind = parse_generator_kind(spec->kind);
        if (!kind)
            throw Error(ErrorCode::InvalidArgument, std::string("unknown generator '") + spec->kind + "'");
        GeneratorSpec g;
        g.kind = *kind;
        g.n = spec->n;
        g.denominator = spec->denominator;
        if (spec->has_seed)
            g.seed = spec->seed;
        if (spec->path)
            g.path = spec->path;
        if (g.kind == GeneratorKind::File && g.path.empty())
            throw Error(ErrorCode::InvalidArgument, "file generator needs a path");
        *out = new wl_point_set{generate(g)};
    });
}

wl_status wl_normalize_rotation(const wl_point_set* p, size_t max_attempts, wl_point_set** out,
                                wl_rotation* rotation)
{
    return guarded([&] {
        require(p, out);
        NormalizedSet n = normalize_rotation(p->value, max_attempts);
        if (rotation) {
            // both come from one Pythagorean triple, so they share a denominator
            rotation->cos_num = n.rotation.cos.get_num().get_si();
            rotation->sin_num = n.rotation.sin.get_num().get_si();
            rotation->denom = n.rotation.cos.get_den().get_si();
            rotation->attempt = n.rotation.attempt;
        }
        *out = new wl_point_set{std::move(n.points)};
    });
}

wl_status wl_max_collinear(const wl_point_set* p, uint64_t* out)
{
    return guarded([&] {
        require(p, out);
        *out = max_collinear(p->value);
    });
}

wl_status wl_distinct_areas(const wl_point_set* p, unsigned workers, uint64_t* out)
{
    return guarded([&] {
        require(p, out);
        *out = distinct_areas(p->value, workers);
    });
}

wl_status wl_distinct_areas_bipartite(const wl_point_set* p, const wl_point_set* q, unsigned workers,
                                      uint64_t* out)
{
    return guarded([&] {
        require(p, q, out);
        *out = distinct_areas_bipartite(p->value, q->value, workers);
    });
}

wl_status wl_distinct_dot_products(const wl_point_set* p, unsigned workers, uint64_t* out)
{
    return guarded([&] {
        require(p, out);
        *out = distinct_dot_products(p->value, workers);
    });
}

wl_status wl_energy(const wl_point_set* p, unsigned workers, wl_energy_report* out)
{
    return guarded([&] {
        require(p, out);
        const EnergyReport r = energy(p->value, workers);
        *out = {r.energy, r.distinct_values, r.total_pairs};
    });
}

wl_status wl_wedge_histogram_json(const wl_point_set* p, unsigned workers, char** json)
{
    return guarded([&] {
        require(p, json);
        const WedgeHistogram h = wedge_histogram(p->value, workers);
        nlohmann::ordered_json j;
        j["total"] = h.total;
        j["entries"] = nlohmann::ordered_json::array();
        for (const auto& [s, n] : h.entries)
            j["entries"].push_back({to_string(s), n});
        *json = dup_string(j.dump(2) + "\n");
    });
}

wl_status wl_quadruple_count(const wl_point_set* p, int restricted, size_t cap, uint64_t* out)
{
    return guarded([&] {
        require(p, out);
        *out = quadruple_count_naive(p->value, restricted != 0, cap);
    });
}

wl_status wl_line_family_build(const wl_point_set* p, int oriented, wl_line_family** out)
{
    return guarded([&] {
        require(p, out);
        auto* f = new wl_line_family;
        f->family4 = build_family(p->value, oriented != 0);
        *out = f;
    });
}

wl_status wl_line_family_project(const wl_line_family* f, wl_line_family** out)
{
    return guarded([&] {
        require(f, out);
        if (f->dim != 4)
            throw Error(ErrorCode::InvalidArgument, "family is already three-dimensional");
        auto projected = project(f->family4);
        auto* g = new wl_line_family;
        g->dim = 3;
        g->family3 = std::move(projected);
        *out = g;
    });
}

wl_status wl_line_family_read(const char* path, wl_line_family** out)
{
    return guarded([&] {
        require(path, out);
        LineFile file = read_line_family(path);
        *out = new wl_line_family{file.dim, std::move(file.family4), std::move(file.family3)};
    });
}

wl_status wl_line_family_format(const wl_line_family* f, char** out)
{
    return guarded([&] {
        require(f, out);
        *out = dup_string(f->dim == 4 ? format_line_family(f->family4) : format_line_family(f->family3));
    });
}

wl_status wl_line_family_write(const wl_line_family* f, const char* path)
{
    return guarded([&] {
        require(f, path);
        write_text_atomic(path, f->dim == 4 ? format_line_family(f->family4) : format_line_family(f->family3));
    });
}

size_t wl_line_family_size(const wl_line_family* f)
{
    if (!f)
        return 0;
    return f->dim == 4 ? f->family4.size() : f->family3.size();
}

int wl_line_family_dim(const wl_line_family* f)
{
    return f ? f->dim : 0;
}

void wl_line_family_free(wl_line_family* f)
{
    delete f;
}

wl_status wl_verify_correspondence(const wl_point_set* p, const wl_options* opts, char** json, int* passed)
{
    return guarded([&] {
        require(p, json, passed);
        const wl_options o = opts ? *opts : defaults();
        const auto r = correspondence_check(p->value, o.oracle_cap);
        *json = dup_string(to_json(r));
        *passed = r.passed;
    });
}

wl_status wl_verify_gkt_points(const wl_point_set* p, const wl_options* opts, char** json, int* passed)
{
    return guarded([&] {
        require(p, json, passed);
        const wl_options o = opts ? *opts : defaults();
        const auto n = normalize_rotation(p->value, o.rotation_attempts);
        const auto r = gkt_condition_report(build_family(n.points, o.oriented != 0), gkt_options(&o));
        *json = dup_string(to_json(r));
        *passed = r.passed();
    });
}

wl_status wl_verify_gkt_family(const wl_line_family* f, const wl_options* opts, char** json, int* passed)
{
    return guarded([&] {
        require(f, json, passed);
        const wl_options o = opts ? *opts : defaults();
        const auto r = f->dim == 4 ? gkt_condition_report(f->family4, gkt_options(&o))
                                   : gkt_condition_report(f->family3, f->family3.points.size(), gkt_options(&o));
        *json = dup_string(to_json(r));
        *passed = r.passed();
    });
}

wl_status wl_verify_invariants(const wl_point_set* p, const wl_options* opts, char** json, int* passed)
{
    return guarded([&] {
        require(p, json, passed);
        const wl_options o = opts ? *opts : defaults();
        InvariantOptions io;
        io.oracle_cap = o.oracle_cap;
        io.max_lines = o.max_lines;
        io.rotation_attempts = o.rotation_attempts;
        io.workers = o.workers;
        const auto r = verify_invariants(p->value, io);
        *json = dup_string(to_json(r));
        *passed = r.passed();
    });
}

wl_status wl_real_set_read(const char* path, wl_real_set** out)
{
    return guarded([&] {
        require(path, out);
        *out = new wl_real_set{read_real_set(path)};
    });
}

wl_status wl_real_set_parse(const char* text, wl_real_set** out)
{
    return guarded([&] {
        require(text, out);
        *out = new wl_real_set{parse_real_set(text)};
    });
}

wl_status wl_real_set_range(size_t n, wl_real_set** out)
{
    return guarded([&] {
        require(out);
        *out = new wl_real_set{RealSet::range(n)};
    });
}

size_t wl_real_set_size(const wl_real_set* a)
{
    return a ? a->value.size() : 0;
}

void wl_real_set_free(wl_real_set* a)
{
    delete a;
}

wl_status wl_product_sumset(const wl_real_set* a, int sign, uint64_t* out)
{
    return guarded([&] {
        require(a, out);
        if (sign != 1 && sign != -1)
            throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
        *out = product_sumset(a->value, sign > 0 ? SumSign::Plus : SumSign::Minus);
    });
}

wl_status wl_dio_solution_count(const wl_real_set* a, size_t cap, uint64_t* out)
{
    return guarded([&] {
        require(a, out);
        *out = dio_solution_count(a->value, cap);
    });
}

wl_status wl_sumprod_report(const wl_real_set* a, const wl_options* opts, char** json, int* passed)
{
    return guarded([&] {
        require(a, json, passed);
        const wl_options o = opts ? *opts : defaults();
        if (a->value.size() == 0)
            throw Error(ErrorCode::InvalidArgument, "empty set");
        const auto cert = cs_certificate(a->value, o.sumprod_cap);
        const auto sums = product_sumset(a->value, SumSign::Plus);
        const auto grid = grid_wedge_equivalence(a->value, o.sumprod_cap);
        *json = dup_string(to_json(cert, a->value, sums, grid));
        *passed = cert.passed && grid.equal;
    });
}

wl_status wl_report(const wl_point_set* p, const wl_options* opts, char** json, char** csv_row_out)
{
    return guarded([&] {
        require(p, json);
        const wl_options o = opts ? *opts : defaults();
        const Report r = emit_report(p->value, report_options(&o));
        *json = dup_string(to_json(r));
        if (csv_row_out)
            *csv_row_out = dup_string(csv_row(r));
    });
}

const char* wl_csv_header(void)
{
    static const std::string header = csv_header();
    return header.c_str();
}

wl_status wl_write_text(const char* path, const char* text)
{
    return guarded([&] {
        require(path, text);
        write_text_atomic(path, text);
    });
}

wl_status wl_append_csv_row(const char* path, const char* row)
{
    return guarded([&] {
        require(path, row);
        std::error_code ec;
        const bool fresh = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
        std::string text = fresh ? csv_header() : std::string();
        text += row;
        if (text.empty() || text.back() != '\n')
            text += '\n';
        append_text_atomic(path, text);
    });
}

} // extern "C"
