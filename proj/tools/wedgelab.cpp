// wedgelab command-line front end. Talks to the library only through wedgelab.h.
#include "wedgelab/wedgelab.h"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kFalsified = 1;
constexpr int kInputError = 2;

struct Failure {
    std::string message;
};

void check(wl_status s, const std::string& what)
{
    if (s != WL_OK)
        throw Failure{what + ": " + wl_status_name(s) + ": " + wl_last_error()};
}

struct PointSetFree {
    void operator()(wl_point_set* p) const { wl_point_set_free(p); }
};
struct RealSetFree {
    void operator()(wl_real_set* a) const { wl_real_set_free(a); }
};
struct FamilyFree {
    void operator()(wl_line_family* f) const { wl_line_family_free(f); }
};
struct StringFree {
    void operator()(char* s) const { wl_string_free(s); }
};

using PointSet = std::unique_ptr<wl_point_set, PointSetFree>;
using RealSet = std::unique_ptr<wl_real_set, RealSetFree>;
using Family = std::unique_ptr<wl_line_family, FamilyFree>;
using Text = std::unique_ptr<char, StringFree>;

PointSet read_points(const std::string& path)
{
    wl_point_set* p = nullptr;
    check(wl_point_set_read(path.c_str(), &p), path);
    return PointSet(p);
}

// Writes text to path when given, stdout otherwise.
void emit(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::string body = text;
    if (!body.empty() && body.back() != '\n')
        body += '\n';
    check(wl_write_text(path.c_str(), body.c_str()), path);
}

struct Common {
    std::optional<std::size_t> max_n;
    unsigned threads = 1;
    bool oriented = false;

    wl_options options() const
    {
        wl_options o;
        wl_options_default(&o);
        if (max_n)
            o.oracle_cap = *max_n;
        o.workers = threads;
        o.oriented = oriented ? 1 : 0;
        return o;
    }
};

void add_common(CLI::App* cmd, Common& c, bool with_oriented)
{
    cmd->add_option("--max-n", c.max_n, "Largest N for the brute-force oracles");
    cmd->add_option("--threads", c.threads, "Worker threads, 0 = all cores")->capture_default_str();
    if (with_oriented)
        cmd->add_flag("--oriented", c.oriented, "Keep only positively oriented pairs");
}

struct GenArgs {
    std::string kind;
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> seed;
    std::uint64_t denom = 0;
    std::string set;
};

void add_gen_options(CLI::App* cmd, GenArgs& g)
{
    cmd->add_option("--n", g.n, "Size parameter");
    cmd->add_option("--seed", g.seed, "Seed for the random generator");
    cmd->add_option("--denom", g.denom, "Coordinate bound D for the random generator");
    cmd->add_option("--set", g.set, "Input file for the file and product-grid generators");
}

PointSet generate(const GenArgs& g)
{
    wl_generator_spec spec{};
    spec.kind = g.kind.c_str();
    spec.n = g.n.value_or(0);
    spec.denominator = g.denom;
    spec.has_seed = g.seed ? 1 : 0;
    spec.seed = g.seed.value_or(0);
    spec.path = g.set.empty() ? nullptr : g.set.c_str();
    wl_point_set* p = nullptr;
    check(wl_generate(&spec, &p), "gen " + g.kind);
    return PointSet(p);
}

int run_gen(const GenArgs& g, const std::string& out)
{
    PointSet p = generate(g);
    if (out.empty()) {
        char* text = nullptr;
        check(wl_point_set_format(p.get(), &text), "format");
        emit(Text(text).get(), "");
    } else {
        check(wl_point_set_write(p.get(), out.c_str()), out);
    }
    return kOk;
}

int run_count(const std::string& what, const std::string& file, const std::string& with, bool json,
              unsigned threads)
{
    PointSet p = read_points(file);
    std::uint64_t value = 0;
    if (what == "energy") {
        if (!with.empty())
            throw Failure{"--with applies to areas only"};
        wl_energy_report e{};
        check(wl_energy(p.get(), threads, &e), "energy");
        if (json)
            std::cout << "{\"energy\": " << e.energy << ", \"distinct_values\": " << e.distinct_values
                      << ", \"total_pairs\": " << e.total_pairs << "}\n";
        else
            std::cout << e.energy << '\n';
        return kOk;
    }
    if (what == "areas" && !with.empty()) {
        PointSet q = read_points(with);
        check(wl_distinct_areas_bipartite(p.get(), q.get(), threads, &value), "areas");
    } else if (what == "areas") {
        check(wl_distinct_areas(p.get(), threads, &value), "areas");
    } else {
        if (!with.empty())
            throw Failure{"--with applies to areas only"};
        check(wl_distinct_dot_products(p.get(), threads, &value), "dots");
    }
    if (json)
        std::cout << "{\"" << what << "\": " << value << "}\n";
    else
        std::cout << value << '\n';
    return kOk;
}

int run_lines(const std::string& file, const std::string& out, bool oriented, bool project)
{
    PointSet p = read_points(file);
    if (project) {
        wl_point_set* rotated = nullptr;
        wl_rotation rot{};
        wl_options o;
        wl_options_default(&o);
        check(wl_normalize_rotation(p.get(), o.rotation_attempts, &rotated, &rot), "rotate");
        p.reset(rotated);
        std::cerr << "rotated by cos " << rot.cos_num << '/' << rot.denom << ", sin " << rot.sin_num << '/'
                  << rot.denom << '\n';
    }
    wl_line_family* raw = nullptr;
    check(wl_line_family_build(p.get(), oriented ? 1 : 0, &raw), "lines");
    Family f(raw);
    if (project) {
        wl_line_family* projected = nullptr;
        check(wl_line_family_project(f.get(), &projected), "project");
        f.reset(projected);
    }
    if (out.empty()) {
        char* text = nullptr;
        check(wl_line_family_format(f.get(), &text), "format");
        emit(Text(text).get(), "");
    } else {
        check(wl_line_family_write(f.get(), out.c_str()), out);
        std::cerr << wl_line_family_size(f.get()) << " lines -> " << out << '\n';
    }
    return kOk;
}

// Point-set files first; a line-family file is accepted by gkt.
int run_verify(const std::string& what, const std::string& file, const std::string& json_path, const Common& c)
{
    const wl_options o = c.options();
    char* json = nullptr;
    int passed = 0;
    if (what == "gkt") {
        wl_point_set* p = nullptr;
        const wl_status s = wl_point_set_read(file.c_str(), &p);
        if (s == WL_OK) {
            PointSet owned(p);
            check(wl_verify_gkt_points(owned.get(), &o, &json, &passed), "verify gkt");
        } else if (s == WL_ERR_PARSE) {
            wl_line_family* f = nullptr;
            check(wl_line_family_read(file.c_str(), &f), file);
            Family owned(f);
            check(wl_verify_gkt_family(owned.get(), &o, &json, &passed), "verify gkt");
        } else {
            check(s, file);
        }
    } else {
        PointSet p = read_points(file);
        if (what == "correspondence")
            check(wl_verify_correspondence(p.get(), &o, &json, &passed), "verify correspondence");
        else
            check(wl_verify_invariants(p.get(), &o, &json, &passed), "verify invariants");
    }
    emit(Text(json).get(), json_path);
    if (!passed)
        std::cerr << "verify " << what << ": FALSIFIED\n";
    return passed ? kOk : kFalsified;
}

int run_sumprod(const std::string& file, std::optional<std::size_t> n, const std::string& json_path,
                const Common& c)
{
    wl_real_set* raw = nullptr;
    if (!file.empty() && n)
        throw Failure{"give either FILE or --n"};
    if (!file.empty())
        check(wl_real_set_read(file.c_str(), &raw), file);
    else if (n)
        check(wl_real_set_range(*n, &raw), "range");
    else
        throw Failure{"sumprod needs FILE or --n"};
    RealSet a(raw);
    const wl_options o = c.options();
    char* json = nullptr;
    int passed = 0;
    check(wl_sumprod_report(a.get(), &o, &json, &passed), "sumprod");
    emit(Text(json).get(), json_path);
    if (!passed)
        std::cerr << "sumprod: FALSIFIED\n";
    return passed ? kOk : kFalsified;
}

int run_report(const std::string& file, const GenArgs& g, const std::string& json_path,
               const std::string& csv_path, const Common& c)
{
    PointSet p;
    if (!file.empty() && !g.kind.empty())
        throw Failure{"give either FILE or --gen"};
    if (!file.empty())
        p = read_points(file);
    else if (!g.kind.empty())
        p = generate(g);
    else
        throw Failure{"report needs FILE or --gen KIND"};
    const wl_options o = c.options();
    char* json = nullptr;
    char* row = nullptr;
    check(wl_report(p.get(), &o, &json, &row), "report");
    Text json_text(json), row_text(row);
    if (!json_path.empty() || csv_path.empty())
        emit(json_text.get(), json_path);
    if (!csv_path.empty())
        check(wl_append_csv_row(csv_path.c_str(), row_text.get()), csv_path);
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact experiments on distinct areas, dot products and SL2 line families"};
    app.require_subcommand(1);

    GenArgs gen;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a point set");
    gen_cmd->add_option("kind", gen.kind, "grid, circle, random, collinear, product-grid or file")->required();
    add_gen_options(gen_cmd, gen);
    gen_cmd->add_option("-o", gen_out, "Output file (stdout when omitted)");

    std::string count_what, count_file, count_with;
    bool count_json = false;
    unsigned count_threads = 1;
    auto* count_cmd = app.add_subcommand("count", "Distinct areas, dot products or energy");
    count_cmd->add_option("what", count_what)->required()->check(CLI::IsMember({"areas", "dots", "energy"}));
    count_cmd->add_option("file", count_file)->required();
    count_cmd->add_option("--with", count_with, "Second set: count wedge values between the two sets");
    count_cmd->add_flag("--json", count_json, "Print a JSON object");
    count_cmd->add_option("--threads", count_threads, "Worker threads, 0 = all cores");

    std::string lines_file, lines_out;
    bool lines_oriented = false, lines_project = false;
    auto* lines_cmd = app.add_subcommand("lines", "Build the transformation-line family");
    lines_cmd->add_option("file", lines_file)->required();
    lines_cmd->add_option("-o", lines_out, "Output file (stdout when omitted)");
    lines_cmd->add_flag("--oriented", lines_oriented, "Keep only positively oriented pairs");
    lines_cmd->add_flag("--project", lines_project, "Rotate the set, then drop x4");

    std::string verify_what, verify_file, verify_json;
    Common verify_common;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification report");
    verify_cmd->add_option("what", verify_what)
        ->required()
        ->check(CLI::IsMember({"correspondence", "gkt", "invariants"}));
    verify_cmd->add_option("file", verify_file)->required();
    verify_cmd->add_option("--json", verify_json, "Write the report here instead of stdout");
    add_common(verify_cmd, verify_common, true);

    std::string sumprod_file, sumprod_json;
    std::optional<std::size_t> sumprod_n;
    Common sumprod_common;
    auto* sumprod_cmd = app.add_subcommand("sumprod", "Sum-product certificate for a real set");
    sumprod_cmd->add_option("file", sumprod_file);
    sumprod_cmd->add_option("--n", sumprod_n, "Use A = {1..n}");
    sumprod_cmd->add_option("--json", sumprod_json, "Write the report here instead of stdout");
    add_common(sumprod_cmd, sumprod_common, false);

    std::string report_file, report_json, report_csv;
    GenArgs report_gen;
    Common report_common;
    auto* report_cmd = app.add_subcommand("report", "Full pipeline report");
    report_cmd->add_option("file", report_file);
    report_cmd->add_option("--gen", report_gen.kind, "Generate the set instead of reading FILE");
    add_gen_options(report_cmd, report_gen);
    report_cmd->add_option("--json", report_json, "Write the JSON report here");
    report_cmd->add_option("--csv", report_csv, "Append a CSV row here");
    add_common(report_cmd, report_common, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*gen_cmd)
            return run_gen(gen, gen_out);
        if (*count_cmd)
            return run_count(count_what, count_file, count_with, count_json, count_threads);
        if (*lines_cmd)
            return run_lines(lines_file, lines_out, lines_oriented, lines_project);
        if (*verify_cmd)
            return run_verify(verify_what, verify_file, verify_json, verify_common);
        if (*sumprod_cmd)
            return run_sumprod(sumprod_file, sumprod_n, sumprod_json, sumprod_common);
        if (*report_cmd)
            return run_report(report_file, report_gen, report_json, report_csv, report_common);
    } catch (const Failure& f) {
        std::cerr << "wedgelab: " << f.message << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "wedgelab: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
