#include "wedgelab/io.hpp"

#include "wedgelab/error.hpp"
#include "wedgelab/random.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>
#include <unistd.h>
#include <vector>

namespace wedgelab {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

// Calls fn(line_number, body, comment) for each line; body has the comment
// stripped, comment is the text after '#'.
template <class Fn>
void for_each_line(std::string_view text, Fn fn)
{
    std::size_t lineno = 0;
    while (!text.empty()) {
        ++lineno;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        const auto hash = line.find('#');
        std::string_view comment = hash == std::string_view::npos ? std::string_view{} : line.substr(hash + 1);
        fn(lineno, trim(line.substr(0, hash)), trim(comment));
    }
}

Error parse_error(std::size_t lineno, const std::string& what)
{
    return Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": " + what);
}

Scalar parse_at(std::string_view token, std::size_t lineno)
{
    try {
        return parse_scalar(token);
    } catch (const Error& e) {
        throw parse_error(lineno, e.what());
    }
}

std::optional<std::string> comment_value(std::string_view comment, std::string_view key)
{
    if (comment.substr(0, key.size()) != key)
        return std::nullopt;
    return std::string(trim(comment.substr(key.size())));
}

template <std::size_t D>
std::string format_vec(const Vec<D>& v)
{
    std::string out;
    for (std::size_t k = 0; k < D; ++k) {
        if (k)
            out += ' ';
        out += to_string(v[k]);
    }
    return out;
}

std::string format_endpoints(const Point2& s, const Point2& t)
{
    return to_string(s.x) + ' ' + to_string(s.y) + ' ' + to_string(t.x) + ' ' + to_string(t.y);
}

} // namespace

PointSet parse_point_set(std::string_view text)
{
    std::vector<Point2> points;
    Provenance prov;
    for_each_line(text, [&](std::size_t lineno, std::string_view body, std::string_view comment) {
        if (auto g = comment_value(comment, "generator:"))
            prov.generator = *g;
        if (auto s = comment_value(comment, "seed:")) {
            try {
                prov.seed = std::stoull(*s);
            } catch (const std::exception&) {
                throw parse_error(lineno, "bad seed '" + *s + "'");
            }
        }
        if (body.empty())
            return;
        const auto tokens = split_ws(body);
        if (tokens.size() != 2)
            throw parse_error(lineno, "expected two coordinates, got " + std::to_string(tokens.size()));
        points.push_back({parse_at(tokens[0], lineno), parse_at(tokens[1], lineno)});
    });
    return PointSet(std::move(points), std::move(prov));
}

PointSet read_point_set(const std::filesystem::path& path)
{
    return parse_point_set(read_text(path));
}

std::string format_point_set(const PointSet& p)
{
    std::string out = "# wedgelab point set\n";
    if (!p.provenance().generator.empty())
        out += "# generator: " + p.provenance().generator + "\n";
    if (p.provenance().seed)
        out += "# seed: " + std::to_string(*p.provenance().seed) + "\n";
    for (const auto& v : p)
        out += to_string(v.x) + ' ' + to_string(v.y) + '\n';
    return out;
}

void write_point_set(const PointSet& p, const std::filesystem::path& path)
{
    write_text_atomic(path, format_point_set(p));
}

RealSet parse_real_set(std::string_view text)
{
    std::vector<Scalar> values;
    for_each_line(text, [&](std::size_t lineno, std::string_view body, std::string_view) {
        if (body.empty())
            return;
        const auto tokens = split_ws(body);
        if (tokens.size() != 1)
            throw parse_error(lineno, "expected one rational per line");
        values.push_back(parse_at(tokens[0], lineno));
    });
    return RealSet(std::move(values));
}

RealSet read_real_set(const std::filesystem::path& path)
{
    return parse_real_set(read_text(path));
}

std::string format_real_set(const RealSet& a)
{
    std::string out = "# wedgelab real set\n";
    for (const auto& v : a.elements())
        out += to_string(v) + '\n';
    return out;
}

std::string format_line_family(const LineFamily& family)
{
    std::string out = "# wedgelab line family dim=4 oriented=" + std::to_string(family.oriented ? 1 : 0) + "\n";
    for (const auto& l : family.lines)
        out += format_endpoints(l.source, l.target) + " | " + format_vec<4>(l.line.base) + " | " +
               format_vec<4>(l.line.dir) + '\n';
    return out;
}

std::string format_line_family(const Line3Family& family)
{
    std::string out = "# wedgelab line family dim=3\n";
    for (const auto& l : family.lines)
        out += format_endpoints(family.points[l.index.source], family.points[l.index.target]) + " | " +
               format_vec<3>(l.line.base) + " | " + format_vec<3>(l.line.dir) + '\n';
    return out;
}

LineFile parse_line_family(std::string_view text)
{
    struct Record {
        Point2 source, target;
        std::vector<Scalar> base, dir;
    };
    std::vector<Record> records;
    int dim = 0;
    bool oriented = false;
    for_each_line(text, [&](std::size_t lineno, std::string_view body, std::string_view comment) {
        if (comment.find("line family") != std::string_view::npos && comment.find("oriented=1") != std::string_view::npos)
            oriented = true;
        if (body.empty())
            return;
        std::vector<std::string_view> parts;
        std::size_t start = 0;
        for (std::size_t bar; (bar = body.find('|', start)) != std::string_view::npos; start = bar + 1)
            parts.push_back(body.substr(start, bar - start));
        parts.push_back(body.substr(start));
        if (parts.size() != 3)
            throw parse_error(lineno, "expected three '|'-separated groups");
        const auto ends = split_ws(parts[0]);
        const auto base = split_ws(parts[1]);
        const auto dir = split_ws(parts[2]);
        if (ends.size() != 4)
            throw parse_error(lineno, "expected four endpoint coordinates");
        if (base.size() != dir.size() || (base.size() != 3 && base.size() != 4))
            throw parse_error(lineno, "base and direction must both have 3 or 4 entries");
        const int d = static_cast<int>(base.size());
        if (dim != 0 && d != dim)
            throw parse_error(lineno, "mixed 3D and 4D records");
        dim = d;
        Record r{{parse_at(ends[0], lineno), parse_at(ends[1], lineno)},
                 {parse_at(ends[2], lineno), parse_at(ends[3], lineno)},
                 {},
                 {}};
        for (auto t : base)
            r.base.push_back(parse_at(t, lineno));
        for (auto t : dir)
            r.dir.push_back(parse_at(t, lineno));
        if (std::all_of(r.dir.begin(), r.dir.end(), [](const Scalar& s) { return s == 0; }))
            throw parse_error(lineno, "zero direction vector");
        records.push_back(std::move(r));
    });

    std::set<Point2> endpoints;
    for (const auto& r : records) {
        endpoints.insert(r.source);
        endpoints.insert(r.target);
    }
    PointSet points(std::vector<Point2>(endpoints.begin(), endpoints.end()));

    LineFile out;
    out.dim = dim == 0 ? 4 : dim;
    out.family4.points = points;
    out.family4.oriented = oriented;
    out.family3.points = points;
    for (const auto& r : records) {
        const IndexPair idx{points.find(r.source), points.find(r.target)};
        if (dim == 4) {
            AffineLine<4> l{{r.base[0], r.base[1], r.base[2], r.base[3]}, {r.dir[0], r.dir[1], r.dir[2], r.dir[3]}};
            out.family4.lines.push_back({r.source, r.target, std::move(l)});
            out.family4.index.push_back(idx);
        } else {
            AffineLine<3> l{{r.base[0], r.base[1], r.base[2]}, {r.dir[0], r.dir[1], r.dir[2]}};
            out.family3.lines.push_back({l.canonical(), idx});
        }
    }
    return out;
}

LineFile read_line_family(const std::filesystem::path& path)
{
    return parse_line_family(read_text(path));
}

std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad())
        throw Error(ErrorCode::Io, "read failed for " + path.string());
    return ss.str();
}

void write_text_atomic(const std::filesystem::path& path, std::string_view text)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(ErrorCode::Io, "cannot write " + tmp.string());
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        out.flush();
        if (!out)
            throw Error(ErrorCode::Io, "write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(ErrorCode::Io, "cannot replace " + path.string());
    }
}

void append_text_atomic(const std::filesystem::path& path, std::string_view text)
{
    std::string existing;
    if (std::filesystem::exists(path))
        existing = read_text(path);
    existing.append(text);
    write_text_atomic(path, existing);
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name)
{
    if (name == "grid")
        return GeneratorKind::Grid;
    if (name == "circle")
        return GeneratorKind::Circle;
    if (name == "random")
        return GeneratorKind::Random;
    if (name == "collinear")
        return GeneratorKind::Collinear;
    if (name == "file")
        return GeneratorKind::File;
    if (name == "product-grid")
        return GeneratorKind::ProductGrid;
    return std::nullopt;
}

const char* to_string(GeneratorKind k)
{
    switch (k) {
    case GeneratorKind::Grid:
        return "grid";
    case GeneratorKind::Circle:
        return "circle";
    case GeneratorKind::Random:
        return "random";
    case GeneratorKind::Collinear:
        return "collinear";
    case GeneratorKind::File:
        return "file";
    case GeneratorKind::ProductGrid:
        return "product-grid";
    }
    return "unknown";
}

std::string describe(const GeneratorSpec& spec)
{
    std::string out = to_string(spec.kind);
    switch (spec.kind) {
    case GeneratorKind::Random:
        return out + "(n=" + std::to_string(spec.n) + ",denom=" + std::to_string(spec.denominator) + ")";
    case GeneratorKind::File:
        return out + "(" + spec.path.filename().string() + ")";
    case GeneratorKind::ProductGrid:
        if (!spec.path.empty())
            return out + "(" + spec.path.filename().string() + ")";
        [[fallthrough]];
    default:
        return out + "(n=" + std::to_string(spec.n) + ")";
    }
}

PointSet generate(const GeneratorSpec& spec)
{
    Provenance prov{describe(spec), std::nullopt};
    std::vector<Point2> pts;
    auto need_n = [&] {
        if (spec.n == 0)
            throw Error(ErrorCode::InvalidArgument, std::string(to_string(spec.kind)) + " needs n >= 1");
    };
    switch (spec.kind) {
    case GeneratorKind::Grid:
        need_n();
        for (std::size_t i = 1; i <= spec.n; ++i)
            for (std::size_t j = 1; j <= spec.n; ++j)
                pts.push_back({Scalar(static_cast<unsigned long>(i)), Scalar(static_cast<unsigned long>(j))});
        break;
    case GeneratorKind::Circle:
        need_n();
        for (std::size_t k = 1; k <= spec.n; ++k) {
            const Scalar t(static_cast<unsigned long>(k));
            const Scalar den = 1 + t * t;
            pts.push_back({(1 - t * t) / den, 2 * t / den});
        }
        break;
    case GeneratorKind::Collinear:
        need_n();
        for (std::size_t i = 1; i <= spec.n; ++i)
            pts.push_back({Scalar(static_cast<unsigned long>(i)), Scalar(static_cast<unsigned long>(i))});
        break;
    case GeneratorKind::Random: {
        need_n();
        if (!spec.seed)
            throw Error(ErrorCode::InvalidArgument, "random generator needs a seed");
        if (spec.denominator == 0)
            throw Error(ErrorCode::InvalidArgument, "random generator needs a denominator bound >= 1");
        prov.seed = spec.seed;
        SplitMix64 rng(*spec.seed);
        const std::uint64_t d = spec.denominator;
        auto coord = [&] {
            const auto p = static_cast<long>(rng.below(2 * d + 1)) - static_cast<long>(d);
            const auto q = static_cast<unsigned long>(rng.below(d) + 1);
            return make_scalar(Integer(p), Integer(q));
        };
        std::set<Point2> seen;
        const std::size_t max_draws = 64 * spec.n + 1024;
        for (std::size_t draws = 0; seen.size() < spec.n; ++draws) {
            if (draws == max_draws)
                throw Error(ErrorCode::GeneratorExhausted,
                            "could not draw " + std::to_string(spec.n) + " distinct points with denominator bound " +
                                std::to_string(d));
            Scalar x = coord();
            Scalar y = coord();
            if (x == 0 && y == 0)
                continue;
            Point2 p{std::move(x), std::move(y)};
            if (seen.insert(p).second)
                pts.push_back(std::move(p));
        }
        break;
    }
    case GeneratorKind::ProductGrid: {
        const RealSet a = spec.path.empty() ? (need_n(), RealSet::range(spec.n)) : read_real_set(spec.path);
        for (const auto& x : a.elements())
            for (const auto& y : a.elements())
                pts.push_back({x, y});
        break;
    }
    case GeneratorKind::File: {
        PointSet p = read_point_set(spec.path);
        if (p.provenance().generator.empty())
            p.set_provenance(prov);
        return p;
    }
    }
    return PointSet(std::move(pts), std::move(prov));
}

} // namespace wedgelab
