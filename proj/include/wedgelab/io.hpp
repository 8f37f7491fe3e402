#pragma once

#include "wedgelab/geometry.hpp"
#include "wedgelab/lines.hpp"
#include "wedgelab/sumproduct.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace wedgelab {

// Point-set text: one `x y` per line, each a rational `p` or `p/q`; `#` starts
// a comment and blank lines are skipped. The comments `# generator: ...` and
// `# seed: ...` carry provenance.
PointSet parse_point_set(std::string_view text);
PointSet read_point_set(const std::filesystem::path& path);
std::string format_point_set(const PointSet& p);
void write_point_set(const PointSet& p, const std::filesystem::path& path);

// Real-set text: one rational per line, same comment rules.
RealSet parse_real_set(std::string_view text);
RealSet read_real_set(const std::filesystem::path& path);
std::string format_real_set(const RealSet& a);

// Line-family text: `a b c d | x1 x2 x3 x4 | d1 d2 d3 d4` for 4D lines, the
// same with three entries per vector after projection. (a, b) is the source
// point and (c, d) the target.
std::string format_line_family(const LineFamily& family);
std::string format_line_family(const Line3Family& family);

struct LineFile {
    int dim = 4;
    LineFamily family4; // dim == 4
    Line3Family family3; // dim == 3
};

LineFile parse_line_family(std::string_view text);
LineFile read_line_family(const std::filesystem::path& path);

// Write to a sibling temp file, then rename over the target.
void write_text_atomic(const std::filesystem::path& path, std::string_view text);
// Rewrites path with its old contents plus text, atomically.
void append_text_atomic(const std::filesystem::path& path, std::string_view text);
std::string read_text(const std::filesystem::path& path);

enum class GeneratorKind { Grid, Circle, Random, Collinear, File, ProductGrid };

std::optional<GeneratorKind> parse_generator_kind(std::string_view name);
const char* to_string(GeneratorKind k);

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Grid;
    std::size_t n = 0;
    std::uint64_t denominator = 0;     // random: coordinate bound D
    std::optional<std::uint64_t> seed; // random: required
    std::filesystem::path path;        // file, or product-grid base set
};

// Deterministic for a given spec:
//   grid(n)         {1..n}^2
//   circle(k)       ((1-t^2)/(1+t^2), 2t/(1+t^2)) for t = 1..k
//   random(n,D,s)   n points p/q with |p| <= D, 1 <= q <= D from SplitMix64(s)
//   collinear(n)    (i, i) for i = 1..n
//   product-grid    A x A, A read from `path` or {1..n}
//   file            the point set stored at `path`
PointSet generate(const GeneratorSpec& spec);

std::string describe(const GeneratorSpec& spec);

} // namespace wedgelab
