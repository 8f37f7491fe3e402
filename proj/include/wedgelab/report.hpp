#pragma once

#include "wedgelab/counting.hpp"
#include "wedgelab/incidence.hpp"
#include "wedgelab/sumproduct.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wedgelab {

struct ReportOptions {
    std::size_t oracle_cap = kDefaultOracleCap;
    std::size_t max_lines = kDefaultMaxLines;
    std::uint64_t triple_budget = kDefaultTripleBudget;
    std::size_t rotation_attempts = kDefaultRotationAttempts;
    bool oriented = false;
    unsigned workers = 1;
};

// Exact value when the ratio is rational, decimal rendering always.
struct Ratio {
    std::optional<Scalar> exact;
    std::optional<long double> value;
};

struct Report {
    std::size_t n_points = 0;
    std::uint64_t distinct_areas = 0;
    std::uint64_t distinct_dots = 0;
    std::uint64_t energy = 0;
    std::optional<std::uint64_t> quadruples_restricted;
    std::optional<std::uint64_t> line_count;
    std::optional<std::uint64_t> intersections_4d;
    std::optional<std::uint64_t> intersections_3d;
    std::optional<std::uint64_t> max_concurrency;
    std::optional<std::uint64_t> max_coplanar;
    std::optional<std::uint64_t> regulus_max;
    Ratio areas_log;       // distinct_areas * ln N / N
    Ratio dots_log;        // distinct_dots * ln N / N
    Ratio concurrency;     // max_concurrency / N
    Ratio coplanar;        // max_coplanar / 2N
    Ratio energy_growth;   // energy / (N^3 ln N)
    std::optional<RotationRecord> rotation_used;
    std::string generator;
    std::optional<std::uint64_t> seed;
    // field name -> why it is null or only a bound
    std::map<std::string, std::string> flags;
};

// rotate -> count -> build lines -> project -> incidence checks. Sections over
// their caps come back null with an entry in `flags`.
Report emit_report(const PointSet& p, const ReportOptions& opts = {});

std::string to_json(const Report& r);
std::string csv_header();
std::string csv_row(const Report& r);

// Reports for the verify subcommands, as JSON text.
std::string to_json(const CorrespondenceReport& r);
std::string to_json(const GktReport& r);
std::string to_json(const CsCertificate& c, const RealSet& a, std::size_t sum_set,
                    const std::optional<GridWedgeEquivalence>& grid);

struct InvariantCheck {
    std::string name;
    bool passed = true;
    bool skipped = false;
    std::string detail;
};

struct InvariantsReport {
    std::vector<InvariantCheck> checks;
    bool passed() const;
};

struct InvariantOptions {
    std::size_t oracle_cap = kDefaultOracleCap;
    std::size_t max_lines = kDefaultMaxLines;
    std::size_t rotation_attempts = kDefaultRotationAttempts;
    unsigned workers = 1;
};

// Every algebraic property the library relies on, checked exactly on one set.
InvariantsReport verify_invariants(const PointSet& p, const InvariantOptions& opts = {});
std::string to_json(const InvariantsReport& r);

} // namespace wedgelab
