#pragma once

#include "wedgelab/counting.hpp"
#include "wedgelab/lines.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace wedgelab {

enum class LineRelation { Intersecting, Parallel, Skew, Coincident };

template <std::size_t D>
struct PairSolution {
    LineRelation relation = LineRelation::Skew;
    Scalar t1, t2; // set when intersecting
    Vec<D> point;
};

// Exact solve of a.base + t1*a.dir == b.base + t2*b.dir.
template <std::size_t D>
PairSolution<D> solve_pair(const AffineLine<D>& a, const AffineLine<D>& b);

template <std::size_t D>
struct IncidenceRecord {
    std::size_t first = 0; // family positions, first < second
    std::size_t second = 0;
    Vec<D> point;
    Scalar t1, t2;
};

inline constexpr std::size_t kDefaultMaxLines = 400;

struct IncidenceOptions {
    std::size_t max_lines = kDefaultMaxLines;
    unsigned workers = 1;
};

// One record per unordered intersecting pair. Parallel and skew pairs give
// nothing; coincident lines throw CoincidentLines, and families larger than
// max_lines throw CapExceeded.
template <std::size_t D>
std::vector<IncidenceRecord<D>> pairwise_intersections(std::span<const AffineLine<D>> lines,
                                                       const IncidenceOptions& opts = {});
std::vector<IncidenceRecord<4>> pairwise_intersections(const LineFamily& family,
                                                       const IncidenceOptions& opts = {});
std::vector<IncidenceRecord<3>> pairwise_intersections(const Line3Family& family,
                                                       const IncidenceOptions& opts = {});

// Most lines through a single point. 1 for a non-empty family without
// intersections, 0 for an empty one.
template <std::size_t D>
std::size_t max_concurrency(std::span<const IncidenceRecord<D>> records, std::size_t line_count);
std::size_t max_concurrency(const LineFamily& family, const IncidenceOptions& opts = {});
std::size_t max_concurrency(const Line3Family& family, const IncidenceOptions& opts = {});

// alpha*x1 + beta*x2 + gamma*x3 == delta with integer coefficients divided by
// their gcd and the first nonzero one positive.
struct PlaneRecord {
    std::array<Integer, 4> coeffs;
    std::vector<std::size_t> members;
    bool verified = false; // every member satisfies the equation identically
};

struct CoplanarResult {
    std::size_t count = 0;
    std::optional<PlaneRecord> plane; // empty when no two lines are coplanar
};

std::array<Integer, 4> canonical_plane(const Vec3& normal, const Scalar& delta);
bool line_in_plane(const AffineLine<3>& l, const std::array<Integer, 4>& plane);

CoplanarResult max_coplanar(std::span<const AffineLine<3>> lines, const IncidenceOptions& opts = {});
CoplanarResult max_coplanar(const Line3Family& family, const IncidenceOptions& opts = {});

enum class QuadricKind { Degenerate, RuledCandidate, Other };

const char* to_string(QuadricKind k);

// Coefficients of x1^2, x2^2, x3^2, x1x2, x1x3, x2x3, x1, x2, x3, 1; the first
// nonzero one is 1.
struct QuadricSurface {
    std::array<Scalar, 10> coeffs;
    QuadricKind kind = QuadricKind::Other;

    Scalar eval(const Vec3& x) const;
    bool contains(const AffineLine<3>& l) const; // zero at t = -1, 0, 1
};

// Canonical scaling plus classification: planar or rank <= 3 is degenerate
// (plane pairs have rank <= 2), rank 4 with positive determinant of the
// homogeneous matrix is a ruled candidate (one-sheet hyperboloid or hyperbolic
// paraboloid), anything else is Other.
QuadricSurface make_quadric(std::array<Scalar, 10> coeffs);

// The unique quadric through three sample points on each of three lines, or
// nothing when the nine conditions leave more than one degree of freedom.
std::optional<QuadricSurface> quadric_through(const AffineLine<3>& a, const AffineLine<3>& b,
                                              const AffineLine<3>& c);

inline constexpr std::uint64_t kDefaultTripleBudget = 34220; // every triple of 60 lines

struct RegulusOptions {
    std::uint64_t triple_budget = kDefaultTripleBudget;
    std::uint64_t seed = 0x5eed;
    unsigned workers = 1;
};

struct RegulusResult {
    std::size_t count = 0;
    std::optional<QuadricSurface> surface;
    bool lower_bound = false; // triples were subsampled
    std::uint64_t triples_examined = 0;
    std::uint64_t skew_triples = 0;
};

// Max number of family lines on one ruled quadric spanned by a pairwise-skew
// triple. Ties go to the lexicographically least coefficient vector.
RegulusResult regulus_max(std::span<const AffineLine<3>> lines, const RegulusOptions& opts = {});
RegulusResult regulus_max(const Line3Family& family, const RegulusOptions& opts = {});

struct CorrespondenceWitness {
    std::array<std::size_t, 4> quadruple; // indices of v1, v2, v3, v4
    IndexPair first_line;                 // v1 -> v3
    IndexPair second_line;                // v2 -> v4
    Vec4 matrix;                          // the common transformation
};

struct CorrespondenceReport {
    std::uint64_t quadruples_restricted = 0;
    std::uint64_t intersecting_line_pairs = 0;
    bool bijection_holds = false;
    std::vector<CorrespondenceWitness> witnesses; // truncated to witness_limit
    bool passed = false;
};

// Equal-wedge quadruples against ordered pairs of intersecting lines in the
// unfiltered 4D family whose sources are positively oriented.
CorrespondenceReport correspondence_check(const PointSet& p, std::size_t cap = kDefaultOracleCap,
                                          std::size_t witness_limit = 32);

struct GktOptions {
    IncidenceOptions incidence;
    RegulusOptions regulus;
    bool include_regulus = true;
};

struct GktReport {
    std::size_t n_points = 0;
    std::size_t line_count = 0;
    std::size_t duplicate_lines = 0; // coincident 4D lines merged before counting
    std::optional<std::uint64_t> intersections_4d;
    std::uint64_t intersections_3d = 0;
    std::optional<std::size_t> max_concurrency_4d;
    std::size_t max_concurrency_3d = 0;
    CoplanarResult coplanar;
    std::optional<RegulusResult> regulus;
    std::vector<Vec3> projection_witnesses; // 3D meetings with no 4D counterpart
    bool projection_witnesses_valid = true; // all of them have x1 == 0

    Scalar concurrency_ratio() const; // max concurrency / N
    Scalar coplanar_ratio() const;    // max coplanar / 2N
    std::optional<long double> intersection_ratio() const; // 3D count / (N^3 ln N)
    bool concurrency_violation() const;
    bool coplanar_violation() const;
    bool passed() const;
};

// Dedupes coincident lines, projects, and runs every checker. The family must
// come from a rotation-normalized set, or projection throws.
GktReport gkt_condition_report(const LineFamily& family, const GktOptions& opts = {});
GktReport gkt_condition_report(const Line3Family& family, std::size_t n_points,
                               const GktOptions& opts = {});

// Keeps the first line of each coincidence class.
LineFamily dedupe_family(const LineFamily& family, std::size_t* removed = nullptr);

} // namespace wedgelab
