#pragma once

#include "wedgelab/scalar.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wedgelab {

struct Point2 {
    Scalar x;
    Scalar y;

    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Point2& a, const Point2& b)
    {
        int c = cmp(a.x, b.x);
        return c != 0 ? c < 0 : a.y < b.y;
    }
};

// Where a point set came from; carried through files and reports.
struct Provenance {
    std::string generator;
    std::optional<std::uint64_t> seed;
};

// Duplicate-free set of planar points, sorted lexicographically. The origin is
// never a member: every triangle has its third vertex there.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point2> points, Provenance provenance = {});

    std::span<const Point2> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const Point2& operator[](std::size_t i) const { return points_[i]; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    const Provenance& provenance() const { return provenance_; }
    void set_provenance(Provenance p) { provenance_ = std::move(p); }

    // Index of p, or size() when absent.
    std::size_t find(const Point2& p) const;

    friend bool operator==(const PointSet& a, const PointSet& b) { return a.points_ == b.points_; }

private:
    std::vector<Point2> points_;
    Provenance provenance_;
};

// u.x*v.y - u.y*v.x: twice the signed area of the triangle (0, u, v).
Scalar wedge(const Point2& u, const Point2& v);
Scalar dot(const Point2& u, const Point2& v);
// Quarter turn: dot(u, v) == wedge(u, perp(v)).
Point2 perp(const Point2& v);
PointSet perp(const PointSet& p);

bool collinear_with_origin(const Point2& u, const Point2& v);

// Largest number of points on one straight line (any line, not only through
// the origin).
std::size_t max_collinear(const PointSet& p);

struct RotationRecord {
    Scalar cos;
    Scalar sin;
    std::size_t attempt = 0; // 1-based position in the triple enumeration
};

// Primitive Pythagorean triples as (cos, sin) = (small leg, large leg) / hyp,
// ordered by hypotenuse then by the small leg: (3/5,4/5), (5/13,12/13), ...
std::vector<std::pair<Scalar, Scalar>> pythagorean_rotations(std::size_t count);

Point2 rotate(const Point2& v, const Scalar& cos, const Scalar& sin);

struct NormalizedSet {
    PointSet points;
    RotationRecord rotation;
};

inline constexpr std::size_t kDefaultRotationAttempts = 64;

// Rotates p by the first rational rotation that leaves no point on an axis
// and gives every point its own x-coordinate. Throws RotationExhausted when
// none of the first max_attempts rotations qualifies.
NormalizedSet normalize_rotation(const PointSet& p,
                                 std::size_t max_attempts = kDefaultRotationAttempts);

bool is_rotation_normalized(const PointSet& p);

} // namespace wedgelab
