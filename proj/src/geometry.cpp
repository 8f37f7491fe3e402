#include "wedgelab/geometry.hpp"

#include "wedgelab/error.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace wedgelab {

PointSet::PointSet(std::vector<Point2> points, Provenance provenance)
    : points_(std::move(points)), provenance_(std::move(provenance))
{
    std::sort(points_.begin(), points_.end());
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const Point2& p = points_[i];
        if (p.x == 0 && p.y == 0)
            throw Error(ErrorCode::OriginPoint, "the origin cannot be a member of a point set");
        if (i > 0 && points_[i - 1] == p)
            throw Error(ErrorCode::DuplicatePoint,
                        "duplicate point (" + to_string(p.x) + ", " + to_string(p.y) + ")");
    }
}

std::size_t PointSet::find(const Point2& p) const
{
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it != points_.end() && *it == p)
        return static_cast<std::size_t>(it - points_.begin());
    return points_.size();
}

Scalar wedge(const Point2& u, const Point2& v)
{
    return u.x * v.y - u.y * v.x;
}

Scalar dot(const Point2& u, const Point2& v)
{
    return u.x * v.x + u.y * v.y;
}

Point2 perp(const Point2& v)
{
    return {-v.y, v.x};
}

PointSet perp(const PointSet& p)
{
    std::vector<Point2> out;
    out.reserve(p.size());
    for (const auto& v : p)
        out.push_back(perp(v));
    return PointSet(std::move(out), p.provenance());
}

bool collinear_with_origin(const Point2& u, const Point2& v)
{
    return u.x * v.y == u.y * v.x;
}

std::size_t max_collinear(const PointSet& p)
{
    const std::size_t n = p.size();
    if (n <= 2)
        return n;
    std::size_t best = 2;
    // Per anchor point, group the later points by the slope of the joining
    // segment; vertical segments share their own bucket.
    std::vector<std::pair<bool, Scalar>> slopes;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        slopes.clear();
        for (std::size_t j = i + 1; j < n; ++j) {
            Scalar dx = p[j].x - p[i].x;
            Scalar dy = p[j].y - p[i].y;
            if (dx == 0)
                slopes.emplace_back(true, Scalar(0));
            else
                slopes.emplace_back(false, Scalar(dy / dx));
        }
        std::sort(slopes.begin(), slopes.end());
        std::size_t run = 1;
        for (std::size_t k = 1; k <= slopes.size(); ++k) {
            if (k < slopes.size() && slopes[k] == slopes[k - 1]) {
                ++run;
                continue;
            }
            best = std::max(best, run + 1);
            run = 1;
        }
    }
    return best;
}

std::vector<std::pair<Scalar, Scalar>> pythagorean_rotations(std::size_t count)
{
    using Triple = std::tuple<unsigned long, unsigned long, unsigned long>; // hyp, small, large
    std::vector<Triple> triples;
    unsigned long bound = 32;
    while (true) {
        triples.clear();
        // Euclid: m > k > 0, coprime, opposite parity; complete for hyp <= bound.
        for (unsigned long m = 2; m * m < bound; ++m) {
            for (unsigned long k = 1; k < m; ++k) {
                if ((m - k) % 2 == 0 || std::gcd(m, k) != 1)
                    continue;
                unsigned long hyp = m * m + k * k;
                if (hyp > bound)
                    continue;
                unsigned long a = m * m - k * k, b = 2 * m * k;
                triples.emplace_back(hyp, std::min(a, b), std::max(a, b));
            }
        }
        if (triples.size() >= count)
            break;
        bound *= 2;
    }
    std::sort(triples.begin(), triples.end());
    triples.resize(count);

    std::vector<std::pair<Scalar, Scalar>> out;
    out.reserve(count);
    for (const auto& [hyp, small, large] : triples)
        out.emplace_back(make_scalar(small, hyp), make_scalar(large, hyp));
    return out;
}

Point2 rotate(const Point2& v, const Scalar& cos, const Scalar& sin)
{
    return {cos * v.x - sin * v.y, sin * v.x + cos * v.y};
}

bool is_rotation_normalized(const PointSet& p)
{
    std::vector<Scalar> xs;
    xs.reserve(p.size());
    for (const auto& v : p) {
        if (v.x == 0 || v.y == 0)
            return false;
        xs.push_back(v.x);
    }
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

NormalizedSet normalize_rotation(const PointSet& p, std::size_t max_attempts)
{
    if (p.empty())
        throw Error(ErrorCode::InvalidArgument, "cannot normalize an empty point set");
    const auto rotations = pythagorean_rotations(max_attempts);
    for (std::size_t k = 0; k < rotations.size(); ++k) {
        const auto& [c, s] = rotations[k];
        std::vector<Point2> out;
        out.reserve(p.size());
        for (const auto& v : p)
            out.push_back(rotate(v, c, s));
        PointSet rotated(std::move(out), p.provenance());
        if (is_rotation_normalized(rotated))
            return {std::move(rotated), RotationRecord{c, s, k + 1}};
    }
    throw Error(ErrorCode::RotationExhausted,
                "no admissible rotation among the first " + std::to_string(max_attempts) +
                    " Pythagorean triples");
}

} // namespace wedgelab
