#pragma once

#include "wedgelab/geometry.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace wedgelab {

template <std::size_t D>
using Vec = std::array<Scalar, D>;
using Vec3 = Vec<3>;
using Vec4 = Vec<4>;

// base + t*dir
template <std::size_t D>
struct AffineLine {
    Vec<D> base;
    Vec<D> dir;

    Vec<D> at(const Scalar& t) const
    {
        Vec<D> out;
        for (std::size_t k = 0; k < D; ++k)
            out[k] = base[k] + t * dir[k];
        return out;
    }

    // dir scaled so its first nonzero entry is 1, base moved along the line
    // until that same coordinate is 0. Equal point sets give equal forms.
    AffineLine canonical() const;

    friend bool operator==(const AffineLine&, const AffineLine&) = default;
};

template <std::size_t D>
bool lex_less(const Vec<D>& a, const Vec<D>& b)
{
    for (std::size_t k = 0; k < D; ++k) {
        int c = cmp(a[k], b[k]);
        if (c != 0)
            return c < 0;
    }
    return false;
}

template <std::size_t D>
AffineLine<D> AffineLine<D>::canonical() const
{
    AffineLine out = *this;
    std::size_t k = 0;
    while (k < D && dir[k] == 0)
        ++k;
    if (k == D)
        return out;
    const Scalar scale = dir[k];
    for (auto& v : out.dir)
        v /= scale;
    const Scalar shift = out.base[k];
    for (std::size_t i = 0; i < D; ++i)
        out.base[i] -= shift * out.dir[i];
    return out;
}

// Positions in the owning family's point set.
struct IndexPair {
    std::size_t source = 0;
    std::size_t target = 0;
    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

// All T in SL2 with T(source) = target, as matrices [[x1, x2], [x3, x4]]
// flattened row-wise: line.at(t) is the matrix at parameter t.
struct TransformLine {
    Point2 source;
    Point2 target;
    AffineLine<4> line;
};

// Conjugates the companion matrix [[0, -1], [1, t]] into the standard basis
// through C = [source | target]. Throws CollinearPair when wedge == 0.
TransformLine transform_line(const Point2& source, const Point2& target);

struct QuadricCheck {
    std::array<Scalar, 3> values; // x1*x4 - x2*x3 at t = -1, 0, 1
    bool holds = false;
};

QuadricCheck on_quadric_check(const TransformLine& l);

// T(t)*source == target at t = 0 and t = 1 (a degree-1 identity in t).
bool maps_source_to_target(const TransformLine& l);

struct LineFamily {
    PointSet points;
    bool oriented = false;
    std::vector<TransformLine> lines;
    std::vector<IndexPair> index;

    std::size_t size() const { return lines.size(); }
};

// One line per ordered non-collinear pair, in (source, target) index order.
// With `oriented`, only pairs with wedge(source, target) > 0.
LineFamily build_family(const PointSet& p, bool oriented = false);

struct Line3 {
    AffineLine<3> line; // canonical
    IndexPair index;
};

struct Line3Family {
    PointSet points;
    std::vector<Line3> lines;

    std::size_t size() const { return lines.size(); }
};

// Drops x4. Throws Projection when dir is parallel to the x4-axis or the line
// lies in the section x1 = 0.
Line3 project(const TransformLine& l, IndexPair index = {});
Line3Family project(const LineFamily& family);

// x4 on the quadric, recovered from the projected coordinates (x1 != 0).
Scalar recover_x4(const Vec3& p);

} // namespace wedgelab
