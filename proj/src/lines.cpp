#include "wedgelab/lines.hpp"

#include "wedgelab/error.hpp"

namespace wedgelab {

namespace {

struct Mat2 {
    Scalar a, b, c, d; // [[a, b], [c, d]]
};

Mat2 operator*(const Mat2& m, const Mat2& n)
{
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Vec4 flatten(const Mat2& m)
{
    return {m.a, m.b, m.c, m.d};
}

} // namespace

TransformLine transform_line(const Point2& source, const Point2& target)
{
    const Scalar det = wedge(source, target);
    if (det == 0)
        throw Error(ErrorCode::CollinearPair, "source and target are collinear with the origin");

    const Mat2 basis{source.x, target.x, source.y, target.y};
    const Mat2 inverse{target.y / det, -target.x / det, -source.y / det, source.x / det};
    const Mat2 constant{0, -1, 1, 0};
    const Mat2 slope{0, 0, 0, 1};

    return {source, target, {flatten(basis * constant * inverse), flatten(basis * slope * inverse)}};
}

QuadricCheck on_quadric_check(const TransformLine& l)
{
    QuadricCheck out;
    out.holds = true;
    int k = 0;
    for (int t : {-1, 0, 1}) {
        const Vec4 x = l.line.at(t);
        out.values[k] = x[0] * x[3] - x[1] * x[2];
        out.holds = out.holds && out.values[k] == 1;
        ++k;
    }
    return out;
}

bool maps_source_to_target(const TransformLine& l)
{
    for (int t : {0, 1}) {
        const Vec4 x = l.line.at(t);
        if (x[0] * l.source.x + x[1] * l.source.y != l.target.x)
            return false;
        if (x[2] * l.source.x + x[3] * l.source.y != l.target.y)
            return false;
    }
    return true;
}

LineFamily build_family(const PointSet& p, bool oriented)
{
    LineFamily f;
    f.points = p;
    f.oriented = oriented;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (i == j)
                continue;
            const int s = sgn(wedge(p[i], p[j]));
            if (s == 0 || (oriented && s < 0))
                continue;
            f.lines.push_back(transform_line(p[i], p[j]));
            f.index.push_back({i, j});
        }
    return f;
}

Line3 project(const TransformLine& l, IndexPair index)
{
    const auto& [base, dir] = l.line;
    if (dir[0] == 0 && dir[1] == 0 && dir[2] == 0)
        throw Error(ErrorCode::Projection, "line runs along the x4-axis");
    if (base[0] == 0 && dir[0] == 0)
        throw Error(ErrorCode::Projection, "line lies in the section x1 = 0");
    AffineLine<3> dropped{{base[0], base[1], base[2]}, {dir[0], dir[1], dir[2]}};
    return {dropped.canonical(), index};
}

Line3Family project(const LineFamily& family)
{
    Line3Family out;
    out.points = family.points;
    out.lines.reserve(family.size());
    for (std::size_t k = 0; k < family.size(); ++k)
        out.lines.push_back(project(family.lines[k], family.index[k]));
    return out;
}

Scalar recover_x4(const Vec3& p)
{
    if (p[0] == 0)
        throw Error(ErrorCode::Projection, "x4 is not determined on the section x1 = 0");
    return (1 + p[1] * p[2]) / p[0];
}

} // namespace wedgelab
