#include "wedgelab/incidence.hpp"

#include "detail/linalg.hpp"
#include "detail/parallel.hpp"
#include "wedgelab/error.hpp"
#include "wedgelab/random.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace wedgelab {

template <std::size_t D>
PairSolution<D> solve_pair(const AffineLine<D>& a, const AffineLine<D>& b)
{
    const auto& d1 = a.dir;
    const auto& d2 = b.dir;
    Vec<D> r;
    for (std::size_t k = 0; k < D; ++k)
        r[k] = b.base[k] - a.base[k];

    PairSolution<D> out;
    for (std::size_t p = 0; p < D; ++p)
        for (std::size_t q = p + 1; q < D; ++q) {
            const Scalar minor = d1[p] * d2[q] - d1[q] * d2[p];
            if (minor == 0)
                continue;
            out.t1 = (r[p] * d2[q] - r[q] * d2[p]) / minor;
            out.t2 = (d1[q] * r[p] - d1[p] * r[q]) / minor;
            out.point = a.at(out.t1);
            out.relation = out.point == b.at(out.t2) ? LineRelation::Intersecting : LineRelation::Skew;
            return out;
        }

    // Directions are proportional: the lines coincide iff the offset is parallel too.
    for (std::size_t p = 0; p < D; ++p)
        for (std::size_t q = p + 1; q < D; ++q)
            if (r[p] * d1[q] != r[q] * d1[p]) {
                out.relation = LineRelation::Parallel;
                return out;
            }
    out.relation = LineRelation::Coincident;
    return out;
}

template PairSolution<3> solve_pair(const AffineLine<3>&, const AffineLine<3>&);
template PairSolution<4> solve_pair(const AffineLine<4>&, const AffineLine<4>&);

namespace {

template <class Family>
auto affine_lines(const Family& family)
{
    using Line = std::decay_t<decltype(family.lines[0].line)>;
    std::vector<Line> out;
    out.reserve(family.lines.size());
    for (const auto& l : family.lines)
        out.push_back(l.line);
    return out;
}

void check_cap(std::size_t m, const IncidenceOptions& opts)
{
    if (m > opts.max_lines)
        throw Error(ErrorCode::CapExceeded, "incidence enumeration limited to " +
                                                std::to_string(opts.max_lines) + " lines, got " +
                                                std::to_string(m));
}

// relation[i*m + j] for i < j
template <std::size_t D>
std::vector<LineRelation> relation_table(std::span<const AffineLine<D>> lines, unsigned workers)
{
    const std::size_t m = lines.size();
    auto parts = detail::map_chunks(m, workers, [&](std::size_t begin, std::size_t end) {
        std::vector<LineRelation> rows;
        rows.reserve((end - begin) * m);
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = 0; j < m; ++j)
                rows.push_back(j > i ? solve_pair(lines[i], lines[j]).relation : LineRelation::Skew);
        return rows;
    });
    return detail::concat(std::move(parts));
}

Scalar dot3(const Vec3& a, const Vec3& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross3(const Vec3& a, const Vec3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

} // namespace

template <std::size_t D>
std::vector<IncidenceRecord<D>> pairwise_intersections(std::span<const AffineLine<D>> lines,
                                                       const IncidenceOptions& opts)
{
    const std::size_t m = lines.size();
    check_cap(m, opts);
    auto parts = detail::map_chunks(m, opts.workers, [&](std::size_t begin, std::size_t end) {
        std::vector<IncidenceRecord<D>> out;
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                auto s = solve_pair(lines[i], lines[j]);
                if (s.relation == LineRelation::Coincident)
                    throw Error(ErrorCode::CoincidentLines, "lines " + std::to_string(i) + " and " +
                                                                std::to_string(j) + " coincide");
                if (s.relation == LineRelation::Intersecting)
                    out.push_back({i, j, std::move(s.point), std::move(s.t1), std::move(s.t2)});
            }
        return out;
    });
    return detail::concat(std::move(parts));
}

template std::vector<IncidenceRecord<3>> pairwise_intersections(std::span<const AffineLine<3>>,
                                                                const IncidenceOptions&);
template std::vector<IncidenceRecord<4>> pairwise_intersections(std::span<const AffineLine<4>>,
                                                                const IncidenceOptions&);

std::vector<IncidenceRecord<4>> pairwise_intersections(const LineFamily& family, const IncidenceOptions& opts)
{
    const auto lines = affine_lines(family);
    return pairwise_intersections<4>(std::span<const AffineLine<4>>(lines), opts);
}

std::vector<IncidenceRecord<3>> pairwise_intersections(const Line3Family& family, const IncidenceOptions& opts)
{
    const auto lines = affine_lines(family);
    return pairwise_intersections<3>(std::span<const AffineLine<3>>(lines), opts);
}

template <std::size_t D>
std::size_t max_concurrency(std::span<const IncidenceRecord<D>> records, std::size_t line_count)
{
    if (line_count == 0)
        return 0;
    std::map<Vec<D>, std::set<std::size_t>, decltype(&lex_less<D>)> through(&lex_less<D>);
    for (const auto& r : records) {
        auto& s = through[r.point];
        s.insert(r.first);
        s.insert(r.second);
    }
    std::size_t best = 1;
    for (const auto& [pt, s] : through)
        best = std::max(best, s.size());
    return best;
}

template std::size_t max_concurrency(std::span<const IncidenceRecord<3>>, std::size_t);
template std::size_t max_concurrency(std::span<const IncidenceRecord<4>>, std::size_t);

std::size_t max_concurrency(const LineFamily& family, const IncidenceOptions& opts)
{
    const auto records = pairwise_intersections(family, opts);
    return max_concurrency<4>(std::span<const IncidenceRecord<4>>(records), family.size());
}

std::size_t max_concurrency(const Line3Family& family, const IncidenceOptions& opts)
{
    const auto records = pairwise_intersections(family, opts);
    return max_concurrency<3>(std::span<const IncidenceRecord<3>>(records), family.size());
}

std::array<Integer, 4> canonical_plane(const Vec3& normal, const Scalar& delta)
{
    const std::array<const Scalar*, 4> in{&normal[0], &normal[1], &normal[2], &delta};
    Integer den = 1;
    for (const Scalar* s : in)
        den = lcm(den, s->get_den());
    std::array<Integer, 4> out;
    Integer g = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        out[k] = in[k]->get_num() * (den / in[k]->get_den());
        g = gcd(g, out[k]);
    }
    const std::size_t lead = out[0] != 0 ? 0 : out[1] != 0 ? 1 : 2;
    if (out[lead] == 0)
        throw Error(ErrorCode::InvalidArgument, "zero plane normal");
    if (out[lead] < 0)
        g = -g;
    for (auto& c : out)
        c /= g;
    return out;
}

bool line_in_plane(const AffineLine<3>& l, const std::array<Integer, 4>& plane)
{
    const Vec3 n{Scalar(plane[0]), Scalar(plane[1]), Scalar(plane[2])};
    return dot3(n, l.dir) == 0 && dot3(n, l.base) == Scalar(plane[3]);
}

CoplanarResult max_coplanar(std::span<const AffineLine<3>> lines, const IncidenceOptions& opts)
{
    const std::size_t m = lines.size();
    check_cap(m, opts);
    CoplanarResult result;
    result.count = m == 0 ? 0 : 1;

    auto parts = detail::map_chunks(m, opts.workers, [&](std::size_t begin, std::size_t end) {
        std::vector<std::pair<std::array<Integer, 4>, std::pair<std::size_t, std::size_t>>> out;
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const auto s = solve_pair(lines[i], lines[j]);
                Vec3 normal;
                if (s.relation == LineRelation::Intersecting) {
                    normal = cross3(lines[i].dir, lines[j].dir);
                } else if (s.relation == LineRelation::Parallel) {
                    Vec3 offset;
                    for (std::size_t k = 0; k < 3; ++k)
                        offset[k] = lines[j].base[k] - lines[i].base[k];
                    normal = cross3(lines[i].dir, offset);
                } else {
                    continue;
                }
                out.emplace_back(canonical_plane(normal, dot3(normal, lines[i].base)), std::pair{i, j});
            }
        return out;
    });

    std::map<std::array<Integer, 4>, std::set<std::size_t>> groups;
    for (auto& part : parts)
        for (auto& [plane, pair] : part) {
            auto& g = groups[plane];
            g.insert(pair.first);
            g.insert(pair.second);
        }
    // std::map iterates planes in canonical order, so ties resolve to the least plane.
    for (auto& [plane, members] : groups) {
        if (result.plane ? members.size() <= result.count : members.size() < result.count)
            continue;
        PlaneRecord rec{plane, {members.begin(), members.end()}, true};
        for (std::size_t k : rec.members)
            rec.verified = rec.verified && line_in_plane(lines[k], plane);
        result.count = members.size();
        result.plane = std::move(rec);
    }
    return result;
}

CoplanarResult max_coplanar(const Line3Family& family, const IncidenceOptions& opts)
{
    const auto lines = affine_lines(family);
    return max_coplanar(std::span<const AffineLine<3>>(lines), opts);
}

const char* to_string(QuadricKind k)
{
    switch (k) {
    case QuadricKind::Degenerate:
        return "degenerate";
    case QuadricKind::RuledCandidate:
        return "ruled-candidate";
    case QuadricKind::Other:
        return "other";
    }
    return "other";
}

namespace {

std::array<Scalar, 10> monomials(const Vec3& x)
{
    return {x[0] * x[0], x[1] * x[1], x[2] * x[2], x[0] * x[1], x[0] * x[2],
            x[1] * x[2], x[0],        x[1],        x[2],        Scalar(1)};
}

Scalar dot10(const std::array<Scalar, 10>& a, const std::array<Scalar, 10>& b)
{
    Scalar s = 0;
    for (std::size_t k = 0; k < 10; ++k)
        if (a[k] != 0 && b[k] != 0)
            s += a[k] * b[k];
    return s;
}

// Monomials of each line's three sample points, t = 0 first since most lines
// fail there.
using LineSamples = std::array<std::array<Scalar, 10>, 3>;

LineSamples samples(const AffineLine<3>& l)
{
    return {monomials(l.at(0)), monomials(l.at(-1)), monomials(l.at(1))};
}

bool on_quadric(const std::array<Scalar, 10>& coeffs, const LineSamples& s)
{
    for (const auto& m : s)
        if (dot10(coeffs, m) != 0)
            return false;
    return true;
}

bool coeffs_less(const std::array<Scalar, 10>& a, const std::array<Scalar, 10>& b)
{
    for (std::size_t k = 0; k < 10; ++k) {
        int c = cmp(a[k], b[k]);
        if (c != 0)
            return c < 0;
    }
    return false;
}

std::optional<QuadricSurface> quadric_from_samples(const LineSamples& a, const LineSamples& b,
                                                   const LineSamples& c)
{
    detail::Matrix rows;
    rows.reserve(9);
    for (const LineSamples* s : {&a, &b, &c})
        for (const auto& m : *s)
            rows.emplace_back(m.begin(), m.end());
    auto basis = detail::nullspace(std::move(rows), 10);
    if (basis.size() != 1)
        return std::nullopt;
    std::array<Scalar, 10> coeffs;
    std::copy(basis[0].begin(), basis[0].end(), coeffs.begin());
    return make_quadric(std::move(coeffs));
}

// Sample rows scaled to integers. Scaling a row by a positive constant keeps
// every zero test, and integer dot products skip the gcd work of rationals.
using IntRow = std::array<Integer, 10>;
using IntSamples = std::array<IntRow, 3>;

template <class Vec>
IntRow integer_row(const Vec& row)
{
    Integer l = 1;
    for (const auto& v : row)
        if (v != 0)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), Scalar(v).get_den_mpz_t());
    IntRow out;
    for (std::size_t k = 0; k < 10; ++k) {
        const Scalar v = row[k];
        out[k] = v.get_num() * (l / v.get_den());
    }
    return out;
}

IntSamples integer_samples(const LineSamples& s)
{
    return {integer_row(s[0]), integer_row(s[1]), integer_row(s[2])};
}

bool int_dot_zero(const IntRow& a, const IntRow& b, Integer& acc)
{
    acc = 0;
    for (std::size_t k = 0; k < 10; ++k)
        if (sgn(a[k]) != 0 && sgn(b[k]) != 0)
            mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), b[k].get_mpz_t());
    return sgn(acc) == 0;
}

bool int_on_quadric(const IntRow& q, const IntSamples& s, Integer& acc)
{
    for (const auto& m : s)
        if (!int_dot_zero(q, m, acc))
            return false;
    return true;
}

// Arithmetic modulo the Mersenne prime 2^61 - 1, used only to discard
// triples and lines that cannot matter; every reported value is exact.
namespace modp {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t reduce(unsigned __int128 x)
{
    std::uint64_t r = static_cast<std::uint64_t>(x & kPrime) + static_cast<std::uint64_t>(x >> 61);
    r = (r & kPrime) + (r >> 61);
    return r >= kPrime ? r - kPrime : r;
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b)
{
    return reduce(static_cast<unsigned __int128>(a) * b);
}

std::uint64_t add(std::uint64_t a, std::uint64_t b)
{
    const std::uint64_t r = a + b;
    return r >= kPrime ? r - kPrime : r;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b)
{
    return a >= b ? a - b : a + kPrime - b;
}

std::uint64_t inv(std::uint64_t a)
{
    std::uint64_t r = 1;
    for (std::uint64_t e = kPrime - 2; e; e >>= 1, a = mul(a, a))
        if (e & 1)
            r = mul(r, a);
    return r;
}

using Row = std::array<std::uint64_t, 10>;
using Samples = std::array<Row, 3>;

Samples of(const IntSamples& s)
{
    Samples out;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t k = 0; k < 10; ++k)
            out[r][k] = mpz_fdiv_ui(s[r][k].get_mpz_t(), kPrime);
    return out;
}

// The nullspace vector of the nine sample rows when they have full rank.
std::optional<Row> fit(const Samples& a, const Samples& b, const Samples& c)
{
    std::array<Row, 9> m;
    for (std::size_t r = 0; r < 3; ++r) {
        m[r] = a[r];
        m[3 + r] = b[r];
        m[6 + r] = c[r];
    }
    std::array<std::size_t, 9> pivot_col{};
    std::size_t row = 0;
    for (std::size_t col = 0; col < 10 && row < 9; ++col) {
        std::size_t p = row;
        while (p < 9 && m[p][col] == 0)
            ++p;
        if (p == 9)
            continue;
        std::swap(m[p], m[row]);
        const std::uint64_t iv = inv(m[row][col]);
        for (auto& v : m[row])
            v = mul(v, iv);
        for (std::size_t r = 0; r < 9; ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            const std::uint64_t f = m[r][col];
            for (std::size_t k = col; k < 10; ++k)
                m[r][k] = sub(m[r][k], mul(f, m[row][k]));
        }
        pivot_col[row++] = col;
    }
    if (row != 9)
        return std::nullopt;
    std::size_t free_col = 0;
    for (std::size_t r = 0; r < 9 && pivot_col[r] == free_col; ++r)
        ++free_col;
    Row x{};
    x[free_col] = 1;
    for (std::size_t r = 0; r < 9; ++r)
        x[pivot_col[r]] = sub(0, m[r][free_col]);
    return x;
}

bool on_quadric(const Row& q, const Samples& s)
{
    for (const auto& m : s) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < 10; ++k)
            acc = add(acc, mul(q[k], m[k]));
        if (acc != 0)
            return false;
    }
    return true;
}

} // namespace modp

// Quadrics through two lines: an integer basis of the nullspace of their six
// sample rows, shared by every triple that extends the pair.
struct PairBasis {
    std::size_t i = SIZE_MAX, j = SIZE_MAX;
    std::vector<IntRow> basis;
};

void fill_pair_basis(PairBasis& pb, std::size_t i, std::size_t j, const IntSamples& a, const IntSamples& b)
{
    if (pb.i == i && pb.j == j)
        return;
    detail::Matrix rows;
    rows.reserve(6);
    for (const IntSamples* s : {&a, &b})
        for (const auto& m : *s)
            rows.emplace_back(m.begin(), m.end());
    pb.i = i;
    pb.j = j;
    pb.basis.clear();
    for (const auto& v : detail::nullspace(std::move(rows), 10))
        pb.basis.push_back(integer_row(v));
}

// Integer coefficients of the unique quadric through the pair and c.
std::optional<IntRow> quadric_from_pair(const PairBasis& pb, const IntSamples& c)
{
    const std::size_t d = pb.basis.size();
    std::vector<std::array<Integer, 3>> cols(d);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t col = 0; col < d; ++col)
            int_dot_zero(c[r], pb.basis[col], cols[col][r]);

    std::vector<Integer> weights(d);
    if (d == 4) {
        // null vector of a rank-3 3x4 matrix: signed maximal minors
        auto det3 = [](const std::array<Integer, 3>& a, const std::array<Integer, 3>& b,
                       const std::array<Integer, 3>& e) -> Integer {
            return a[0] * (b[1] * e[2] - b[2] * e[1]) - b[0] * (a[1] * e[2] - a[2] * e[1]) +
                   e[0] * (a[1] * b[2] - a[2] * b[1]);
        };
        weights[0] = det3(cols[1], cols[2], cols[3]);
        weights[1] = -det3(cols[0], cols[2], cols[3]);
        weights[2] = det3(cols[0], cols[1], cols[3]);
        weights[3] = -det3(cols[0], cols[1], cols[2]);
        if (std::all_of(weights.begin(), weights.end(), [](const Integer& w) { return sgn(w) == 0; }))
            return std::nullopt;
    } else {
        detail::Matrix g(3, std::vector<Scalar>(d));
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t col = 0; col < d; ++col)
                g[r][col] = cols[col][r];
        auto lambda = detail::nullspace(std::move(g), d);
        if (lambda.size() != 1)
            return std::nullopt;
        Integer l = 1;
        for (const auto& v : lambda[0])
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        for (std::size_t col = 0; col < d; ++col)
            weights[col] = lambda[0][col].get_num() * (l / lambda[0][col].get_den());
    }
    IntRow coeffs;
    for (std::size_t k = 0; k < 10; ++k)
        for (std::size_t col = 0; col < d; ++col)
            if (sgn(weights[col]) != 0)
                mpz_addmul(coeffs[k].get_mpz_t(), weights[col].get_mpz_t(), pb.basis[col][k].get_mpz_t());
    return coeffs;
}

std::array<Scalar, 10> normalized(const IntRow& c)
{
    std::array<Scalar, 10> out;
    const auto lead = std::find_if(c.begin(), c.end(), [](const Integer& v) { return sgn(v) != 0; });
    for (std::size_t k = 0; k < 10; ++k)
        out[k] = make_scalar(c[k], *lead);
    return out;
}

struct RegulusBest {
    std::size_t count = 0;
    std::optional<QuadricSurface> surface;
    std::uint64_t examined = 0;
    std::uint64_t skew = 0;

    // Whether a quadric with n lines and these normalized coefficients
    // would replace the current best.
    bool beats(std::size_t n, const std::array<Scalar, 10>& coeffs) const
    {
        return n > count || (n == count && surface && coeffs_less(coeffs, surface->coeffs));
    }

    void offer(std::size_t n, const QuadricSurface& q)
    {
        if (beats(n, q.coeffs)) {
            count = n;
            surface = q;
        }
    }
};

} // namespace

Scalar QuadricSurface::eval(const Vec3& x) const
{
    return dot10(coeffs, monomials(x));
}

bool QuadricSurface::contains(const AffineLine<3>& l) const
{
    return on_quadric(coeffs, samples(l));
}

QuadricSurface make_quadric(std::array<Scalar, 10> coeffs)
{
    auto lead = std::find_if(coeffs.begin(), coeffs.end(), [](const Scalar& s) { return s != 0; });
    if (lead == coeffs.end())
        throw Error(ErrorCode::InvalidArgument, "quadric coefficients are all zero");
    const Scalar scale = *lead;
    for (auto& c : coeffs)
        c /= scale;

    QuadricSurface q{coeffs, QuadricKind::Other};
    if (coeffs[0] == 0 && coeffs[1] == 0 && coeffs[2] == 0 && coeffs[3] == 0 && coeffs[4] == 0 &&
        coeffs[5] == 0) {
        q.kind = QuadricKind::Degenerate;
        return q;
    }
    const Scalar h = Scalar(1, 2);
    detail::Matrix m{
        {coeffs[0], h * coeffs[3], h * coeffs[4], h * coeffs[6]},
        {h * coeffs[3], coeffs[1], h * coeffs[5], h * coeffs[7]},
        {h * coeffs[4], h * coeffs[5], coeffs[2], h * coeffs[8]},
        {h * coeffs[6], h * coeffs[7], h * coeffs[8], coeffs[9]},
    };
    const Scalar det = detail::determinant(m);
    if (det == 0)
        q.kind = QuadricKind::Degenerate;
    else if (det > 0)
        q.kind = QuadricKind::RuledCandidate;
    return q;
}

std::optional<QuadricSurface> quadric_through(const AffineLine<3>& a, const AffineLine<3>& b,
                                              const AffineLine<3>& c)
{
    return quadric_from_samples(samples(a), samples(b), samples(c));
}

RegulusResult regulus_max(std::span<const AffineLine<3>> lines, const RegulusOptions& opts)
{
    const std::size_t m = lines.size();
    RegulusResult result;
    if (m < 3)
        return result;

    std::vector<char> skew(m * m, 0);
    {
        const auto rel = relation_table<3>(lines, opts.workers);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                skew[i * m + j] = skew[j * m + i] = rel[i * m + j] == LineRelation::Skew;
    }
    std::vector<IntSamples> pts;
    std::vector<modp::Samples> fast;
    pts.reserve(m);
    fast.reserve(m);
    for (const auto& l : lines) {
        pts.push_back(integer_samples(samples(l)));
        fast.push_back(modp::of(pts.back()));
    }

    struct Scratch {
        PairBasis pair;
        std::vector<std::size_t> candidates;
        Integer acc;
    };

    auto visit = [&](RegulusBest& best, Scratch& sc, std::size_t i, std::size_t j, std::size_t k) {
        ++best.examined;
        if (!skew[i * m + j] || !skew[i * m + k] || !skew[j * m + k])
            return;
        ++best.skew;
        // Full rank mod p forces full rank over Q, so the two quadrics agree
        // and a line off the modular one is off the exact one.
        const auto qp = modp::fit(fast[i], fast[j], fast[k]);
        sc.candidates.clear();
        for (std::size_t c = 0; c < m; ++c)
            if (!qp || modp::on_quadric(*qp, fast[c]))
                sc.candidates.push_back(c);
        if (sc.candidates.size() < best.count)
            return;

        fill_pair_basis(sc.pair, i, j, pts[i], pts[j]);
        const auto q = quadric_from_pair(sc.pair, pts[k]);
        if (!q)
            return;
        std::size_t n = 0;
        for (auto c : sc.candidates)
            n += int_on_quadric(*q, pts[c], sc.acc);
        auto coeffs = normalized(*q);
        if (!best.beats(n, coeffs))
            return;
        QuadricSurface surface = make_quadric(std::move(coeffs));
        if (surface.kind == QuadricKind::RuledCandidate)
            best.offer(n, surface);
    };

    const unsigned __int128 total = static_cast<unsigned __int128>(m) * (m - 1) * (m - 2) / 6;
    std::vector<RegulusBest> parts;
    if (total <= opts.triple_budget) {
        parts = detail::map_chunks(m, opts.workers, [&](std::size_t begin, std::size_t end) {
            RegulusBest best;
            Scratch sc;
            for (std::size_t i = begin; i < end; ++i)
                for (std::size_t j = i + 1; j < m; ++j)
                    for (std::size_t k = j + 1; k < m; ++k)
                        visit(best, sc, i, j, k);
            return best;
        });
    } else {
        result.lower_bound = true;
        std::vector<std::array<std::size_t, 3>> triples;
        triples.reserve(opts.triple_budget);
        SplitMix64 rng(opts.seed);
        while (triples.size() < opts.triple_budget) {
            std::array<std::size_t, 3> t{rng.below(m), rng.below(m), rng.below(m)};
            if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
                continue;
            std::sort(t.begin(), t.end());
            triples.push_back(t);
        }
        // grouping by pair lets consecutive triples share a pair basis
        std::sort(triples.begin(), triples.end());
        parts = detail::map_chunks(triples.size(), opts.workers, [&](std::size_t begin, std::size_t end) {
            RegulusBest best;
            Scratch sc;
            for (std::size_t t = begin; t < end; ++t)
                visit(best, sc, triples[t][0], triples[t][1], triples[t][2]);
            return best;
        });
    }

    RegulusBest merged;
    for (const auto& p : parts) {
        merged.examined += p.examined;
        merged.skew += p.skew;
        if (p.surface)
            merged.offer(p.count, *p.surface);
    }
    result.count = merged.count;
    result.surface = std::move(merged.surface);
    result.triples_examined = merged.examined;
    result.skew_triples = merged.skew;
    return result;
}

RegulusResult regulus_max(const Line3Family& family, const RegulusOptions& opts)
{
    const auto lines = affine_lines(family);
    return regulus_max(std::span<const AffineLine<3>>(lines), opts);
}

CorrespondenceReport correspondence_check(const PointSet& p, std::size_t cap, std::size_t witness_limit)
{
    CorrespondenceReport report;
    report.quadruples_restricted = quadruple_count_naive(p, true, cap);

    const LineFamily family = build_family(p, false);
    std::vector<std::array<std::size_t, 4>> from_lines;
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a + 1; b < family.size(); ++b) {
            const int orient = sgn(wedge(family.lines[a].source, family.lines[b].source));
            if (orient == 0)
                continue; // same or proportional sources: disjoint or the same line
            const auto s = solve_pair(family.lines[a].line, family.lines[b].line);
            if (s.relation != LineRelation::Intersecting)
                continue;
            const IndexPair first = orient > 0 ? family.index[a] : family.index[b];
            const IndexPair second = orient > 0 ? family.index[b] : family.index[a];
            std::array<std::size_t, 4> quad{first.source, second.source, first.target, second.target};
            from_lines.push_back(quad);
            if (report.witnesses.size() < witness_limit)
                report.witnesses.push_back({quad, first, second, s.point});
        }
    report.intersecting_line_pairs = from_lines.size();

    // Enumerate the restricted quadruples themselves and compare as sets.
    const std::size_t n = p.size();
    std::vector<std::array<std::size_t, 4>> direct;
    for (std::size_t v1 = 0; v1 < n; ++v1)
        for (std::size_t v2 = 0; v2 < n; ++v2) {
            const Scalar s = wedge(p[v1], p[v2]);
            if (sgn(s) <= 0)
                continue;
            for (std::size_t v3 = 0; v3 < n; ++v3) {
                if (collinear_with_origin(p[v1], p[v3]))
                    continue;
                for (std::size_t v4 = 0; v4 < n; ++v4)
                    if (!collinear_with_origin(p[v2], p[v4]) && wedge(p[v3], p[v4]) == s)
                        direct.push_back({v1, v2, v3, v4});
            }
        }
    std::sort(direct.begin(), direct.end());
    std::sort(from_lines.begin(), from_lines.end());
    report.bijection_holds = direct == from_lines;
    report.passed = report.bijection_holds && report.quadruples_restricted == report.intersecting_line_pairs;
    return report;
}

LineFamily dedupe_family(const LineFamily& family, std::size_t* removed)
{
    std::set<AffineLine<4>, bool (*)(const AffineLine<4>&, const AffineLine<4>&)> seen(
        [](const AffineLine<4>& a, const AffineLine<4>& b) {
            if (lex_less<4>(a.dir, b.dir))
                return true;
            if (lex_less<4>(b.dir, a.dir))
                return false;
            return lex_less<4>(a.base, b.base);
        });
    LineFamily out;
    out.points = family.points;
    out.oriented = family.oriented;
    for (std::size_t k = 0; k < family.size(); ++k) {
        if (!seen.insert(family.lines[k].line.canonical()).second)
            continue;
        out.lines.push_back(family.lines[k]);
        out.index.push_back(family.index[k]);
    }
    if (removed)
        *removed = family.size() - out.size();
    return out;
}

Scalar GktReport::concurrency_ratio() const
{
    if (n_points == 0)
        return 0;
    const std::size_t worst = std::max(max_concurrency_3d, max_concurrency_4d.value_or(0));
    return make_scalar(static_cast<unsigned long>(worst), static_cast<unsigned long>(n_points));
}

Scalar GktReport::coplanar_ratio() const
{
    if (n_points == 0)
        return 0;
    return make_scalar(static_cast<unsigned long>(coplanar.count), static_cast<unsigned long>(2 * n_points));
}

std::optional<long double> GktReport::intersection_ratio() const
{
    if (n_points < 2)
        return std::nullopt;
    const long double n = static_cast<long double>(n_points);
    return static_cast<long double>(intersections_3d) / (n * n * n * std::log(n));
}

bool GktReport::concurrency_violation() const
{
    return concurrency_ratio() > 1;
}

bool GktReport::coplanar_violation() const
{
    return coplanar_ratio() > 1;
}

bool GktReport::passed() const
{
    return !concurrency_violation() && !coplanar_violation() && projection_witnesses_valid &&
           (!coplanar.plane || coplanar.plane->verified);
}

namespace {

std::vector<IncidenceRecord<3>> fill_3d(GktReport& r, const Line3Family& family3, const GktOptions& opts)
{
    const auto lines = affine_lines(family3);
    const std::span<const AffineLine<3>> view(lines);
    auto records = pairwise_intersections<3>(view, opts.incidence);
    r.line_count = family3.size();
    r.intersections_3d = records.size();
    r.max_concurrency_3d = max_concurrency<3>(std::span<const IncidenceRecord<3>>(records), lines.size());
    r.coplanar = max_coplanar(view, opts.incidence);
    if (opts.include_regulus)
        r.regulus = regulus_max(view, opts.regulus);
    return records;
}

} // namespace

GktReport gkt_condition_report(const LineFamily& family, const GktOptions& opts)
{
    GktReport r;
    r.n_points = family.points.size();
    const LineFamily distinct = dedupe_family(family, &r.duplicate_lines);
    const auto records4 = pairwise_intersections(distinct, opts.incidence);
    r.intersections_4d = records4.size();
    r.max_concurrency_4d = max_concurrency<4>(std::span<const IncidenceRecord<4>>(records4), distinct.size());

    const auto records3 = fill_3d(r, project(distinct), opts);

    // Projection preserves positions, so 3D pairs without a 4D partner are
    // the meetings the x4-drop created.
    std::set<std::pair<std::size_t, std::size_t>> pairs4;
    for (const auto& rec : records4)
        pairs4.emplace(rec.first, rec.second);
    for (const auto& rec : records3) {
        if (pairs4.count({rec.first, rec.second}))
            continue;
        r.projection_witnesses_valid = r.projection_witnesses_valid && rec.point[0] == 0;
        r.projection_witnesses.push_back(rec.point);
    }
    return r;
}

GktReport gkt_condition_report(const Line3Family& family, std::size_t n_points, const GktOptions& opts)
{
    GktReport r;
    r.n_points = n_points;
    fill_3d(r, family, opts);
    return r;
}

} // namespace wedgelab
