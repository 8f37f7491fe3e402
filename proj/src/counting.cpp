#include "wedgelab/counting.hpp"

#include "detail/parallel.hpp"
#include "wedgelab/error.hpp"

#include <algorithm>

namespace wedgelab {

namespace {

std::size_t count_distinct(std::vector<Scalar>& values)
{
    std::sort(values.begin(), values.end());
    return static_cast<std::size_t>(std::unique(values.begin(), values.end()) - values.begin());
}

// Collects f(p[i], q[j]) over the index pairs accepted by `take`, splitting the
// outer index across workers.
template <class Value, class Take>
std::vector<Scalar> collect_pairs(const PointSet& p, const PointSet& q, unsigned workers, Value value,
                                  Take take)
{
    auto parts = detail::map_chunks(p.size(), workers, [&](std::size_t begin, std::size_t end) {
        std::vector<Scalar> out;
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = 0; j < q.size(); ++j) {
                if (!take(i, j))
                    continue;
                Scalar v = value(p[i], q[j]);
                if (v != 0 || take.keep_zero)
                    out.push_back(std::move(v));
            }
        return out;
    });
    return detail::concat(std::move(parts));
}

struct UpperTriangle {
    bool keep_zero = false;
    bool include_diagonal = false;
    bool operator()(std::size_t i, std::size_t j) const { return include_diagonal ? i <= j : i < j; }
};

struct AllPairs {
    bool keep_zero = false;
    bool operator()(std::size_t, std::size_t) const { return true; }
};

} // namespace

std::size_t distinct_areas(const PointSet& p, unsigned workers)
{
    auto values = collect_pairs(
        p, p, workers, [](const Point2& u, const Point2& v) { return Scalar(abs(wedge(u, v))); },
        UpperTriangle{});
    return count_distinct(values);
}

std::size_t distinct_areas_bipartite(const PointSet& p, const PointSet& q, unsigned workers)
{
    auto values = collect_pairs(
        p, q, workers, [](const Point2& u, const Point2& v) { return Scalar(abs(wedge(u, v))); },
        AllPairs{});
    return count_distinct(values);
}

std::size_t distinct_dot_products(const PointSet& p, unsigned workers)
{
    // dot is symmetric, so the upper triangle with the diagonal covers every value.
    auto values = collect_pairs(
        p, p, workers, [](const Point2& u, const Point2& v) { return dot(u, v); },
        UpperTriangle{.keep_zero = true, .include_diagonal = true});
    return count_distinct(values);
}

WedgeHistogram wedge_histogram(const PointSet& p, unsigned workers)
{
    // Unordered pairs suffice: exactly one orientation of a non-collinear pair
    // has a positive wedge, and its value is |wedge|.
    auto values = collect_pairs(
        p, p, workers, [](const Point2& u, const Point2& v) { return Scalar(abs(wedge(u, v))); },
        UpperTriangle{});
    std::sort(values.begin(), values.end());

    WedgeHistogram h;
    h.total = values.size();
    for (std::size_t k = 0; k < values.size();) {
        std::size_t run = 1;
        while (k + run < values.size() && values[k + run] == values[k])
            ++run;
        h.entries.emplace_back(values[k], run);
        k += run;
    }
    return h;
}

EnergyReport energy(const PointSet& p, unsigned workers)
{
    const WedgeHistogram h = wedge_histogram(p, workers);
    EnergyReport r;
    r.total_pairs = h.total;
    r.distinct_values = h.entries.size();
    for (const auto& [s, n] : h.entries)
        r.energy += n * n;
    return r;
}

std::uint64_t quadruple_count_naive(const PointSet& p, bool restricted, std::size_t cap)
{
    const std::size_t n = p.size();
    if (n > cap)
        throw Error(ErrorCode::CapExceeded, "quadruple oracle limited to " + std::to_string(cap) +
                                                " points, got " + std::to_string(n));
    std::vector<Scalar> w(n * n);
    std::vector<char> independent(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            w[i * n + j] = wedge(p[i], p[j]);
            independent[i * n + j] = w[i * n + j] != 0;
        }

    std::uint64_t count = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Scalar& s = w[a * n + b];
            if (sgn(s) <= 0)
                continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (restricted && !independent[a * n + c])
                    continue;
                for (std::size_t d = 0; d < n; ++d) {
                    if (restricted && !independent[b * n + d])
                        continue;
                    if (w[c * n + d] == s)
                        ++count;
                }
            }
        }
    return count;
}

bool cauchy_schwarz_holds(const EnergyReport& r)
{
    if (r.total_pairs == 0)
        return true;
    Integer lhs = Integer(static_cast<unsigned long>(r.distinct_values)) * Integer(static_cast<unsigned long>(r.energy));
    Integer total(static_cast<unsigned long>(r.total_pairs));
    return lhs >= total * total;
}

} // namespace wedgelab
