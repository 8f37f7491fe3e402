#include "wedgelab/sumproduct.hpp"

#include "wedgelab/error.hpp"
#include "wedgelab/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace wedgelab {

namespace {

void check_cap(const RealSet& a, std::size_t cap)
{
    if (a.size() > cap)
        throw Error(ErrorCode::CapExceeded, "set size " + std::to_string(a.size()) + " exceeds cap " +
                                                std::to_string(cap));
}

std::vector<Scalar> distinct(std::vector<Scalar> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<Scalar> product_set(const RealSet& a)
{
    std::vector<Scalar> out;
    out.reserve(a.size() * (a.size() + 1) / 2);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i; j < a.size(); ++j)
            out.push_back(a[i] * a[j]);
    return distinct(std::move(out));
}

// The multiset A.A over ordered pairs, grouped: (value, multiplicity).
std::vector<std::pair<Scalar, std::uint64_t>> product_multiset(const RealSet& a)
{
    std::vector<Scalar> all;
    all.reserve(a.size() * a.size());
    for (const auto& x : a.elements())
        for (const auto& y : a.elements())
            all.push_back(x * y);
    std::sort(all.begin(), all.end());
    std::vector<std::pair<Scalar, std::uint64_t>> out;
    for (const auto& v : all) {
        if (!out.empty() && out.back().first == v)
            ++out.back().second;
        else
            out.emplace_back(v, 1);
    }
    return out;
}

} // namespace

RealSet::RealSet(std::vector<Scalar> elements) : elements_(std::move(elements))
{
    std::sort(elements_.begin(), elements_.end());
    auto dup = std::adjacent_find(elements_.begin(), elements_.end());
    if (dup != elements_.end())
        throw Error(ErrorCode::InvalidArgument, "repeated element " + to_string(*dup));
}

RealSet RealSet::range(std::size_t n)
{
    std::vector<Scalar> v;
    v.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        v.emplace_back(static_cast<unsigned long>(i));
    return RealSet(std::move(v));
}

std::size_t product_sumset(const RealSet& a, SumSign sign)
{
    const auto prods = product_set(a);
    std::vector<Scalar> out;
    out.reserve(prods.size() * prods.size());
    for (std::size_t i = 0; i < prods.size(); ++i)
        for (std::size_t j = 0; j < prods.size(); ++j) {
            if (sign == SumSign::Plus && j < i)
                continue; // sums are symmetric
            out.push_back(sign == SumSign::Plus ? Scalar(prods[i] + prods[j]) : Scalar(prods[i] - prods[j]));
        }
    return distinct(std::move(out)).size();
}

RepHistogram rep_histogram(const RealSet& a, std::size_t cap)
{
    check_cap(a, cap);
    const auto prods = product_multiset(a);
    std::vector<std::pair<Scalar, std::uint64_t>> diffs;
    diffs.reserve(prods.size() * prods.size());
    for (const auto& [p, np] : prods)
        for (const auto& [q, nq] : prods)
            diffs.emplace_back(p - q, np * nq);
    std::sort(diffs.begin(), diffs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

    RepHistogram h;
    for (auto& [d, n] : diffs) {
        if (!h.entries.empty() && h.entries.back().first == d)
            h.entries.back().second += n;
        else
            h.entries.emplace_back(std::move(d), n);
    }
    return h;
}

std::uint64_t dio_solution_count(const RealSet& a, std::size_t cap)
{
    std::uint64_t total = 0;
    for (const auto& [d, r] : rep_histogram(a, cap).entries)
        total += r * r;
    return total;
}

CsCertificate cs_certificate(const RealSet& a, std::size_t cap)
{
    CsCertificate c;
    c.difference_set = product_sumset(a, SumSign::Minus);
    c.dio_solutions = dio_solution_count(a, cap);
    c.lhs = Integer(static_cast<unsigned long>(c.difference_set)) * Integer(static_cast<unsigned long>(c.dio_solutions));
    mpz_ui_pow_ui(c.rhs.get_mpz_t(), a.size(), 8);
    c.passed = c.lhs >= c.rhs;
    if (c.rhs != 0)
        c.ratio = static_cast<long double>(c.lhs.get_d()) / static_cast<long double>(c.rhs.get_d());
    if (a.size() >= 2) {
        const long double n = static_cast<long double>(a.size());
        c.dio_growth = static_cast<long double>(c.dio_solutions) / (std::pow(n, 6) * std::log(n));
    }
    return c;
}

GridWedgeEquivalence grid_wedge_equivalence(const RealSet& a, std::size_t cap)
{
    check_cap(a, cap);
    std::vector<Point2> grid;
    for (const auto& x : a.elements())
        for (const auto& y : a.elements())
            grid.push_back({x, y});

    std::vector<Scalar> wedges;
    for (const auto& u : grid)
        for (const auto& v : grid) {
            Scalar w = wedge(u, v);
            if (sgn(w) > 0)
                wedges.push_back(std::move(w));
        }

    std::vector<Scalar> diffs;
    const auto prods = product_set(a);
    for (const auto& p : prods)
        for (const auto& q : prods)
            if (p > q)
                diffs.push_back(p - q);

    wedges = distinct(std::move(wedges));
    diffs = distinct(std::move(diffs));
    return {wedges.size(), diffs.size(), wedges == diffs};
}

} // namespace wedgelab
