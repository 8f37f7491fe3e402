#pragma once

#include "wedgelab/io.hpp"
#include "wedgelab/random.hpp"

#include <string_view>

namespace wlt {

using namespace wedgelab;

inline PointSet pts(std::string_view text)
{
    return parse_point_set(text);
}

inline Point2 pt(long x, long y)
{
    return {Scalar(x), Scalar(y)};
}

inline PointSet grid(std::size_t n)
{
    return generate({GeneratorKind::Grid, n, 0, std::nullopt, {}});
}

inline PointSet random_set(std::size_t n, std::uint64_t denom, std::uint64_t seed)
{
    return generate({GeneratorKind::Random, n, denom, seed, {}});
}

// Small signed rational p/q with |p| <= bound, 1 <= q <= bound.
inline Scalar random_scalar(SplitMix64& rng, long bound)
{
    const long p = static_cast<long>(rng.below(2 * bound + 1)) - bound;
    const long q = static_cast<long>(rng.below(bound)) + 1;
    return make_scalar(p, q);
}

inline Point2 random_point(SplitMix64& rng, long bound = 9)
{
    return {random_scalar(rng, bound), random_scalar(rng, bound)};
}

// The test sets shared by the property suites: named shapes plus seeded randoms.
struct NamedSet {
    std::string name;
    PointSet points;
};

inline std::vector<NamedSet> small_sets(std::size_t max_n, std::size_t random_count = 6)
{
    std::vector<NamedSet> out;
    auto keep = [&](std::string name, PointSet p) {
        if (p.size() <= max_n)
            out.push_back({std::move(name), std::move(p)});
    };
    keep("triangle", pts("1 0\n0 1\n1 1"));
    keep("basis", pts("1 0\n0 1"));
    for (std::size_t n = 2; n <= 3; ++n)
        keep("grid" + std::to_string(n), grid(n));
    for (std::size_t k = 3; k <= 6; ++k)
        keep("circle" + std::to_string(k), generate({GeneratorKind::Circle, k, 0, std::nullopt, {}}));
    for (std::size_t k = 3; k <= 6; ++k)
        keep("collinear" + std::to_string(k), generate({GeneratorKind::Collinear, k, 0, std::nullopt, {}}));
    for (std::size_t s = 0; s < random_count; ++s)
        keep("random" + std::to_string(s), random_set(4 + s % (max_n >= 8 ? 5 : 3), 4, 1000 + s));
    return out;
}

} // namespace wlt
