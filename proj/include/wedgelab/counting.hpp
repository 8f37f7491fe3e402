#pragma once

#include "wedgelab/geometry.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace wedgelab {

// s -> n(s): how many ordered pairs (u, v) of the set have wedge(u, v) == s,
// for every s > 0. Entries are sorted by s.
struct WedgeHistogram {
    std::vector<std::pair<Scalar, std::uint64_t>> entries;
    std::uint64_t total = 0;
};

struct EnergyReport {
    std::uint64_t energy = 0;          // sum of n(s)^2
    std::uint64_t distinct_values = 0; // support size of n
    std::uint64_t total_pairs = 0;     // sum of n(s)
    std::optional<std::uint64_t> quadruples_restricted;
};

inline constexpr std::size_t kDefaultOracleCap = 12;

// Distinct nonzero |wedge|/2 over unordered pairs.
std::size_t distinct_areas(const PointSet& p, unsigned workers = 1);
std::size_t distinct_areas_bipartite(const PointSet& p, const PointSet& q, unsigned workers = 1);
// Distinct dot products over all ordered pairs, v == w included.
std::size_t distinct_dot_products(const PointSet& p, unsigned workers = 1);

WedgeHistogram wedge_histogram(const PointSet& p, unsigned workers = 1);
EnergyReport energy(const PointSet& p, unsigned workers = 1);

// O(N^4) enumeration of ordered quadruples with wedge(v1,v2) == wedge(v3,v4) > 0.
// The restricted count also requires (v1,v3) and (v2,v4) to be non-collinear,
// i.e. both transformation lines exist. Throws CapExceeded when |P| > cap.
std::uint64_t quadruple_count_naive(const PointSet& p, bool restricted,
                                    std::size_t cap = kDefaultOracleCap);

// distinct_values * energy >= total_pairs^2; vacuous when there are no pairs.
bool cauchy_schwarz_holds(const EnergyReport& r);

} // namespace wedgelab
