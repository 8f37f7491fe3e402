#pragma once

#include "wedgelab/scalar.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace wedgelab {

// Finite set of rationals, sorted and duplicate-free.
class RealSet {
public:
    RealSet() = default;
    // Throws InvalidArgument on repeated elements.
    explicit RealSet(std::vector<Scalar> elements);

    // {1, ..., n}
    static RealSet range(std::size_t n);

    std::span<const Scalar> elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const Scalar& operator[](std::size_t i) const { return elements_[i]; }

    friend bool operator==(const RealSet& a, const RealSet& b) { return a.elements_ == b.elements_; }

private:
    std::vector<Scalar> elements_;
};

enum class SumSign { Plus, Minus };

// |{p +- q : p, q in A.A}|
std::size_t product_sumset(const RealSet& a, SumSign sign);

// d -> r(d) = #{(a1,a2,a3,a4) in A^4 : a1*a2 - a3*a4 == d}, sorted by d.
struct RepHistogram {
    std::vector<std::pair<Scalar, std::uint64_t>> entries;
};

inline constexpr std::size_t kDefaultSumProductCap = 64;

RepHistogram rep_histogram(const RealSet& a, std::size_t cap = kDefaultSumProductCap);

// Solutions of a1a2 - a3a4 == a5a6 - a7a8 over A^8, as the sum of r(d)^2.
std::uint64_t dio_solution_count(const RealSet& a, std::size_t cap = kDefaultSumProductCap);

struct CsCertificate {
    std::size_t difference_set = 0; // |A.A - A.A|
    std::uint64_t dio_solutions = 0;
    Integer lhs;                    // difference_set * dio_solutions
    Integer rhs;                    // |A|^8
    long double ratio = 0;          // lhs / rhs
    long double dio_growth = 0;     // dio / (|A|^6 ln|A|), 0 when |A| < 2
    bool passed = false;
};

CsCertificate cs_certificate(const RealSet& a, std::size_t cap = kDefaultSumProductCap);

struct GridWedgeEquivalence {
    std::size_t wedge_values = 0;      // positive wedges over (A x A)^2
    std::size_t difference_values = 0; // positive a1a2 - a3a4
    bool equal = false;
};

GridWedgeEquivalence grid_wedge_equivalence(const RealSet& a, std::size_t cap = kDefaultSumProductCap);

} // namespace wedgelab
