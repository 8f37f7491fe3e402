#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wedgelab {

// Exact rational. gmpxx keeps every value in lowest terms with a positive
// denominator as long as values are built through arithmetic or make_scalar().
using Scalar = mpq_class;
using Integer = mpz_class;

Scalar make_scalar(const Integer& num, const Integer& den);

// Accepts `p` or `p/q` with an optional leading sign on p; q must be positive.
Scalar parse_scalar(std::string_view text);

// Canonical `p` or `p/q` rendering.
std::string to_string(const Scalar& s);

// 12 significant digits, %g style.
std::string to_decimal(const Scalar& s);
std::string to_decimal(long double v);

inline int sign(const Scalar& s) { return sgn(s); }

} // namespace wedgelab
