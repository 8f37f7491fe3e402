#pragma once

#include "wedgelab/scalar.hpp"

#include <cstddef>
#include <vector>

namespace wedgelab::detail {

using Matrix = std::vector<std::vector<Scalar>>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

// Square matrices only.
Scalar determinant(Matrix m);

// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Scalar>> nullspace(Matrix m, std::size_t cols);

} // namespace wedgelab::detail
