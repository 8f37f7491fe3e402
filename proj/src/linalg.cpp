#include "detail/linalg.hpp"

#include <algorithm>

namespace wedgelab::detail {

std::vector<std::size_t> rref(Matrix& m)
{
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[r], m[p]);
        const Scalar inv = 1 / m[r][c];
        for (std::size_t k = c; k < cols; ++k)
            m[r][k] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const Scalar f = m[i][c];
            for (std::size_t k = c; k < cols; ++k)
                m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Matrix m)
{
    return rref(m).size();
}

Scalar determinant(Matrix m)
{
    const std::size_t n = m.size();
    Scalar det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0)
                continue;
            const Scalar f = m[i][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k)
                m[i][k] -= f * m[c][k];
        }
    }
    return det;
}

std::vector<std::vector<Scalar>> nullspace(Matrix m, std::size_t cols)
{
    const auto pivots = rref(m);
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end())
            continue;
        std::vector<Scalar> v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace wedgelab::detail
