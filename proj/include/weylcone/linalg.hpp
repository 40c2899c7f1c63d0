#pragma once

#include <cstddef>
#include <stdexcept>

#include "weylcone/rational.hpp"

namespace weylcone {

/// Dense exact linear algebra on small matrices. Everything here is plain
/// Gaussian elimination over the rationals; sizes never exceed a few dozen.

inline RatMat rat_identity(std::size_t n)
{
    RatMat id(n, RatVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

/// Rank by fraction-full Gaussian elimination. The input is copied.
inline int rat_rank(RatMat a)
{
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] / a[row][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
        }
        ++row;
    }
    return static_cast<int>(row);
}

inline int int_rank(const IntMat& a)
{
    RatMat m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = to_rat(a[i]);
    return rat_rank(std::move(m));
}

/// Exact inverse via Gauss-Jordan; throws on a singular input.
inline RatMat rat_inverse(RatMat a)
{
    const std::size_t n = a.size();
    RatMat inv = rat_identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("rat_inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

inline RatVec mat_vec(const RatMat& m, const RatVec& v)
{
    RatVec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

/// C * v for an integer matrix and integer vector.
inline IntVec int_mat_vec(const IntMat& m, const IntVec& v)
{
    IntVec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

} // namespace weylcone
