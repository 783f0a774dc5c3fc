#pragma once

// Brute-force reference implementations kept deliberately independent of the
// library: membership in a simplex is decided by solving the barycentric
// system with dense rational elimination, points are found by scanning the
// full Z^3 bounding box, and determinants use cofactor expansion. Slow and
// obviously correct; used to freeze expected values.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <optional>
#include <vector>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Point = std::vector<Int>; // length 3

// Barycentric coordinates of p with respect to verts (affinely independent),
// or nullopt when p is outside the affine hull.
inline std::optional<std::vector<Rat>> barycentric(const std::vector<Point>& verts,
                                                   const std::vector<Rat>& p) {
    const std::size_t k = verts.size();
    std::vector<std::vector<Rat>> m(4, std::vector<Rat>(k + 1));
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t t = 0; t < 3; ++t) m[t][j] = Rat(verts[j][t]);
        m[3][j] = 1;
    }
    for (std::size_t t = 0; t < 3; ++t) m[t][k] = p[t];
    m[3][k] = 1;

    std::vector<std::size_t> pivot(k, static_cast<std::size_t>(-1));
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < 4; ++col) {
        std::size_t pr = row;
        while (pr < 4 && m[pr][col] == 0) ++pr;
        if (pr == 4) continue;
        std::swap(m[pr], m[row]);
        for (std::size_t i = 0; i < 4; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col] / m[row][col];
            for (std::size_t j = col; j <= k; ++j) m[i][j] -= f * m[row][j];
        }
        pivot[col] = row;
        ++row;
    }
    for (std::size_t i = row; i < 4; ++i)
        if (m[i][k] != 0) return std::nullopt;
    std::vector<Rat> lambda(k);
    for (std::size_t col = 0; col < k; ++col) {
        if (pivot[col] == static_cast<std::size_t>(-1)) return std::nullopt; // degenerate input
        lambda[col] = m[pivot[col]][k] / m[pivot[col]][col];
    }
    return lambda;
}

// All lattice points of conv(verts) (strict: relative interior only), found by
// scanning the integer bounding box in Z^3, lexicographically sorted.
inline std::vector<Point> points(const std::vector<Point>& verts, bool strict) {
    Int lo[3], hi[3];
    for (std::size_t t = 0; t < 3; ++t) {
        lo[t] = verts[0][t];
        hi[t] = verts[0][t];
        for (const auto& v : verts) {
            lo[t] = std::min(lo[t], v[t]);
            hi[t] = std::max(hi[t], v[t]);
        }
    }
    std::vector<Point> out;
    for (Int x = lo[0]; x <= hi[0]; ++x)
        for (Int y = lo[1]; y <= hi[1]; ++y)
            for (Int z = lo[2]; z <= hi[2]; ++z) {
                auto lam = barycentric(verts, {Rat(x), Rat(y), Rat(z)});
                if (!lam) continue;
                bool ok = true;
                for (const auto& l : *lam)
                    if (strict ? l <= 0 : l < 0) {
                        ok = false;
                        break;
                    }
                if (ok) out.push_back({x, y, z});
            }
    return out; // scan order is already lexicographic
}

inline Int count(const std::vector<Point>& verts, bool strict) {
    return Int(points(verts, strict).size());
}

// Cofactor-expansion determinant, n <= 4.
inline Int det(const std::vector<std::vector<Int>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Int>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Int> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        Int term = m[0][j] * det(minor);
        acc += (j % 2 == 0) ? term : Int(-term);
    }
    return acc;
}

} // namespace oracle
