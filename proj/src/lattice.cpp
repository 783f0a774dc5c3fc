#include "latpic/lattice.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace latpic {

long long to_int64(const Int& a) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (a < lo || a > hi) throw std::overflow_error("integer too large for 64-bit serialization");
    return a.convert_to<long long>();
}

std::string to_string(const Int& a) { return a.str(); }
std::string to_string(const Rat& a) { return a.str(); }

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}
LatticeVector operator-(const LatticeVector& a) { return {-a.x, -a.y, -a.z}; }
LatticeVector operator*(const Int& s, const LatticeVector& a) {
    return {s * a.x, s * a.y, s * a.z};
}
Int dot(const LatticeVector& a, const LatticeVector& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}
LatticeVector cross(const LatticeVector& a, const LatticeVector& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
bool is_zero(const LatticeVector& a) { return a.x == 0 && a.y == 0 && a.z == 0; }
bool lex_less(const LatticeVector& a, const LatticeVector& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}
Rat dot(const LatticeVector& n, const RationalVector& p) {
    return Rat(n.x) * p.x + Rat(n.y) * p.y + Rat(n.z) * p.z;
}
bool lex_less(const RationalVector& a, const RationalVector& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}
RationalVector to_rational(const LatticeVector& a) { return {Rat(a.x), Rat(a.y), Rat(a.z)}; }

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("multiply: shape mismatch");
    IntegerMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

Int det(const IntegerMatrix& m_in) {
    if (m_in.rows != m_in.cols) throw std::invalid_argument("det: matrix not square");
    const std::size_t n = m_in.rows;
    if (n == 0) return 1;
    IntegerMatrix m = m_in;
    Int sign = 1, prev = 1;
    // Bareiss fraction-free elimination: every division below is exact.
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && m.at(s, k) == 0) ++s;
            if (s == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(s, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

std::pair<LatticeVector, Int> gcd_reduce(const LatticeVector& v) {
    if (is_zero(v)) throw std::invalid_argument("zero vector has no primitive part");
    Int g = gcd(gcd(abs(v.x), abs(v.y)), abs(v.z));
    return {{v.x / g, v.y / g, v.z / g}, g};
}

namespace {

struct SmithWorkspace {
    IntegerMatrix& d;
    IntegerMatrix& u;
    IntegerMatrix& v;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
        for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
        for (std::size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void add_row(std::size_t dst, std::size_t src, const Int& k) {
        for (std::size_t c = 0; c < d.cols; ++c) d.at(dst, c) += k * d.at(src, c);
        for (std::size_t c = 0; c < u.cols; ++c) u.at(dst, c) += k * u.at(src, c);
    }
    void add_col(std::size_t dst, std::size_t src, const Int& k) {
        for (std::size_t r = 0; r < d.rows; ++r) d.at(r, dst) += k * d.at(r, src);
        for (std::size_t r = 0; r < v.rows; ++r) v.at(r, dst) += k * v.at(r, src);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
        for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    }

    // Clears row/column t and enforces the divisibility chain at pivot t.
    // Returns false when the trailing submatrix is all zero.
    bool reduce_pivot(std::size_t t) {
        for (;;) {
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < d.rows; ++i)
                for (std::size_t j = t; j < d.cols; ++j)
                    if (d.at(i, j) != 0 &&
                        (!found || abs(d.at(i, j)) < abs(d.at(pi, pj)))) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
            if (!found) return false;
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows; ++i)
                if (d.at(i, t) != 0) {
                    Int q = d.at(i, t) / d.at(t, t);
                    add_row(i, t, -q);
                    if (d.at(i, t) != 0) clean = false;
                }
            for (std::size_t j = t + 1; j < d.cols; ++j)
                if (d.at(t, j) != 0) {
                    Int q = d.at(t, j) / d.at(t, t);
                    add_col(j, t, -q);
                    if (d.at(t, j) != 0) clean = false;
                }
            if (!clean) continue;

            bool divisible = true;
            for (std::size_t i = t + 1; i < d.rows && divisible; ++i)
                for (std::size_t j = t + 1; j < d.cols && divisible; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        add_row(t, i, 1);
                        divisible = false;
                    }
            if (divisible) return true;
        }
    }
};

} // namespace

SmithResult smith_normal_form(const IntegerMatrix& m) {
    SmithResult r{m, IntegerMatrix::identity(m.rows), IntegerMatrix::identity(m.cols)};
    SmithWorkspace w{r.d, r.u, r.v};
    const std::size_t n = std::min(m.rows, m.cols);
    for (std::size_t t = 0; t < n; ++t) {
        if (!w.reduce_pivot(t)) break;
        if (r.d.at(t, t) < 0) w.negate_row(t);
    }
    return r;
}

std::optional<Int> lattice_index(const std::vector<LatticeVector>& generators) {
    IntegerMatrix m(generators.size(), 3);
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = generators[i][static_cast<int>(j)];
    auto s = smith_normal_form(m);
    Int index = 1;
    std::size_t nonzero = 0;
    const std::size_t n = std::min(m.rows, m.cols);
    for (std::size_t t = 0; t < n; ++t)
        if (s.d.at(t, t) != 0) {
            ++nonzero;
            index *= s.d.at(t, t);
        }
    if (nonzero < 3) return std::nullopt;
    return index;
}

std::size_t rank(IntegerMatrix m) {
    auto s = smith_normal_form(m);
    std::size_t r = 0;
    const std::size_t n = std::min(m.rows, m.cols);
    for (std::size_t t = 0; t < n; ++t)
        if (s.d.at(t, t) != 0) ++r;
    return r;
}

std::vector<std::vector<Int>> integer_kernel(const IntegerMatrix& m) {
    auto s = smith_normal_form(m);
    const std::size_t n = m.cols;
    const std::size_t nmin = std::min(m.rows, m.cols);
    std::vector<std::vector<Int>> kernel;
    for (std::size_t j = 0; j < n; ++j) {
        if (j < nmin && s.d.at(j, j) != 0) continue;
        std::vector<Int> column(n);
        for (std::size_t i = 0; i < n; ++i) column[i] = s.v.at(i, j);
        kernel.push_back(std::move(column));
    }
    return kernel;
}

namespace {

// Solve sum_j c_j * basis[j] = w exactly; the basis is saturated, so the
// coordinates of any lattice point in its span are integers.
std::vector<Int> coords_in_basis(const std::vector<std::vector<Int>>& basis,
                                 const std::vector<Int>& w) {
    const std::size_t n = w.size();
    const std::size_t r = basis.size();
    if (r == 0) {
        for (const auto& e : w)
            if (e != 0) throw std::logic_error("affine_lattice_basis: point outside span");
        return {};
    }
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(r + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < r; ++j) m[i][j] = Rat(basis[j][i]);
        m[i][r] = Rat(w[i]);
    }
    std::vector<std::size_t> pivot_row(r, static_cast<std::size_t>(-1));
    std::size_t row = 0;
    for (std::size_t col = 0; col < r && row < n; ++col) {
        std::size_t p = row;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(m[p], m[row]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col] / m[row][col];
            for (std::size_t j = col; j <= r; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_row[col] = row;
        ++row;
    }
    std::vector<Int> c(r);
    for (std::size_t col = 0; col < r; ++col) {
        if (pivot_row[col] == static_cast<std::size_t>(-1))
            throw std::logic_error("affine_lattice_basis: dependent basis");
        Rat value = m[pivot_row[col]][r] / m[pivot_row[col]][col];
        if (denominator(value) != 1)
            throw std::logic_error("affine_lattice_basis: non-integer coordinate");
        c[col] = numerator(value);
    }
    for (std::size_t i = row; i < n; ++i)
        if (m[i][r] != 0) throw std::logic_error("affine_lattice_basis: point outside affine hull");
    return c;
}

} // namespace

AffineBasisNd affine_lattice_basis_nd(const std::vector<std::vector<Int>>& points) {
    if (points.empty()) throw std::invalid_argument("affine_lattice_basis: no points");
    const std::size_t n = points[0].size();
    for (const auto& p : points)
        if (p.size() != n) throw std::invalid_argument("affine_lattice_basis: mixed dimensions");

    AffineBasisNd out;
    out.origin = points[0];

    IntegerMatrix diff(points.size() - 1, n);
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) diff.at(i, j) = points[i + 1][j] - out.origin[j];

    // Saturate: the lattice is the integer kernel of the integer kernel of the
    // difference matrix (rational span of the differences, intersected with Z^n).
    auto perp = integer_kernel(diff);
    IntegerMatrix a(perp.size(), n);
    for (std::size_t i = 0; i < perp.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = perp[i][j];
    out.basis = integer_kernel(a);

    out.coords.reserve(points.size());
    for (const auto& p : points) {
        std::vector<Int> w(n);
        for (std::size_t j = 0; j < n; ++j) w[j] = p[j] - out.origin[j];
        out.coords.push_back(coords_in_basis(out.basis, w));
    }
    return out;
}

AffineBasis affine_lattice_basis(const std::vector<LatticeVector>& points) {
    std::vector<std::vector<Int>> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.push_back({p.x, p.y, p.z});
    auto nd = affine_lattice_basis_nd(pts);
    AffineBasis out;
    out.origin = {nd.origin[0], nd.origin[1], nd.origin[2]};
    for (const auto& b : nd.basis) out.basis.push_back({b[0], b[1], b[2]});
    out.coords = std::move(nd.coords);
    return out;
}

} // namespace latpic
