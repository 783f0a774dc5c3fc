#include "latpic/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace latpic {

namespace {

IntegerMatrix difference_matrix(const std::vector<LatticeVector>& verts) {
    IntegerMatrix m(verts.size() - 1, 3);
    for (std::size_t i = 1; i < verts.size(); ++i)
        for (int j = 0; j < 3; ++j) m.at(i - 1, j) = verts[i][j] - verts[0][j];
    return m;
}

} // namespace

Simplex3 make_simplex3(const std::array<LatticeVector, 4>& vertices) {
    IntegerMatrix m(3, 3);
    for (int i = 1; i < 4; ++i)
        for (int j = 0; j < 3; ++j) m.at(i - 1, j) = vertices[i][j] - vertices[0][j];
    if (det(m) == 0)
        throw std::invalid_argument("degenerate simplex: vertices are affinely dependent");
    return Simplex3{vertices};
}

Face make_face(const Simplex3& parent, std::vector<int> indices) {
    if (indices.empty() || indices.size() > 4)
        throw std::invalid_argument("face needs 1 to 4 vertex indices");
    for (int i : indices)
        if (i < 0 || i > 3) throw std::invalid_argument("face index out of range");
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = a + 1; b < indices.size(); ++b)
            if (indices[a] == indices[b]) throw std::invalid_argument("face indices repeat");
    return Face{parent, std::move(indices)};
}

GeneralSimplex make_general_simplex(std::vector<LatticeVector> vertices) {
    if (vertices.size() < 2 || vertices.size() > 4)
        throw std::invalid_argument("simplex needs 2 to 4 vertices");
    const int d = static_cast<int>(vertices.size()) - 1;
    if (rank(difference_matrix(vertices)) != static_cast<std::size_t>(d))
        throw std::invalid_argument("degenerate simplex: vertices are affinely dependent");
    return GeneralSimplex{std::move(vertices), d};
}

GeneralSimplex to_general(const Simplex3& s) {
    return GeneralSimplex{{s.v[0], s.v[1], s.v[2], s.v[3]}, 3};
}

GeneralSimplex face_simplex(const Face& f) {
    if (f.indices.size() < 2)
        throw std::invalid_argument("face has no spanned simplex (single vertex)");
    std::vector<LatticeVector> verts;
    verts.reserve(f.indices.size());
    for (int i : f.indices) verts.push_back(f.parent.v[static_cast<std::size_t>(i)]);
    return make_general_simplex(std::move(verts));
}

const std::array<std::pair<int, int>, 6>& simplex_edges() {
    static const std::array<std::pair<int, int>, 6> edges = {
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    return edges;
}

std::array<HalfSpace, 4> facet_halfspaces(const Simplex3& s) {
    std::array<HalfSpace, 4> out;
    for (int i = 0; i < 4; ++i) {
        std::array<int, 3> rest{};
        int k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) rest[static_cast<std::size_t>(k++)] = j;
        const LatticeVector& a = s.v[static_cast<std::size_t>(rest[0])];
        const LatticeVector& b = s.v[static_cast<std::size_t>(rest[1])];
        const LatticeVector& c = s.v[static_cast<std::size_t>(rest[2])];
        LatticeVector n = cross(b - a, c - a);
        Int bound = dot(n, a);
        Int opposite = dot(n, s.v[static_cast<std::size_t>(i)]);
        if (opposite == bound)
            throw std::invalid_argument("degenerate simplex: vertices are affinely dependent");
        if (opposite < bound) {
            n = -n;
            bound = -bound;
        }
        auto [prim, content] = gcd_reduce(n);
        out[static_cast<std::size_t>(i)] = HalfSpace{prim, Rat(dot(prim, a))};
    }
    return out;
}

namespace {

Int ord_impl(const std::vector<LatticeVector>& verts, const LatticeVector& nu) {
    if (is_zero(nu)) throw std::invalid_argument("ord: zero functional");
    Int best = dot(nu, verts[0]);
    for (std::size_t i = 1; i < verts.size(); ++i) {
        Int d = dot(nu, verts[i]);
        if (d < best) best = d;
    }
    return best;
}

} // namespace

Int ord(const Simplex3& s, const LatticeVector& nu) {
    return ord_impl({s.v.begin(), s.v.end()}, nu);
}
Int ord(const GeneralSimplex& s, const LatticeVector& nu) { return ord_impl(s.verts, nu); }

namespace {

// Inward facet inequalities <n, p> >= b of a d-simplex given in its own
// integer coordinates (d = coords.size() - 1, each coordinate vector length d).
struct FacetIneq {
    std::vector<Int> n;
    Int b;
};

Int dotv(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<FacetIneq> simplex_inequalities(const std::vector<std::vector<Int>>& c) {
    const int d = static_cast<int>(c.size()) - 1;
    std::vector<FacetIneq> out;
    if (d == 1) {
        Int lo = std::min(c[0][0], c[1][0]);
        Int hi = std::max(c[0][0], c[1][0]);
        out.push_back({{Int(1)}, lo});
        out.push_back({{Int(-1)}, -hi});
        return out;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (j != i) rest.push_back(j);
        std::vector<Int> n;
        if (d == 2) {
            Int dx = c[rest[1]][0] - c[rest[0]][0];
            Int dy = c[rest[1]][1] - c[rest[0]][1];
            n = {-dy, dx};
        } else {
            std::vector<Int> u(3), w(3);
            for (int t = 0; t < 3; ++t) {
                u[static_cast<std::size_t>(t)] =
                    c[rest[1]][static_cast<std::size_t>(t)] - c[rest[0]][static_cast<std::size_t>(t)];
                w[static_cast<std::size_t>(t)] =
                    c[rest[2]][static_cast<std::size_t>(t)] - c[rest[0]][static_cast<std::size_t>(t)];
            }
            n = {u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
        }
        Int b = dotv(n, c[rest[0]]);
        Int opposite = dotv(n, c[i]);
        if (opposite == b)
            throw std::invalid_argument("degenerate simplex: vertices are affinely dependent");
        if (opposite < b) {
            for (auto& e : n) e = -e;
            b = -b;
        }
        out.push_back({std::move(n), std::move(b)});
    }
    return out;
}

// Visit every integer point of the simplex (strict = relative interior only).
// The innermost axis walks with running dot products; outer axes recompute.
template <typename Visit>
void scan_simplex(const std::vector<std::vector<Int>>& coords, bool strict, Visit&& visit) {
    const int d = static_cast<int>(coords.size()) - 1;
    auto qs = simplex_inequalities(coords);
    const std::size_t m = qs.size();
    std::vector<Int> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
        lo[static_cast<std::size_t>(a)] = coords[0][static_cast<std::size_t>(a)];
        hi[static_cast<std::size_t>(a)] = coords[0][static_cast<std::size_t>(a)];
        for (const auto& cv : coords) {
            lo[static_cast<std::size_t>(a)] = std::min(lo[static_cast<std::size_t>(a)], cv[static_cast<std::size_t>(a)]);
            hi[static_cast<std::size_t>(a)] = std::max(hi[static_cast<std::size_t>(a)], cv[static_cast<std::size_t>(a)]);
        }
    }
    std::vector<Int> dots(m);
    std::vector<Int> p(static_cast<std::size_t>(d));
    auto inner = [&](int last_axis) {
        for (std::size_t i = 0; i < m; ++i) {
            dots[i] = 0;
            for (int a = 0; a < d; ++a)
                if (a != last_axis) dots[i] += qs[i].n[static_cast<std::size_t>(a)] * p[static_cast<std::size_t>(a)];
            dots[i] += qs[i].n[static_cast<std::size_t>(last_axis)] * lo[static_cast<std::size_t>(last_axis)];
        }
        for (Int t = lo[static_cast<std::size_t>(last_axis)]; t <= hi[static_cast<std::size_t>(last_axis)]; ++t) {
            bool inside = true;
            for (std::size_t i = 0; i < m; ++i)
                if (strict ? dots[i] <= qs[i].b : dots[i] < qs[i].b) {
                    inside = false;
                    break;
                }
            if (inside) {
                p[static_cast<std::size_t>(last_axis)] = t;
                visit(p);
            }
            for (std::size_t i = 0; i < m; ++i) dots[i] += qs[i].n[static_cast<std::size_t>(last_axis)];
        }
    };
    if (d == 1) {
        inner(0);
    } else if (d == 2) {
        for (Int x = lo[0]; x <= hi[0]; ++x) {
            p[0] = x;
            inner(1);
        }
    } else {
        for (Int x = lo[0]; x <= hi[0]; ++x) {
            p[0] = x;
            for (Int y = lo[1]; y <= hi[1]; ++y) {
                p[1] = y;
                inner(2);
            }
        }
    }
}

struct ReducedSimplex {
    AffineBasisNd ab;
    int d;
};

ReducedSimplex reduce(const GeneralSimplex& g) {
    std::vector<std::vector<Int>> pts;
    pts.reserve(g.verts.size());
    for (const auto& v : g.verts) pts.push_back({v.x, v.y, v.z});
    return ReducedSimplex{affine_lattice_basis_nd(pts), g.dim};
}

LatticeVector to_ambient(const ReducedSimplex& r, const std::vector<Int>& c) {
    LatticeVector p{r.ab.origin[0], r.ab.origin[1], r.ab.origin[2]};
    for (std::size_t j = 0; j < r.ab.basis.size(); ++j)
        for (int t = 0; t < 3; ++t) p[t] += c[j] * r.ab.basis[j][static_cast<std::size_t>(t)];
    return p;
}

std::vector<LatticeVector> enumerate_impl(const GeneralSimplex& g, bool strict) {
    auto r = reduce(g);
    std::vector<LatticeVector> out;
    scan_simplex(r.ab.coords, strict, [&](const std::vector<Int>& c) { out.push_back(to_ambient(r, c)); });
    std::sort(out.begin(), out.end(), [](const LatticeVector& a, const LatticeVector& b) { return lex_less(a, b); });
    return out;
}

Int count_impl(const GeneralSimplex& g, bool strict) {
    auto r = reduce(g);
    Int n = 0;
    scan_simplex(r.ab.coords, strict, [&](const std::vector<Int>&) { ++n; });
    return n;
}

} // namespace

std::vector<LatticeVector> lattice_points(const GeneralSimplex& s) { return enumerate_impl(s, false); }
std::vector<LatticeVector> lattice_points(const Simplex3& s) { return enumerate_impl(to_general(s), false); }

std::vector<LatticeVector> interior_lattice_points(const GeneralSimplex& s) { return enumerate_impl(s, true); }
std::vector<LatticeVector> interior_lattice_points(const Simplex3& s) { return enumerate_impl(to_general(s), true); }

Int l_star(const GeneralSimplex& s) { return count_impl(s, true); }
Int l_star(const Simplex3& s) { return count_impl(to_general(s), true); }
Int l_star(const Face& f) {
    if (f.indices.size() == 1) return 1; // a vertex is its own relative interior
    return l_star(face_simplex(f));
}

std::optional<std::vector<Rat>> barycentric(const GeneralSimplex& s, const RationalVector& p) {
    const std::size_t k = s.verts.size();
    // Rows: three coordinate equations plus the affine constraint sum = 1.
    std::vector<std::vector<Rat>> m(4, std::vector<Rat>(k + 1));
    for (std::size_t j = 0; j < k; ++j) {
        for (int t = 0; t < 3; ++t) m[static_cast<std::size_t>(t)][j] = Rat(s.verts[j][t]);
        m[3][j] = 1;
    }
    for (int t = 0; t < 3; ++t) m[static_cast<std::size_t>(t)][k] = p[t];
    m[3][k] = 1;

    std::vector<std::size_t> pivot_row(k, static_cast<std::size_t>(-1));
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
        pivot_row[col] = row;
        ++row;
    }
    for (std::size_t i = row; i < 4; ++i)
        if (m[i][k] != 0) return std::nullopt; // p outside the affine hull
    std::vector<Rat> lambda(k);
    for (std::size_t col = 0; col < k; ++col) {
        if (pivot_row[col] == static_cast<std::size_t>(-1))
            throw std::logic_error("barycentric: dependent vertices");
        lambda[col] = m[pivot_row[col]][k] / m[pivot_row[col]][col];
    }
    return lambda;
}

std::optional<std::vector<Rat>> barycentric(const Simplex3& s, const RationalVector& p) {
    return barycentric(to_general(s), p);
}

Int normalized_volume(const Simplex3& s) {
    IntegerMatrix m(3, 3);
    for (int i = 1; i < 4; ++i)
        for (int j = 0; j < 3; ++j) m.at(i - 1, j) = s.v[static_cast<std::size_t>(i)][j] - s.v[0][j];
    Int d = det(m);
    return d < 0 ? Int(-d) : d;
}

Int normalized_volume(const GeneralSimplex& s) {
    if (s.dim != 3) throw std::invalid_argument("normalized volume needs a 3-dimensional simplex");
    return normalized_volume(Simplex3{{s.verts[0], s.verts[1], s.verts[2], s.verts[3]}});
}

bool satisfies(const HalfSpace& h, const RationalVector& p, bool strict) {
    Rat d = dot(h.normal, p);
    return strict ? d > h.bound : d >= h.bound;
}

bool contains_point(const std::array<HalfSpace, 4>& facets, const RationalVector& p, bool strict) {
    for (const auto& h : facets)
        if (!satisfies(h, p, strict)) return false;
    return true;
}

} // namespace latpic
