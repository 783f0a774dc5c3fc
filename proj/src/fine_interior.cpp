#include "latpic/fine_interior.hpp"

#include "latpic/lattice.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace latpic {

namespace {

long long ll_abs(long long v) { return v < 0 ? -v : v; }

int affine_dim_int(const std::vector<LatticeVector>& pts) {
    if (pts.empty()) return -1;
    if (pts.size() == 1) return 0;
    IntegerMatrix m(pts.size() - 1, 3);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        auto d = pts[i] - pts[0];
        m.at(i - 1, 0) = d.x;
        m.at(i - 1, 1) = d.y;
        m.at(i - 1, 2) = d.z;
    }
    return static_cast<int>(rank(m));
}

// Half-space with an integer bound. Every constraint the fine-interior walk
// touches has one (facet supports and ord values are dot products of integer
// vectors), which is what keeps the vertex arithmetic below all-integral.
struct Plane {
    LatticeVector normal;
    Int bound;
};

// A rational point as integer numerators over one positive denominator, in
// lowest joint terms (so equality of values is equality of fields). Region
// vertices are kept in this form: the H-rep walk (Cramer solves, containment
// filters, tightness tests) then runs on plain integers the size of a single
// solve, where cpp_rational would gcd-normalize after every operation.
struct QVertex {
    std::array<Int, 3> num;
    Int den = 1;

    friend bool operator==(const QVertex&, const QVertex&) = default;
};

Int idot(const LatticeVector& n, const QVertex& v) {
    return n.x * v.num[0] + n.y * v.num[1] + n.z * v.num[2];
}

bool satisfies(const Plane& h, const QVertex& v) { return idot(h.normal, v) >= h.bound * v.den; }

bool tight_at(const Plane& h, const QVertex& v) { return idot(h.normal, v) == h.bound * v.den; }

// Coordinatewise comparison of the underlying rational points; agrees with
// lex_less on RationalVector, which fixes the deterministic output order.
bool lex_less(const QVertex& a, const QVertex& b) {
    for (int t = 0; t < 3; ++t) {
        Int l = a.num[t] * b.den, r = b.num[t] * a.den;
        if (l != r) return l < r;
    }
    return false;
}

RationalVector to_rational(const QVertex& v) {
    return RationalVector{Rat(v.num[0]) / Rat(v.den), Rat(v.num[1]) / Rat(v.den),
                          Rat(v.num[2]) / Rat(v.den)};
}

int affine_dim_qverts(const std::vector<QVertex>& pts) {
    if (pts.empty()) return -1;
    if (pts.size() == 1) return 0;
    IntegerMatrix m(pts.size() - 1, 3);
    for (std::size_t i = 1; i < pts.size(); ++i)
        // Scaled difference den_0*den_i*(p_i - p_0); row scaling keeps the rank.
        for (int t = 0; t < 3; ++t)
            m.at(i - 1, t) = pts[i].num[t] * pts[0].den - pts[0].num[t] * pts[i].den;
    return static_cast<int>(rank(m));
}

// Cramer solve of three boundary planes, reduced to the canonical QVertex
// form. Empty when the planes have no unique common point.
std::optional<QVertex> plane_triple_point(const Plane& a, const Plane& b, const Plane& c) {
    auto bc = cross(b.normal, c.normal), ca = cross(c.normal, a.normal),
         ab = cross(a.normal, b.normal);
    Int d3 = dot(a.normal, bc);
    if (d3 == 0) return std::nullopt;
    QVertex v;
    v.den = d3;
    for (int t = 0; t < 3; ++t) v.num[t] = a.bound * bc[t] + b.bound * ca[t] + c.bound * ab[t];
    if (v.den < 0) {
        v.den = -v.den;
        for (auto& n : v.num) n = -n;
    }
    Int g = gcd(gcd(abs(v.num[0]), abs(v.num[1])), gcd(abs(v.num[2]), v.den));
    if (g > 1) {
        v.den /= g;
        for (auto& n : v.num) n /= g;
    }
    return v;
}

// Vertex set of the intersection of the given half-spaces, sorted in the
// deterministic lexicographic order. Throws std::invalid_argument when the
// intersection is unbounded.
std::vector<QVertex> qverts_of_planes(const std::vector<Plane>& planes) {
    const std::size_t n = planes.size();

    // Boundedness: the recession cone { d : <n_i,d> >= 0 for all i } must be
    // trivial. A nontrivial pointed cone has an extreme ray lying on two
    // independent boundary planes (a +-cross of two normals); a cone with a
    // line forces the normals' rank below 3.
    IntegerMatrix nm(n, 3);
    for (std::size_t i = 0; i < n; ++i) {
        nm.at(i, 0) = planes[i].normal.x;
        nm.at(i, 1) = planes[i].normal.y;
        nm.at(i, 2) = planes[i].normal.z;
    }
    if (rank(nm) < 3) throw std::invalid_argument("unbounded region");
    auto is_recession = [&](const LatticeVector& d) {
        if (is_zero(d)) return false;
        for (const auto& h : planes)
            if (dot(h.normal, d) < 0) return false;
        return true;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto d = cross(planes[i].normal, planes[j].normal);
            if (is_recession(d) || is_recession(-d)) throw std::invalid_argument("unbounded region");
        }

    // Solve every invertible triple of boundary planes by Cramer's rule.
    std::vector<QVertex> out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                auto p = plane_triple_point(planes[a], planes[b], planes[c]);
                if (!p) continue;
                bool inside = true;
                for (const auto& h : planes)
                    if (!satisfies(h, *p)) {
                        inside = false;
                        break;
                    }
                if (inside) out.push_back(*p);
            }
    std::sort(out.begin(), out.end(),
              [](const QVertex& x, const QVertex& y) { return lex_less(x, y); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Working description of the current region: half-space list plus its exact
// vertex set, all in integer form (see QVertex).
struct RegionState {
    std::vector<Plane> active;
    std::vector<QVertex> verts;

    void guard_nonempty() const {
        if (verts.empty())
            throw std::logic_error("fine-interior region lost its interior lattice points");
    }

    void refresh() {
        verts = qverts_of_planes(active);
        guard_nonempty();
    }

    // Intersect the (bounded, vertex-tracked) region with one more half-space.
    // Surviving vertices carry over; every new vertex lies on the new boundary
    // plane together with two independent active planes, so solving those
    // triples and filtering suffices. Much cheaper than re-solving all triples.
    void cut_with(const Plane& h) {
        std::vector<QVertex> next;
        for (const auto& v : verts)
            if (satisfies(h, v)) next.push_back(v);
        const std::size_t n = active.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                auto p = plane_triple_point(h, active[i], active[j]);
                if (!p) continue;
                bool inside = true;
                for (const auto& g : active)
                    if (!satisfies(g, *p)) {
                        inside = false;
                        break;
                    }
                if (inside) next.push_back(*p);
            }
        std::sort(next.begin(), next.end(),
                  [](const QVertex& x, const QVertex& y) { return lex_less(x, y); });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        active.push_back(h);
        verts = std::move(next);
        guard_nonempty();
    }

    // Affine dimension of the tight vertex set of h, early-exiting once it
    // reaches `want` (enough for the pruning decisions below).
    bool tight_dim_at_least(const Plane& h, int want) const {
        const QVertex* v0 = nullptr;
        std::array<Int, 3> d1{};
        bool have_d1 = false;
        for (const auto& v : verts) {
            if (!tight_at(h, v)) continue;
            if (!v0) {
                v0 = &v;
                if (want <= 0) return true;
                continue;
            }
            std::array<Int, 3> d;
            for (int t = 0; t < 3; ++t) d[t] = v.num[t] * v0->den - v0->num[t] * v.den;
            if (!have_d1) { // vertices are distinct, so d is nonzero
                d1 = d;
                have_d1 = true;
                if (want <= 1) return true;
                continue;
            }
            if (d1[1] * d[2] != d1[2] * d[1] || d1[2] * d[0] != d1[0] * d[2] ||
                d1[0] * d[1] != d1[1] * d[0])
                return true; // two independent directions: dimension >= 2
        }
        return false;
    }

    // Drop appended half-spaces the remaining ones imply. For a full-dimensional
    // region only the facet-defining planes (tight on a two-dimensional vertex
    // set) are needed; for a polygon only planes tight on at least two vertices
    // (its edges plus the planes pinning its affine hull); for thinner regions
    // anything tight somewhere stays. A plane implied now stays implied, since
    // cuts only shrink the region, so pruning never changes later results. The
    // first keep_prefix entries (the facet-shifted ones, which guarantee
    // boundedness) stay.
    void prune_slack(std::size_t keep_prefix) {
        const int rdim = affine_dim_qverts(verts);
        const int want = rdim == 3 ? 2 : (rdim == 2 ? 1 : 0);
        for (std::size_t i = active.size(); i-- > keep_prefix;)
            if (!tight_dim_at_least(active[i], want))
                active.erase(active.begin() + static_cast<std::ptrdiff_t>(i));
    }
};

} // namespace

std::vector<LatticeVector> candidate_normals(const Simplex3&, long long bound) {
    if (bound < 1) throw std::invalid_argument("candidate-normal bound must be positive");
    std::vector<LatticeVector> out;
    for (long long x = -bound; x <= bound; ++x)
        for (long long y = -bound; y <= bound; ++y)
            for (long long z = -bound; z <= bound; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                if (std::gcd(std::gcd(ll_abs(x), ll_abs(y)), ll_abs(z)) != 1) continue;
                out.push_back(LatticeVector{Int(x), Int(y), Int(z)});
            }
    return out;
}

std::vector<RationalVector> vertices_of_hrep(const std::vector<HalfSpace>& halfspaces) {
    for (const auto& h : halfspaces)
        if (is_zero(h.normal)) throw std::invalid_argument("zero normal in half-space");

    // Clear each bound's denominator (scaling a constraint by a positive
    // integer changes nothing) and run the integer vertex enumeration.
    std::vector<Plane> planes;
    planes.reserve(halfspaces.size());
    for (const auto& h : halfspaces)
        planes.push_back(Plane{denominator(h.bound) * h.normal, numerator(h.bound)});

    std::vector<RationalVector> out;
    for (const auto& v : qverts_of_planes(planes)) out.push_back(to_rational(v));
    return out;
}

long long default_bound(const Simplex3& s) {
    auto interior = interior_lattice_points(s);
    LatticeVector c{0, 0, 0};
    if (!interior.empty()) c = interior.front();
    Int m = 0;
    for (const auto& v : s.v)
        for (int t = 0; t < 3; ++t) m = std::max(m, Int(abs(v[t] - c[t])));
    return to_int64(m + 2);
}

FineInteriorResult fine_interior(const Simplex3& s, std::optional<long long> bound) {
    FineInteriorResult r;
    auto interior = interior_lattice_points(s);
    r.dim_low = affine_dim_int(interior);

    const long long B = bound ? *bound : default_bound(s);
    if (B < 1) throw std::invalid_argument("fine-interior bound must be positive");
    r.bound_used = B;

    if (interior.empty()) { // nothing to certify; the criterion needs l* > 0 anyway
        r.dim_high = -1;
        r.stable = true;
        r.certified = true;
        return r;
    }

    std::array<Plane, 4> shifted;
    {
        auto facets = facet_halfspaces(s);
        for (int i = 0; i < 4; ++i) {
            if (denominator(facets[i].bound) != 1)
                throw std::logic_error("facet support of a lattice simplex must be integral");
            shifted[i] = Plane{facets[i].normal, numerator(facets[i].bound) + 1};
        }
    }
    RegionState st;
    st.active.assign(shifted.begin(), shifted.end());
    st.refresh();

    // One lexicographic pass over the candidate box, with running dot products
    // down each z-column. Adding a half-space only shrinks the region, so a
    // candidate that is redundant when visited stays redundant; a single pass
    // therefore intersects all candidate half-spaces up to the bound.
    const auto& V = s.v;
    auto scan = [&](long long lo, long long hi, bool mutate) -> bool {
        bool saw_cut = false, stop = false;
        for (long long x = -hi; x <= hi && !stop; ++x) {
            for (long long y = -hi; y <= hi && !stop; ++y) {
                std::array<Int, 4> sdots;
                std::vector<Int> vdots(st.verts.size());
                long long zc = -hi;
                for (int i = 0; i < 4; ++i)
                    sdots[i] = Int(x) * V[i].x + Int(y) * V[i].y + Int(zc) * V[i].z;
                for (std::size_t w = 0; w < st.verts.size(); ++w)
                    vdots[w] = Int(x) * st.verts[w].num[0] + Int(y) * st.verts[w].num[1] +
                               Int(zc) * st.verts[w].num[2];

                auto goto_z = [&](long long t) {
                    long long gap = t - zc;
                    if (gap == 0) return;
                    if (gap == 1) {
                        for (int i = 0; i < 4; ++i) sdots[i] += V[i].z;
                        for (std::size_t w = 0; w < vdots.size(); ++w) vdots[w] += st.verts[w].num[2];
                    } else {
                        Int g(gap);
                        for (int i = 0; i < 4; ++i) sdots[i] += g * V[i].z;
                        for (std::size_t w = 0; w < vdots.size(); ++w)
                            vdots[w] += g * st.verts[w].num[2];
                    }
                    zc = t;
                };

                auto visit = [&](long long z) -> bool {
                    goto_z(z);
                    long long mn = std::max({ll_abs(x), ll_abs(y), ll_abs(z)});
                    if (mn < lo || mn == 0) return true;
                    if (std::gcd(std::gcd(ll_abs(x), ll_abs(y)), ll_abs(z)) != 1) return true;
                    Int o = sdots[0];
                    for (int i = 1; i < 4; ++i)
                        if (sdots[i] < o) o = sdots[i];
                    const Int o1 = o + 1;
                    bool cuts = false;
                    for (std::size_t w = 0; w < vdots.size(); ++w)
                        if (vdots[w] < o1 * st.verts[w].den) {
                            cuts = true;
                            break;
                        }
                    if (!cuts) return true;
                    saw_cut = true;
                    if (!mutate) return false;
                    st.cut_with(Plane{LatticeVector{Int(x), Int(y), Int(z)}, o1});
                    st.prune_slack(4);
                    vdots.resize(st.verts.size());
                    for (std::size_t w = 0; w < st.verts.size(); ++w)
                        vdots[w] = Int(x) * st.verts[w].num[0] + Int(y) * st.verts[w].num[1] +
                                   Int(zc) * st.verts[w].num[2];
                    return true;
                };

                const long long mxy = std::max(ll_abs(x), ll_abs(y));
                if (mxy >= lo) {
                    for (long long z = -hi; z <= hi; ++z)
                        if (!visit(z)) {
                            stop = true;
                            break;
                        }
                } else {
                    // Only |z| >= lo can reach the norm window; skip the middle.
                    for (long long z = -hi; z <= -lo; ++z)
                        if (!visit(z)) {
                            stop = true;
                            break;
                        }
                    for (long long z = lo; z <= hi && !stop; ++z)
                        if (!visit(z)) {
                            stop = true;
                            break;
                        }
                }
            }
        }
        return saw_cut;
    };

    // Norm shells from small to large: short normals do most of the shaping,
    // so later candidates rarely cut and the per-cut vertex updates stay rare.
    // Processing order cannot change the result, since a candidate redundant
    // against a larger region stays redundant against every later (smaller)
    // one.
    for (long long sh = 1; sh <= B; ++sh) scan(sh, sh, true);

    // With the default bound, keep walking shells until one is quiet, so the
    // certificate does not hinge on the start heuristic; the cap keeps
    // degenerate inputs from running away. An explicit bound is honored
    // exactly and only probed.
    bool escalated_stable = false;
    if (!bound) {
        const long long cap = 4 * B + 40;
        long long effective = B;
        while (effective < cap) {
            if (!scan(effective + 1, effective + 1, true)) {
                escalated_stable = true;
                break;
            }
            ++effective;
        }
        r.bound_used = effective;
    }

    // Irredundancy: drop a half-space when removing it leaves the vertex set
    // unchanged.
    const int region_dim = affine_dim_qverts(st.verts);
    if (region_dim == 3) {
        // A full-dimensional polytope is the intersection of its facet
        // half-spaces, so removal changes the vertex set exactly for the
        // half-spaces tight on a two-dimensional set of vertices.
        std::vector<Plane> kept;
        for (const auto& h : st.active)
            if (st.tight_dim_at_least(h, 2)) kept.push_back(h);
        st.active = std::move(kept);
    } else {
        // Degenerate region: apply the defining test in insertion order
        // (removal may also unbound the normal set, which counts as a change).
        for (std::size_t i = 0; i < st.active.size();) {
            std::vector<Plane> rest;
            rest.reserve(st.active.size() - 1);
            for (std::size_t j = 0; j < st.active.size(); ++j)
                if (j != i) rest.push_back(st.active[j]);
            bool same = false;
            try {
                same = qverts_of_planes(rest) == st.verts;
            } catch (const std::invalid_argument&) {
                same = false;
            }
            if (same)
                st.active.erase(st.active.begin() + static_cast<std::ptrdiff_t>(i));
            else
                ++i;
        }
    }

    // Exact sandwich check, both inclusions, on every run.
    for (const auto& p : interior)
        for (const auto& h : st.active)
            if (dot(h.normal, p) < h.bound)
                throw std::logic_error(
                    "fine-interior sandwich violated: interior lattice point escapes the region");
    for (const auto& w : st.verts)
        for (const auto& h : shifted)
            if (!satisfies(h, w))
                throw std::logic_error(
                    "fine-interior sandwich violated: region exceeds the facet shrink");

    r.dim_high = region_dim;
    r.stable = bound ? !scan(B + 1, B + 1, false) : escalated_stable;
    r.certified = (r.dim_low == r.dim_high) && r.stable;
    r.halfspaces.reserve(st.active.size());
    for (const auto& h : st.active) r.halfspaces.push_back(HalfSpace{h.normal, Rat(h.bound)});
    r.vertices.reserve(st.verts.size());
    for (const auto& v : st.verts) r.vertices.push_back(to_rational(v));
    return r;
}

DimCertificate dim_certificate(const FineInteriorResult& r) {
    DimCertificate c;
    c.lo = r.dim_low;
    c.hi = r.dim_high;
    c.is_certified = r.certified;
    if (c.is_certified) c.dim = r.dim_low;
    return c;
}

std::string to_string(const DimCertificate& c) {
    if (c.is_certified) return "Certified(" + std::to_string(c.dim) + ")";
    return "Uncertain(" + std::to_string(c.lo) + "," + std::to_string(c.hi) + ")";
}

} // namespace latpic
