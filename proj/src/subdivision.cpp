#include "latpic/subdivision.hpp"

#include <algorithm>
#include <stdexcept>

namespace latpic {

namespace {

std::pair<int, int> complementary_pair(int i, int j) {
    std::array<int, 2> rest{};
    int t = 0;
    for (int k = 0; k < 4; ++k)
        if (k != i && k != j) rest[static_cast<std::size_t>(t++)] = k;
    return {rest[0], rest[1]};
}

bool on_segment(const LatticeVector& w, const LatticeVector& u, const LatticeVector& v) {
    auto d = v - u, e = w - u;
    if (!is_zero(cross(d, e))) return false;
    Int t = dot(e, d);
    return t >= 0 && t <= dot(d, d);
}

} // namespace

std::vector<LatticeVector> edge_interior_points(const Simplex3& s, const Face& e) {
    if (e.indices.size() != 2) throw std::invalid_argument("face is not an edge");
    const auto& u = s.v[static_cast<std::size_t>(e.indices[0])];
    const auto& v = s.v[static_cast<std::size_t>(e.indices[1])];
    auto [prim, content] = gcd_reduce(v - u);
    std::vector<LatticeVector> out;
    for (Int k = 1; k < content; ++k) out.push_back(u + k * prim);
    return out;
}

EdgeSubdivision subdivide_along_edge(const Simplex3& s, const Face& e) {
    auto pts = edge_interior_points(s, e);
    if (pts.empty()) throw std::invalid_argument("edge has no interior lattice points");

    auto [oi, oj] = complementary_pair(e.indices[0], e.indices[1]);
    EdgeSubdivision sub{s, e, make_face(s, {oi, oj}), {}, {}};
    const auto& c = s.v[static_cast<std::size_t>(oi)];
    const auto& d = s.v[static_cast<std::size_t>(oj)];

    std::vector<LatticeVector> q;
    q.push_back(s.v[static_cast<std::size_t>(e.indices[0])]);
    q.insert(q.end(), pts.begin(), pts.end());
    q.push_back(s.v[static_cast<std::size_t>(e.indices[1])]);

    for (std::size_t i = 1; i < q.size(); ++i)
        sub.pieces.push_back(make_general_simplex({q[i - 1], q[i], c, d}));
    for (const auto& p : pts) sub.cuts.push_back(make_general_simplex({p, c, d}));
    return sub;
}

IdentityCheck identity_check(const EdgeSubdivision& sub) {
    IdentityCheck r{l_star(sub.parent), 0, 0, false};
    for (const auto& p : sub.pieces) r.pieces_sum += l_star(p);
    for (const auto& c : sub.cuts) r.cuts_sum += l_star(c);
    r.holds = (r.lhs == r.pieces_sum + r.cuts_sum);
    return r;
}

std::vector<AdmissibilityViolation> validate_admissibility(const EdgeSubdivision& sub) {
    auto interior = interior_lattice_points(sub.parent);
    if (interior.empty()) return {};
    auto facets = facet_halfspaces(sub.parent);

    auto in_parent_boundary = [&](const LatticeVector& u, const LatticeVector& v) {
        for (const auto& h : facets)
            if (dot(h.normal, to_rational(u)) == h.bound && dot(h.normal, to_rational(v)) == h.bound)
                return true;
        return false;
    };

    std::vector<AdmissibilityViolation> out;
    auto consider = [&](const GeneralSimplex& g) {
        for (std::size_t i = 0; i < g.verts.size(); ++i)
            for (std::size_t j = i + 1; j < g.verts.size(); ++j) {
                auto u = g.verts[i], v = g.verts[j];
                if (in_parent_boundary(u, v)) continue;
                if (lex_less(v, u)) std::swap(u, v);
                for (const auto& w : interior)
                    if (on_segment(w, u, v)) out.push_back({w, {u, v}});
            }
    };
    for (const auto& p : sub.pieces) consider(p);
    for (const auto& c : sub.cuts) consider(c);

    auto less = [](const AdmissibilityViolation& a, const AdmissibilityViolation& b) {
        if (a.point != b.point) return lex_less(a.point, b.point);
        if (a.segment.first != b.segment.first) return lex_less(a.segment.first, b.segment.first);
        return lex_less(a.segment.second, b.segment.second);
    };
    std::sort(out.begin(), out.end(), less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EdgeSubdivision make_custom_subdivision(const Simplex3& parent, std::pair<int, int> edge,
                                        const std::vector<std::vector<LatticeVector>>& pieces,
                                        const std::vector<std::vector<LatticeVector>>& cuts) {
    Face e = make_face(parent, {edge.first, edge.second});
    auto [oi, oj] = complementary_pair(edge.first, edge.second);
    EdgeSubdivision sub{parent, e, make_face(parent, {oi, oj}), {}, {}};
    for (const auto& vs : pieces) {
        if (vs.size() != 4) throw std::invalid_argument("subdivision piece must have 4 vertices");
        sub.pieces.push_back(make_general_simplex(vs));
    }
    for (const auto& vs : cuts) {
        if (vs.size() != 3) throw std::invalid_argument("subdivision cut must have 3 vertices");
        sub.cuts.push_back(make_general_simplex(vs));
    }
    return sub;
}

SubdivisionValidation validate_subdivision(const EdgeSubdivision& sub) {
    SubdivisionValidation v{};

    Int total = 0;
    bool dims_ok = !sub.pieces.empty();
    for (const auto& p : sub.pieces) {
        if (p.dim != 3) {
            dims_ok = false;
            break;
        }
        total += normalized_volume(p);
    }
    v.volume_ok = dims_ok && total == normalized_volume(sub.parent);

    v.structure_ok = sub.pieces.size() == sub.cuts.size() + 1;
    auto has_vertex = [](const GeneralSimplex& g, const LatticeVector& p) {
        return std::find(g.verts.begin(), g.verts.end(), p) != g.verts.end();
    };
    for (std::size_t i = 0; i < sub.cuts.size() && v.structure_ok; ++i) {
        if (sub.cuts[i].dim != 2) {
            v.structure_ok = false;
            break;
        }
        for (const auto& p : sub.cuts[i].verts)
            if (!has_vertex(sub.pieces[i], p) || !has_vertex(sub.pieces[i + 1], p)) {
                v.structure_ok = false;
                break;
            }
    }

    v.violations = validate_admissibility(sub);
    v.identity = identity_check(sub);
    v.ok = v.volume_ok && v.structure_ok && v.violations.empty() && v.identity.holds;
    return v;
}

} // namespace latpic
