#include "latpic/fwps.hpp"

#include "latpic/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace latpic {

std::array<LatticeVector, 4> normal_fan_rays(const Simplex3& s) {
    std::array<LatticeVector, 4> rays;
    auto facets = facet_halfspaces(s);
    for (int i = 0; i < 4; ++i) rays[static_cast<std::size_t>(i)] = facets[i].normal;
    return rays;
}

WeightSystem weights_from_simplex(const Simplex3& s) {
    const auto rays = normal_fan_rays(s);
    IntegerMatrix m(3, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t r = 0; r < 3; ++r) m.at(r, i) = rays[i][static_cast<int>(r)];

    const auto kernel = integer_kernel(m);
    if (kernel.size() != 1)
        throw std::logic_error("normal-fan rays do not admit a unique weight relation");
    std::array<Int, 4> q;
    std::copy(kernel[0].begin(), kernel[0].end(), q.begin());
    if (q[0] < 0 || (q[0] == 0 && (q[1] < 0 || (q[1] == 0 && (q[2] < 0 || (q[2] == 0 && q[3] < 0))))))
        for (auto& e : q) e = -e;
    for (const auto& e : q)
        if (e <= 0) throw std::logic_error("weight relation is not positive");

    for (int r = 0; r < 3; ++r) {
        Int sum = 0;
        for (std::size_t i = 0; i < 4; ++i) sum += q[i] * rays[i][r];
        if (sum != 0) throw std::logic_error("weight relation failed re-verification");
    }

    WeightSystem w;
    w.weights = q;
    std::sort(w.weights.begin(), w.weights.end());
    auto index = lattice_index(std::vector<LatticeVector>(rays.begin(), rays.end()));
    if (!index) throw std::logic_error("normal-fan rays do not span the lattice");
    w.multiplicity = *index;
    w.well_formed = is_well_formed(w.weights);
    return w;
}

Simplex3 simplex_from_weights(const std::array<Int, 4>& q, const Int& degree) {
    Int g = 0;
    for (const auto& e : q) {
        if (e <= 0) throw std::invalid_argument("weights must be positive");
        g = gcd(g, e);
    }
    if (g != 1) throw std::invalid_argument("weights must be coprime overall");
    if (degree <= 0) throw std::invalid_argument("degree must be positive");
    for (const auto& e : q)
        if (degree % e != 0)
            throw std::invalid_argument("rational vertex; not a lattice simplex for this degree");

    std::vector<std::vector<Int>> pts(4, std::vector<Int>(4, 0));
    for (std::size_t i = 0; i < 4; ++i) pts[i][i] = degree / q[i];
    const auto basis = affine_lattice_basis_nd(pts);
    if (basis.basis.size() != 3)
        throw std::logic_error("weight-system vertices do not span a 3-dimensional lattice");
    std::array<LatticeVector, 4> verts;
    for (std::size_t i = 0; i < 4; ++i)
        verts[i] = LatticeVector{basis.coords[i][0], basis.coords[i][1], basis.coords[i][2]};
    return make_simplex3(verts);
}

Simplex3 simplex_from_weights(const std::array<Int, 4>& q) {
    Int d = 0;
    for (const auto& e : q) d += e;
    return simplex_from_weights(q, d);
}

bool is_well_formed(const std::array<Int, 4>& q) {
    for (std::size_t skip = 0; skip < 4; ++skip) {
        Int g = 0;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != skip) g = gcd(g, q[i]);
        if (g != 1) return false;
    }
    return true;
}

} // namespace latpic
