#pragma once

#include "latpic/lattice.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace latpic {

// A 3-dimensional lattice simplex: four affinely independent vertices.
struct Simplex3 {
    std::array<LatticeVector, 4> v;

    friend bool operator==(const Simplex3&, const Simplex3&) = default;
};

// Throws std::invalid_argument when the vertices are affinely dependent.
Simplex3 make_simplex3(const std::array<LatticeVector, 4>& vertices);

// A face of a Simplex3 selected by vertex indices. Index order is meaningful
// for edges (it fixes the orientation used by subdivisions).
struct Face {
    Simplex3 parent;
    std::vector<int> indices;

    friend bool operator==(const Face&, const Face&) = default;
};

Face make_face(const Simplex3& parent, std::vector<int> indices);

// A d-dimensional lattice simplex in Z^3, d in {1,2,3}.
struct GeneralSimplex {
    std::vector<LatticeVector> verts;
    int dim = 0;

    friend bool operator==(const GeneralSimplex&, const GeneralSimplex&) = default;
};

GeneralSimplex make_general_simplex(std::vector<LatticeVector> vertices);
GeneralSimplex to_general(const Simplex3& s);
// The sub-simplex spanned by a face's vertices (face must have >= 2 vertices).
GeneralSimplex face_simplex(const Face& f);

// The six edges of a tetrahedron as index pairs, lexicographic.
const std::array<std::pair<int, int>, 6>& simplex_edges();

// Inward primitive facet half-spaces; facet i is opposite vertex i.
std::array<HalfSpace, 4> facet_halfspaces(const Simplex3& s);

// min over the simplex of <nu, .> (attained at a vertex).
Int ord(const Simplex3& s, const LatticeVector& nu);
Int ord(const GeneralSimplex& s, const LatticeVector& nu);

// All lattice points of the simplex, lexicographically sorted.
std::vector<LatticeVector> lattice_points(const GeneralSimplex& s);
std::vector<LatticeVector> lattice_points(const Simplex3& s);

// Lattice points in the relative interior, lexicographically sorted.
std::vector<LatticeVector> interior_lattice_points(const GeneralSimplex& s);
std::vector<LatticeVector> interior_lattice_points(const Simplex3& s);

// l*: the relative-interior lattice point count.
Int l_star(const GeneralSimplex& s);
Int l_star(const Simplex3& s);
Int l_star(const Face& f);

// Exact barycentric coordinates; nullopt when p is outside the affine hull.
std::optional<std::vector<Rat>> barycentric(const GeneralSimplex& s, const RationalVector& p);
std::optional<std::vector<Rat>> barycentric(const Simplex3& s, const RationalVector& p);

// |det| of the three edge vectors from vertex 0 (3! times Euclidean volume).
Int normalized_volume(const Simplex3& s);
// Same for a full-dimensional GeneralSimplex; throws std::invalid_argument
// when the simplex is not 3-dimensional.
Int normalized_volume(const GeneralSimplex& s);

// Membership helpers against a facet description.
bool satisfies(const HalfSpace& h, const RationalVector& p, bool strict);
bool contains_point(const std::array<HalfSpace, 4>& facets, const RationalVector& p, bool strict);

} // namespace latpic
