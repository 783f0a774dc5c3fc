#pragma once

#include "latpic/simplex.hpp"

#include <utility>
#include <vector>

namespace latpic {

// A chain subdivision of a tetrahedron along one edge: the pieces are ordered
// from the edge's first endpoint to its second, with each consecutive pair
// separated by one cut triangle.
struct EdgeSubdivision {
    Simplex3 parent;
    Face edge;          // the subdivided edge e
    Face opposite_edge; // the complementary vertex pair e'
    std::vector<GeneralSimplex> pieces; // tetrahedra, cuts.size() + 1 of them
    std::vector<GeneralSimplex> cuts;   // triangles between consecutive pieces
};

// Lattice points strictly between the edge's endpoints, ordered from the
// first endpoint to the second.
std::vector<LatticeVector> edge_interior_points(const Simplex3& s, const Face& e);

// Maximal subdivision: cut at every interior lattice point of e through the
// opposite edge. Throws std::invalid_argument("edge has no interior lattice
// points") for a primitive edge.
EdgeSubdivision subdivide_along_edge(const Simplex3& s, const Face& e);

// Exact interior-point bookkeeping: the parent's count must decompose as the
// piece counts plus the cut counts.
struct IdentityCheck {
    Int lhs;        // l*(parent)
    Int pieces_sum; // sum of piece l*
    Int cuts_sum;   // sum of cut l*
    bool holds;     // lhs == pieces_sum + cuts_sum

    friend bool operator==(const IdentityCheck&, const IdentityCheck&) = default;
};
IdentityCheck identity_check(const EdgeSubdivision& sub);

// An interior lattice point of the parent sitting on a subdivision edge that
// does not lie in the parent's boundary.
struct AdmissibilityViolation {
    LatticeVector point;
    std::pair<LatticeVector, LatticeVector> segment;

    friend bool operator==(const AdmissibilityViolation&, const AdmissibilityViolation&) = default;
};
std::vector<AdmissibilityViolation> validate_admissibility(const EdgeSubdivision& sub);

// Entry point for user-supplied subdivision records (arbitrary simplicial
// pieces over a declared edge). Throws std::invalid_argument on malformed
// vertex lists (wrong count or affinely dependent).
EdgeSubdivision make_custom_subdivision(const Simplex3& parent, std::pair<int, int> edge,
                                        const std::vector<std::vector<LatticeVector>>& pieces,
                                        const std::vector<std::vector<LatticeVector>>& cuts);

// Full validation for subdivisions from any source. All layers are computed
// even when an earlier one fails, so reports stay complete.
struct SubdivisionValidation {
    bool volume_ok;     // piece volumes sum exactly to the parent volume
    bool structure_ok;  // chain shape: counts match and cuts join consecutive pieces
    std::vector<AdmissibilityViolation> violations;
    IdentityCheck identity;
    bool ok; // all of the above
};
SubdivisionValidation validate_subdivision(const EdgeSubdivision& sub);

} // namespace latpic
