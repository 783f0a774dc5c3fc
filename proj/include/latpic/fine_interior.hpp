#pragma once

#include "latpic/simplex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latpic {

// All primitive integer vectors with max-norm <= bound (both signs kept),
// deduplicated, in lexicographic order.
std::vector<LatticeVector> candidate_normals(const Simplex3& s, long long bound);

// The shrunk region computed from a finite set of support directions:
// intersection over primitive nu with max-norm <= bound_used of
// { x : <nu,x> >= ord(s,nu) + 1 }, always including the simplex's own facet
// normals. The true shrunk region is sandwiched between conv(interior lattice
// points) and this computed one; when the dimension bounds meet and raising
// the bound by one changes nothing, the dimension is certified.
struct FineInteriorResult {
    std::vector<HalfSpace> halfspaces;    // irredundant description, in insertion order
    std::vector<RationalVector> vertices; // lex sorted
    int dim_low = -1;                     // affine dim of conv(interior lattice points)
    int dim_high = -1;                    // affine dim of the computed region
    bool stable = false;                  // vertex set unchanged at bound_used + 1
    bool certified = false;               // dim_low == dim_high && stable
    long long bound_used = 1;
};

// Computes the region above. Simplices without interior lattice points
// short-circuit to an empty result (dim -1) without enumerating normals.
// The default bound is default_bound(s).
FineInteriorResult fine_interior(const Simplex3& s,
                                 std::optional<long long> bound = std::nullopt);

// Exact vertex enumeration for a bounded intersection of half-spaces: solve
// every invertible triple of boundary planes, keep solutions satisfying all
// constraints, deduplicate, sort lexicographically. An empty region yields an
// empty list. Throws std::invalid_argument("unbounded region") when the
// normals' positive hull admits a recession ray.
std::vector<RationalVector> vertices_of_hrep(const std::vector<HalfSpace>& halfspaces);

// Dimension certificate: certified single value when the bounds meet and the
// result is stable, otherwise the honest interval.
struct DimCertificate {
    bool is_certified = false;
    int dim = -1; // meaningful when certified
    int lo = -1, hi = -1;

    friend bool operator==(const DimCertificate&, const DimCertificate&) = default;
};
DimCertificate dim_certificate(const FineInteriorResult& r);
std::string to_string(const DimCertificate& c); // "Certified(2)" / "Uncertain(2,3)"

// Heuristic search bound: 2 + the largest absolute vertex coordinate after
// translating the lexicographically smallest interior lattice point to the
// origin (without that recentering for simplices with no interior points).
long long default_bound(const Simplex3& s);

} // namespace latpic
