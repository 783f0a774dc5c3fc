#pragma once

#include "latpic/simplex.hpp"

#include <array>

namespace latpic {

// Weight data of the (possibly fake) weighted projective 3-space attached to
// a lattice 3-simplex through its normal fan. multiplicity == 1 is the
// genuine weighted projective space; > 1 marks a nontrivial quotient.
struct WeightSystem {
    std::array<Int, 4> weights{}; // ascending
    Int multiplicity = 1;
    bool well_formed = false;
};

// Primitive inward facet normals; ray i is opposite vertex i.
std::array<LatticeVector, 4> normal_fan_rays(const Simplex3& s);

// The unique positive primitive relation sum q_i * ray_i = 0, re-verified on
// every call, plus the lattice index of the rays' span.
WeightSystem weights_from_simplex(const Simplex3& s);

// Realizes conv{(d/q_i) e_i : sum q_i x_i = d, x >= 0} as a lattice 3-simplex
// via an affine basis of the saturated hyperplane lattice. Requires positive
// q with gcd 1 and q_i | d for each i; otherwise throws std::invalid_argument
// ("rational vertex; not a lattice simplex for this degree" when divisibility
// fails). The overload without a degree uses the anticanonical d = sum q_i.
Simplex3 simplex_from_weights(const std::array<Int, 4>& q, const Int& degree);
Simplex3 simplex_from_weights(const std::array<Int, 4>& q);

// Every 3-element subset of the weights is coprime.
bool is_well_formed(const std::array<Int, 4>& q);

} // namespace latpic
