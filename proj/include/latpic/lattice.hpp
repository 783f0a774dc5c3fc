#pragma once

#include "latpic/arith.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace latpic {

// A point of Z^3 (or an integer normal vector).
struct LatticeVector {
    Int x, y, z;

    Int& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    const Int& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a);
LatticeVector operator*(const Int& s, const LatticeVector& a);
Int dot(const LatticeVector& a, const LatticeVector& b);
LatticeVector cross(const LatticeVector& a, const LatticeVector& b);
bool is_zero(const LatticeVector& a);
// Lexicographic comparison by (x, y, z); the deterministic order used for output.
bool lex_less(const LatticeVector& a, const LatticeVector& b);

// A point of Q^3 (rational vertices of fine-interior regions).
struct RationalVector {
    Rat x, y, z;

    Rat& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    const Rat& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    friend bool operator==(const RationalVector&, const RationalVector&) = default;
};

RationalVector operator-(const RationalVector& a, const RationalVector& b);
Rat dot(const LatticeVector& n, const RationalVector& p);
bool lex_less(const RationalVector& a, const RationalVector& b);
RationalVector to_rational(const LatticeVector& a);

// Closed half-space { p : <normal, p> >= bound } with primitive integer normal.
struct HalfSpace {
    LatticeVector normal;
    Rat bound;

    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

// Dense exact integer matrix; small fixed sizes only (rows, cols <= ~6).
struct IntegerMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntegerMatrix identity(std::size_t n);

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);
// Exact determinant (square input) via fraction-free elimination.
Int det(const IntegerMatrix& m);
std::size_t rank(IntegerMatrix m);

// Primitive part and content of a nonzero vector: v = content * primitive.
// Throws std::invalid_argument on the zero vector.
std::pair<LatticeVector, Int> gcd_reduce(const LatticeVector& v);

// u * m * v = d with d diagonal, nonnegative, each entry dividing the next,
// and u, v unimodular.
struct SmithResult {
    IntegerMatrix d, u, v;
};
SmithResult smith_normal_form(const IntegerMatrix& m);

// Index of the subgroup of Z^3 generated by the given vectors: the product of
// the nonzero Smith divisors when the rank is 3, infinite (nullopt) otherwise.
std::optional<Int> lattice_index(const std::vector<LatticeVector>& generators);

// Basis of the saturated integer kernel { x in Z^n : m x = 0 }.
std::vector<std::vector<Int>> integer_kernel(const IntegerMatrix& m);

// Basis of (affine hull of the points) intersected with Z^n, as an affine
// lattice over origin = points[0]; coords[i] are the integer coordinates of
// points[i] in that basis.
struct AffineBasisNd {
    std::vector<Int> origin;
    std::vector<std::vector<Int>> basis;
    std::vector<std::vector<Int>> coords;
};
AffineBasisNd affine_lattice_basis_nd(const std::vector<std::vector<Int>>& points);

// Z^3 specialization of the above (the common case used for faces).
struct AffineBasis {
    LatticeVector origin;
    std::vector<LatticeVector> basis;
    std::vector<std::vector<Int>> coords;
};
AffineBasis affine_lattice_basis(const std::vector<LatticeVector>& points);

} // namespace latpic
