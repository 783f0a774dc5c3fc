#include "doctest.h"

#include "latpic/fwps.hpp"
#include "latpic/lattice.hpp"
#include "latpic/simplex.hpp"

#include "generators.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

using namespace latpic;

namespace {

Simplex3 unit_tet() {
    return make_simplex3({LatticeVector{0, 0, 0}, LatticeVector{1, 0, 0},
                          LatticeVector{0, 1, 0}, LatticeVector{0, 0, 1}});
}

Simplex3 dilated_unit(long long d) {
    return make_simplex3({LatticeVector{0, 0, 0}, LatticeVector{d, 0, 0},
                          LatticeVector{0, d, 0}, LatticeVector{0, 0, d}});
}

// Two pencils of parallel facets; its weighted projective space is a fake one.
Simplex3 wedge_fixture() {
    return make_simplex3({LatticeVector{0, 0, 0}, LatticeVector{2, 0, 0},
                          LatticeVector{1, 4, 0}, LatticeVector{1, 0, 4}});
}

std::vector<oracle::Point> to_oracle(const Simplex3& s) {
    std::vector<oracle::Point> out;
    for (const auto& v : s.v) out.push_back({v[0], v[1], v[2]});
    return out;
}

void check_same(const WeightSystem& a, const WeightSystem& b) {
    CHECK(a.weights == b.weights);
    CHECK(a.multiplicity == b.multiplicity);
    CHECK(a.well_formed == b.well_formed);
}

} // namespace

TEST_CASE("normal fan rays: frozen values, ray i opposite vertex i") {
    const auto tet_rays = normal_fan_rays(unit_tet());
    CHECK(tet_rays[0] == LatticeVector{-1, -1, -1});
    CHECK(tet_rays[1] == LatticeVector{1, 0, 0});
    CHECK(tet_rays[2] == LatticeVector{0, 1, 0});
    CHECK(tet_rays[3] == LatticeVector{0, 0, 1});

    const auto w = wedge_fixture();
    const auto rays = normal_fan_rays(w);
    CHECK(rays[0] == LatticeVector{-4, -1, -1});
    CHECK(rays[1] == LatticeVector{4, -1, -1});
    CHECK(rays[2] == LatticeVector{0, 1, 0});
    CHECK(rays[3] == LatticeVector{0, 0, 1});

    // Ray i supports the facet through every vertex except i, which sits
    // strictly deeper.
    for (int i = 0; i < 4; ++i) {
        std::vector<Int> values;
        for (int j = 0; j < 4; ++j) values.push_back(dot(rays[i], w.v[j]));
        Int level = values[(i + 1) % 4];
        for (int j = 0; j < 4; ++j) {
            if (j == i)
                CHECK(values[j] > level);
            else
                CHECK(values[j] == level);
        }
    }
}

TEST_CASE("weights: unit tetrahedron gives the genuine projective space") {
    const auto w = weights_from_simplex(unit_tet());
    CHECK(w.weights == std::array<Int, 4>{1, 1, 1, 1});
    CHECK(w.multiplicity == 1);
    CHECK(w.well_formed);

    // Dilation leaves the normal fan, hence the weight data, unchanged.
    for (long long d : {2, 5, 9}) check_same(w, weights_from_simplex(dilated_unit(d)));
}

TEST_CASE("weights: wedge fixture gives a fake weighted projective space") {
    const auto w = weights_from_simplex(wedge_fixture());
    CHECK(w.weights == std::array<Int, 4>{1, 1, 2, 2});
    CHECK(w.multiplicity == 4);
    CHECK(w.well_formed);
}

TEST_CASE("weights are invariant under unimodular transforms") {
    gen::Rng rng(2026);
    const std::vector<Simplex3> fixtures = {wedge_fixture(), dilated_unit(5),
                                            gen::random_simplex(rng, 6, false)};
    for (const auto& s : fixtures) {
        const auto base = weights_from_simplex(s);
        for (int k = 0; k < 20; ++k) {
            const auto u = gen::random_unimodular(rng);
            check_same(base, weights_from_simplex(u(s)));
        }
    }
}

TEST_CASE("weights of random simplices satisfy the defining relation") {
    gen::Rng rng(77);
    for (int k = 0; k < 40; ++k) {
        const auto s = gen::random_simplex(rng, 7, false);
        const auto w = weights_from_simplex(s);
        const auto rays = normal_fan_rays(s);

        // weights_from_simplex sorts; recover the per-ray coefficients by
        // solving the relation again here, independently: coefficient for ray
        // i is proportional to the determinant of the other three rays.
        std::array<Int, 4> q;
        for (int i = 0; i < 4; ++i) {
            std::vector<LatticeVector> rest;
            for (int j = 0; j < 4; ++j)
                if (j != i) rest.push_back(rays[j]);
            Int det = dot(rest[0], cross(rest[1], rest[2]));
            q[static_cast<std::size_t>(i)] = (i % 2 == 0) ? det : -det;
        }
        Int g = 0;
        bool flip = false;
        for (const auto& e : q) {
            if (g == 0 && e != 0) flip = e < 0;
            g = gcd(g, e);
        }
        REQUIRE(g != 0);
        for (auto& e : q) {
            e /= g;
            if (flip) e = -e;
        }
        for (int r = 0; r < 3; ++r) {
            Int sum = 0;
            for (int i = 0; i < 4; ++i) sum += q[static_cast<std::size_t>(i)] * rays[i][r];
            CHECK(sum == 0);
        }
        std::sort(q.begin(), q.end());
        CHECK(q == w.weights);
        CHECK(q[0] > 0);
        CHECK(w.multiplicity >= 1);
    }
}

TEST_CASE("simplex realization: genuine projective space fixtures") {
    const auto quartic = simplex_from_weights({1, 1, 1, 1}, 4);
    CHECK(normalized_volume(quartic) == 64);
    CHECK(interior_lattice_points(quartic).size() == 1);
    const auto wq = weights_from_simplex(quartic);
    CHECK(wq.weights == std::array<Int, 4>{1, 1, 1, 1});
    CHECK(wq.multiplicity == 1);

    const auto quintic = simplex_from_weights({1, 1, 1, 1}, 5);
    CHECK(normalized_volume(quintic) == 125);
    CHECK(interior_lattice_points(quintic).size() == 4);
}

TEST_CASE("simplex realization: weights (1,1,2,2) at the anticanonical degree") {
    const auto s = simplex_from_weights({1, 1, 2, 2});
    CHECK(normalized_volume(s) == 54);
    CHECK(Int(interior_lattice_points(s).size()) == oracle::count(to_oracle(s), true));
    CHECK(interior_lattice_points(s).size() == 1);
    const auto w = weights_from_simplex(s);
    CHECK(w.weights == std::array<Int, 4>{1, 1, 2, 2});
    CHECK(w.multiplicity == 1);
    CHECK(w.well_formed);
}

TEST_CASE("simplex realization: weight order does not matter") {
    const auto s = simplex_from_weights({2, 1, 2, 1}, 6);
    CHECK(normalized_volume(s) == 54);
    CHECK(interior_lattice_points(s).size() == 1);
    const auto w = weights_from_simplex(s);
    CHECK(w.weights == std::array<Int, 4>{1, 1, 2, 2});
    CHECK(w.multiplicity == 1);
}

TEST_CASE("simplex realization rejects invalid input") {
    CHECK_THROWS_WITH_AS(simplex_from_weights({1, 1, 1, 2}, 3),
                         "rational vertex; not a lattice simplex for this degree",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(simplex_from_weights({2, 2, 2, 2}, 8),
                         "weights must be coprime overall", std::invalid_argument);
    CHECK_THROWS_WITH_AS(simplex_from_weights({0, 1, 1, 1}, 3), "weights must be positive",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(simplex_from_weights({1, 1, 1, 1}, 0), "degree must be positive",
                         std::invalid_argument);
}

TEST_CASE("anticanonical weight systems with total weight at most 30") {
    // Brute-force enumeration: sorted positive quadruples with overall gcd 1
    // where every weight divides the total.
    std::vector<std::array<Int, 4>> found;
    for (long long q0 = 1; q0 <= 30; ++q0)
        for (long long q1 = q0; q0 + q1 <= 30; ++q1)
            for (long long q2 = q1; q0 + q1 + q2 <= 30; ++q2)
                for (long long q3 = q2; q0 + q1 + q2 + q3 <= 30; ++q3) {
                    const long long d = q0 + q1 + q2 + q3;
                    if (std::gcd(std::gcd(q0, q1), std::gcd(q2, q3)) != 1) continue;
                    if (d % q0 || d % q1 || d % q2 || d % q3) continue;
                    found.push_back({q0, q1, q2, q3});
                }

    const std::vector<std::array<Int, 4>> expected = {
        {1, 1, 1, 1}, {1, 1, 1, 3}, {1, 1, 2, 2},  {1, 1, 2, 4},  {1, 1, 4, 6},
        {1, 2, 2, 5}, {1, 2, 3, 6}, {1, 2, 6, 9},  {1, 3, 4, 4},  {1, 3, 8, 12},
        {1, 4, 5, 10}, {2, 3, 3, 4}, {2, 3, 10, 15},
    };
    CHECK(found == expected);

    for (const auto& q : found) {
        CAPTURE(q[0]);
        CAPTURE(q[1]);
        CAPTURE(q[2]);
        CAPTURE(q[3]);
        CHECK(is_well_formed(q));
        const auto s = simplex_from_weights(q);
        const auto w = weights_from_simplex(s);
        CHECK(w.weights == q);
        CHECK(w.multiplicity == 1);
        CHECK(w.well_formed);
    }
}

TEST_CASE("well-formedness of frozen weight quadruples") {
    CHECK(is_well_formed({1, 1, 1, 1}));
    CHECK(is_well_formed({1, 1, 2, 3}));
    CHECK(is_well_formed({2, 3, 10, 15}));
    CHECK_FALSE(is_well_formed({1, 2, 2, 2}));
    CHECK_FALSE(is_well_formed({1, 2, 4, 8}));
}
