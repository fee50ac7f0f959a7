#include <doctest.h>

#include <algorithm>
#include <set>

#include "eulerint/complex.hpp"
#include "testutil.hpp"

using namespace eulerint;

TEST_CASE("closed interval build") {
    auto K = build_complex({{Rat(0)}, {Rat(1)}}, {{0, 1}});
    CHECK(K->cell_count() == 3);
    CHECK(K->euler_characteristic() == 1);
    std::array<int, 2> e{0, 1};
    CHECK(K->cell_id(e) >= 0);
}

TEST_CASE("degenerate simplex rejected") {
    // Three collinear points as a 2-simplex.
    CHECK_THROWS_WITH_AS(
        build_complex({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(0)}}, {{0, 1, 2}}),
        doctest::Contains("DegenerateSimplex"), EulerError);
    CHECK_THROWS_AS(build_complex({{Rat(0)}, {Rat(1)}}, {{0, 0}}), EulerError);
}

TEST_CASE("duplicate maximal cell rejected") {
    try {
        build_complex({{Rat(0)}, {Rat(1)}}, {{0, 1}, {1, 0}});
        FAIL("expected DuplicateCell");
    } catch (const EulerError& e) {
        CHECK(e.code() == Err::DuplicateCell);
    }
}

TEST_CASE("overlapping interiors rejected in the plane") {
    // Two triangles sharing interior area but no common face.
    std::vector<RatVec> pts = {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(2)},
                               {Rat(1), Rat(1)}, {Rat(3), Rat(1)}, {Rat(1), Rat(3)}};
    // Shifted so the two interiors genuinely intersect.
    pts[3] = {Rat(1, 2), Rat(1, 2)};
    pts[4] = {Rat(5, 2), Rat(1, 2)};
    pts[5] = {Rat(1, 2), Rat(5, 2)};
    try {
        build_complex(pts, {{0, 1, 2}, {3, 4, 5}});
        FAIL("expected OverlappingInteriors");
    } catch (const EulerError& e) {
        CHECK(e.code() == Err::OverlappingInteriors);
    }

    // A vertex inside another cell's open interior also trips the check.
    try {
        build_complex({{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(2)}, {Rat(1, 2), Rat(1, 2)}},
                      {{0, 1, 2}, {3}});
        FAIL("expected OverlappingInteriors");
    } catch (const EulerError& e) {
        CHECK(e.code() == Err::OverlappingInteriors);
    }

    // Adjacent triangles sharing an edge are fine.
    auto K = build_complex(
        {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(0), Rat(1)}},
        {{0, 1, 2}, {0, 2, 3}});
    CHECK(K->euler_characteristic() == 1);
}

TEST_CASE("tetrahedron boundary") {
    auto K = sphere_boundary();
    CHECK(K->vertex_count() == 4);
    int edges = 0, tris = 0;
    for (int c = 0; c < K->cell_count(); ++c) {
        if (K->dim(c) == 1) ++edges;
        if (K->dim(c) == 2) ++tris;
    }
    CHECK(edges == 6);
    CHECK(tris == 4);
    CHECK(K->euler_characteristic() == 2);
    CHECK(is_closed_manifold(*K, 2));
}

TEST_CASE("euler characteristic of open cell subsets") {
    auto K = sphere_boundary();
    // A single open 2-cell counts +1, a single open edge -1.
    for (int c = 0; c < K->cell_count(); ++c) {
        std::array<int, 1> one{c};
        long long chi = euler_characteristic(*K, one);
        CHECK(chi == (K->dim(c) % 2 == 0 ? 1 : -1));
    }
    std::array<int, 1> bad{K->cell_count()};
    CHECK_THROWS_AS(euler_characteristic(*K, bad), EulerError);
}

TEST_CASE("chi additivity on random disjoint subsets") {
    auto K = grid_complex(4, 4, {Rat(0), Rat(4)}, {Rat(0), Rat(4)});
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> A, B;
        for (int c = 0; c < K->cell_count(); ++c) {
            switch (coin(rng)) {
                case 0: A.push_back(c); break;
                case 1: B.push_back(c); break;
                default: break;
            }
        }
        std::vector<int> U = A;
        U.insert(U.end(), B.begin(), B.end());
        CHECK(euler_characteristic(*K, U) ==
              euler_characteristic(*K, A) + euler_characteristic(*K, B));
    }
}

TEST_CASE("chi inclusion-exclusion on face-closed subsets") {
    auto K = grid_complex(3, 3, {Rat(0), Rat(3)}, {Rat(0), Rat(3)});
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coin(0, 1);
    auto close_down = [&](std::vector<int> seed) {
        std::set<int> out;
        for (int c : seed) {
            out.insert(c);
            for (int f : K->proper_faces(c)) out.insert(f);
        }
        return std::vector<int>(out.begin(), out.end());
    };
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> seedA, seedB;
        for (int c = 0; c < K->cell_count(); ++c) {
            if (coin(rng)) seedA.push_back(c);
            if (coin(rng)) seedB.push_back(c);
        }
        auto A = close_down(seedA), B = close_down(seedB);
        std::vector<int> U, I;
        std::set_union(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(U));
        std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(I));
        CHECK(euler_characteristic(*K, U) + euler_characteristic(*K, I) ==
              euler_characteristic(*K, A) + euler_characteristic(*K, B));
    }
}

TEST_CASE("grid complex counts") {
    auto K1 = grid_complex(1, 1, {Rat(0), Rat(1)}, {Rat(0), Rat(1)});
    CHECK(K1->vertex_count() == 4);
    int edges = 0, tris = 0;
    for (int c = 0; c < K1->cell_count(); ++c) {
        if (K1->dim(c) == 1) ++edges;
        if (K1->dim(c) == 2) ++tris;
    }
    CHECK(edges == 5);
    CHECK(tris == 2);
    CHECK(K1->euler_characteristic() == 1);

    CHECK(grid_complex(2, 1, {Rat(0), Rat(2)}, {Rat(0), Rat(1)})->euler_characteristic() == 1);

    auto K30 = grid_complex(30, 30, {Rat(0), Rat(30)}, {Rat(0), Rat(30)});
    CHECK(K30->vertex_count() == 961);
    int tris30 = 0;
    for (int c = 0; c < K30->cell_count(); ++c)
        if (K30->dim(c) == 2) ++tris30;
    CHECK(tris30 == 1800);

    CHECK_THROWS_AS(grid_complex(0, 1, {Rat(0), Rat(1)}, {Rat(0), Rat(1)}), EulerError);
    CHECK_THROWS_AS(grid_complex(1, 1, {Rat(1), Rat(1)}, {Rat(0), Rat(1)}), EulerError);
}

TEST_CASE("generators") {
    CHECK(circle(4)->euler_characteristic() == 0);
    CHECK(circle(17)->euler_characteristic() == 0);
    CHECK(is_closed_manifold(*circle(5), 1));
    CHECK(sphere_boundary()->euler_characteristic() == 2);
    CHECK(torus(3, 3)->euler_characteristic() == 0);
    CHECK(torus(4, 6)->euler_characteristic() == 0);
    CHECK(is_closed_manifold(*torus(3, 3), 2));
    CHECK_THROWS_AS(circle(2), EulerError);
    CHECK_THROWS_AS(torus(2, 5), EulerError);
}

TEST_CASE("products multiply chi") {
    auto I = testutil::unit_interval();
    auto sq = product_complex(*I, *I);
    CHECK(sq->euler_characteristic() == 1);
    int tris = 0;
    for (int c = 0; c < sq->cell_count(); ++c)
        if (sq->dim(c) == 2) ++tris;
    CHECK(tris == 2);

    auto annulus = product_complex(*circle(4), *I);
    CHECK(annulus->euler_characteristic() == 0);

    auto torus_prod = product_complex(*circle(3), *circle(3));
    CHECK(torus_prod->euler_characteristic() == 0);

    auto c5 = circle(5);
    CHECK(product_complex(*sphere_boundary(), *I)->euler_characteristic() == 2);
    CHECK(product_complex(*c5, *c5)->euler_characteristic() == 0);
}

TEST_CASE("face closure holds for every stored cell") {
    for (auto K : {grid_complex(3, 2, {Rat(0), Rat(3)}, {Rat(0), Rat(2)}),
                   ComplexPtr(torus(3, 3)),
                   product_complex(*circle(4), *testutil::unit_interval())}) {
        for (int c = 0; c < K->cell_count(); ++c) {
            const auto& verts = K->cell_verts(c);
            const int k = static_cast<int>(verts.size());
            for (unsigned mask = 1; mask < (1u << k); ++mask) {
                std::vector<int> face;
                for (int i = 0; i < k; ++i)
                    if (mask & (1u << i)) face.push_back(verts[i]);
                CHECK(K->cell_id(face) >= 0);
            }
        }
    }
}

TEST_CASE("manifold test rejects non-manifolds") {
    CHECK_FALSE(is_closed_manifold(*testutil::unit_interval(), 1));
    CHECK_FALSE(is_closed_manifold(*testutil::unit_square(), 2));
    CHECK_FALSE(is_closed_manifold(*grid_complex(2, 2, {Rat(0), Rat(2)}, {Rat(0), Rat(2)}), 2));
}
