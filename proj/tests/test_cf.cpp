#include <doctest.h>

#include <algorithm>

#include "eulerint/cf.hpp"
#include "testutil.hpp"

using namespace eulerint;

TEST_CASE("integrate_cf basics") {
    auto I = testutil::unit_interval();
    CHECK(integrate_cf(cfun_const(I, 1)) == 1);

    // Indicator of the open edge alone integrates to -1.
    std::array<int, 2> e{0, 1};
    std::array<int, 1> edge_cell{I->cell_id(e)};
    CHECK(integrate_cf(cfun_indicator(I, edge_cell)) == -1);

    CHECK(integrate_cf(cfun_const(sphere_boundary(), 3)) == 6);
}

TEST_CASE("level-set formula matches the closed form") {
    auto I = testutil::unit_interval();
    CHECK(integrate_cf_levelset(cfun_const(I, 1)) == 1);

    // h = -2 on one open triangle.
    auto sq = testutil::unit_square();
    for (int c = 0; c < sq->cell_count(); ++c) {
        if (sq->dim(c) != 2) continue;
        std::vector<long long> vals(sq->cell_count(), 0);
        vals[c] = -2;
        CFun h(sq, vals);
        CHECK(integrate_cf_levelset(h) == -2);
        CHECK(integrate_cf(h) == -2);
        break;
    }

    std::mt19937_64 rng(3);
    auto K = grid_complex(5, 5, {Rat(0), Rat(5)}, {Rat(0), Rat(5)});
    for (int trial = 0; trial < 25; ++trial) {
        CFun h = testutil::random_cfun(K, rng);
        CHECK(integrate_cf_levelset(h) == integrate_cf(h));
        CHECK(integrate_cf_serial(h) == integrate_cf(h));
    }
}

TEST_CASE("integrate_cf is linear") {
    std::mt19937_64 rng(5);
    auto K = grid_complex(4, 4, {Rat(0), Rat(4)}, {Rat(0), Rat(4)});
    for (int trial = 0; trial < 10; ++trial) {
        CFun f = testutil::random_cfun(K, rng);
        CFun g = testutil::random_cfun(K, rng);
        long long a = static_cast<long long>(rng() % 7) - 3;
        long long b = static_cast<long long>(rng() % 7) - 3;
        std::vector<long long> combo(f.values.size());
        for (std::size_t i = 0; i < combo.size(); ++i)
            combo[i] = a * f.values[i] + b * g.values[i];
        CHECK(integrate_cf(CFun(K, combo)) == a * integrate_cf(f) + b * integrate_cf(g));
    }
}

TEST_CASE("pushforward to a point is the integral") {
    auto I = testutil::unit_interval();
    auto pt = build_complex({{Rat(0)}}, {{0}});
    SimplicialMap F = make_simplicial_map(I, pt, {0, 0});
    CFun h = cfun_const(I, 1);
    CFun pushed = pushforward(F, h);
    CHECK(pushed.values[0] == 1);
    CHECK(integrate_cf(pushed) == integrate_cf(h));
}

TEST_CASE("pushforward collapses an edge") {
    // Collapse [a,b] to the vertex v of a one-point complex.
    auto I = testutil::unit_interval();
    auto pt = build_complex({{Rat(5)}}, {{0}});
    SimplicialMap F = make_simplicial_map(I, pt, {0, 0});
    CFun h = cfun_const(I, 1);
    CHECK(pushforward(F, h).values[0] == 1);  // 1 + 1 - 1
}

TEST_CASE("pushforward of the staircase square projection") {
    auto I = testutil::unit_interval();
    auto sq = product_complex(*I, *I);
    // Product vertex u*2+v projects to u.
    std::vector<int> vmap(sq->vertex_count());
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) vmap[u * 2 + v] = u;
    SimplicialMap F = make_simplicial_map(sq, I, vmap);
    CFun pushed = pushforward(F, cfun_const(sq, 1));
    for (int c = 0; c < I->cell_count(); ++c) CHECK(pushed.values[c] == 1);
}

TEST_CASE("fubini for cf pushforwards") {
    std::mt19937_64 rng(9);
    auto K = grid_complex(3, 2, {Rat(0), Rat(3)}, {Rat(0), Rat(2)});
    // Project the grid onto its bottom edge complex.
    RatVec xs;
    for (int i = 0; i <= 3; ++i) xs.push_back(Rat(i));
    std::vector<RatVec> coords;
    for (const Rat& x : xs) coords.push_back({x, Rat(0)});
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < 3; ++i) edges.push_back({i, i + 1});
    auto L = build_complex(coords, edges);
    std::vector<int> vmap(K->vertex_count());
    for (int v = 0; v < K->vertex_count(); ++v) vmap[v] = v % 4;
    SimplicialMap F = make_simplicial_map(K, L, vmap);
    for (int trial = 0; trial < 20; ++trial) {
        CFun h = testutil::random_cfun(K, rng);
        CHECK(integrate_cf(pushforward(F, h)) == integrate_cf(h));
    }
}

TEST_CASE("invalid simplicial maps are rejected") {
    auto I = testutil::unit_interval();
    auto two_pts = build_complex({{Rat(0)}, {Rat(1)}}, {{0}, {1}});
    // The edge's endpoints map to the two isolated points: no target cell.
    CHECK_THROWS_AS(make_simplicial_map(I, two_pts, {0, 1}), EulerError);
}

TEST_CASE("convolution of indicators is the indicator of the sum") {
    CFun f = cfun_1d({Rat(0), Rat(1)}, {1, 1}, {1});
    CFun g = cfun_1d({Rat(0), Rat(2)}, {1, 1}, {1});
    CFun expected = cfun_1d({Rat(0), Rat(3)}, {1, 1}, {1});
    CHECK(cfun_equal_1d(convolve_1d(f, g), expected));
}

TEST_CASE("dirac identity") {
    std::mt19937_64 rng(13);
    CFun delta = cfun_1d({Rat(0)}, {1}, {});
    for (int trial = 0; trial < 10; ++trial) {
        CFun g = testutil::random_cfun_1d(rng);
        CHECK(cfun_equal_1d(convolve_1d(delta, g), g));
    }
    // A Dirac away from the origin translates.
    CFun shift = cfun_1d({Rat(2)}, {1}, {});
    CFun g = cfun_1d({Rat(0), Rat(1)}, {1, 1}, {1});
    CFun expected = cfun_1d({Rat(2), Rat(3)}, {1, 1}, {1});
    CHECK(cfun_equal_1d(convolve_1d(shift, g), expected));
}

TEST_CASE("convolution product formula and algebra laws") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        CFun f = testutil::random_cfun_1d(rng);
        CFun g = testutil::random_cfun_1d(rng);
        CFun fg = convolve_1d(f, g);
        CHECK(integrate_cf(fg) == integrate_cf(f) * integrate_cf(g));
        CHECK(cfun_equal_1d(fg, convolve_1d(g, f)));
    }
    for (int trial = 0; trial < 5; ++trial) {
        CFun f = testutil::random_cfun_1d(rng);
        CFun g = testutil::random_cfun_1d(rng);
        CFun h = testutil::random_cfun_1d(rng);
        CHECK(cfun_equal_1d(convolve_1d(convolve_1d(f, g), h),
                            convolve_1d(f, convolve_1d(g, h))));
    }
}

TEST_CASE("the mixed support example") {
    // f = 1_[0,1], g = 1_[0,1] - 1_(2,3): integral of f*g = 1 * 2 = 2.
    CFun f = cfun_1d({Rat(0), Rat(1)}, {1, 1}, {1});
    CFun g = cfun_1d({Rat(0), Rat(1), Rat(2), Rat(3)}, {1, 1, 0, 0}, {1, 0, -1});
    CHECK(integrate_cf(g) == 2);
    CHECK(integrate_cf(convolve_1d(f, g)) == 2);
}

TEST_CASE("convolution requires 1-D operands") {
    auto sq = testutil::unit_square();
    CFun planar = cfun_const(sq, 1);
    CFun line = cfun_1d({Rat(0), Rat(1)}, {1, 1}, {1});
    CHECK_THROWS_AS(convolve_1d(planar, line), EulerError);
}

TEST_CASE("minkowski sums") {
    ConvexPolygon square{{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(0), Rat(1)}}};
    ConvexPolygon sum = minkowski_indicator(square, square);
    REQUIRE(sum.verts.size() == 4);
    CHECK(sum.verts[0][0] == 0);
    CHECK(sum.verts[2][0] == 2);
    CHECK(sum.verts[2][1] == 2);

    ConvexPolygon tri{{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}};
    ConvexPolygon penta = minkowski_indicator(tri, square);
    CHECK(penta.verts.size() == 5);

    ConvexPolygon point{{{Rat(3), Rat(-2)}}};
    ConvexPolygon moved = minkowski_indicator(tri, point);
    REQUIRE(moved.verts.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(moved.verts[i][0] == tri.verts[i][0] + 3);
        CHECK(moved.verts[i][1] == tri.verts[i][1] - 2);
    }
}

TEST_CASE("minkowski validation") {
    ConvexPolygon cw{{{Rat(0), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(0)}}};
    ConvexPolygon ok{{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}};
    try {
        minkowski_indicator(cw, ok);
        FAIL("expected NotCounterclockwise");
    } catch (const EulerError& e) {
        CHECK(e.code() == Err::NotCounterclockwise);
    }
    ConvexPolygon dent{{{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(1), Rat(1, 4)}, {Rat(2), Rat(2)},
                        {Rat(0), Rat(2)}}};
    try {
        minkowski_indicator(ok, dent);
        FAIL("expected NotConvex");
    } catch (const EulerError& e) {
        CHECK(e.code() == Err::NotConvex);
    }
}
