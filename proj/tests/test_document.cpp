#include <doctest.h>

#include "eulerint/document.hpp"
#include "eulerint/defint.hpp"
#include "testutil.hpp"

using namespace eulerint;

TEST_CASE("documents round-trip losslessly") {
    std::mt19937_64 rng(131);
    auto K = grid_complex(3, 2, {Rat(-1), Rat(2)}, {Rat(0), Rat(1)});

    SUBCASE("vertex values") {
        RatVec vv(K->vertex_count());
        for (Rat& v : vv) v = testutil::lattice_value(rng);
        Document doc = document_from_vertex_values(K, vv);
        Document again = parse_document(serialize_document(doc));
        CHECK(document_equal(doc, again));
        CHECK(serialize_document(doc) == serialize_document(again));
    }

    SUBCASE("cell values") {
        Document doc = document_from_cfun(testutil::random_cfun(K, rng));
        Document again = parse_document(serialize_document(doc));
        CHECK(document_equal(doc, again));
    }

    SUBCASE("cell affine with awkward rationals") {
        DefFun h = testutil::random_discontinuous(K, rng);
        h.data[0][0] = Rat(-355, 113);
        Document doc = document_from_deffun(DefFun(K, h.data));
        Document again = parse_document(serialize_document(doc));
        CHECK(document_equal(doc, again));
        // The reparsed function integrates identically.
        CHECK(integrate(doc.as_deffun(), Measure::Floor) ==
              integrate(again.as_deffun(), Measure::Floor));
    }
}

TEST_CASE("parse errors carry the right code") {
    auto expect_parse_error = [](const std::string& text) {
        try {
            parse_document(text);
            FAIL("expected ParseError for: ", text);
        } catch (const EulerError& e) {
            CHECK(e.code() == Err::ParseError);
        }
    };
    expect_parse_error("not json at all");
    expect_parse_error("{}");
    expect_parse_error(R"({"complex": {"vertices": [["1/0"]], "maximal_cells": [[0]]}})");
    expect_parse_error(R"({"complex": {"vertices": [["0.5"]], "maximal_cells": [[0]]}})");
    expect_parse_error(
        R"({"complex": {"vertices": [["0"],["1"]], "maximal_cells": [[0,1]]},
            "function": {"kind": "vertex_values", "values": ["0"]}})");
    expect_parse_error(
        R"({"complex": {"vertices": [["0"],["1"]], "maximal_cells": [[0,1]]},
            "function": {"kind": "nonsense", "values": []}})");
}

TEST_CASE("geometric validation runs on parse") {
    try {
        parse_document(
            R"({"complex": {"vertices": [["0","0"],["1","0"],["2","0"]],
                "maximal_cells": [[0,1,2]]}})");
        FAIL("expected DegenerateSimplex");
    } catch (const EulerError& e) {
        CHECK(e.code() == Err::DegenerateSimplex);
    }
}

TEST_CASE("documents of every function kind expose integrands") {
    auto I = testutil::unit_interval();
    Document doc = document_from_vertex_values(I, {Rat(0), Rat(1)});
    DefFun h = doc.as_deffun();
    CHECK(integrate(h, Measure::Floor) == 1);
    CHECK_THROWS_AS(doc.as_cfun(), EulerError);

    Document none;
    none.K = I;
    CHECK_FALSE(none.has_function());
    CHECK_THROWS_AS(none.as_deffun(), EulerError);
}
