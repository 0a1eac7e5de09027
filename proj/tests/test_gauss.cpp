#include <doctest.h>

#include "gauss.hpp"
#include "oracle.hpp"

using namespace vknot;

TEST_CASE("parse empty code gives the empty diagram") {
    GaussDiagram d = GaussDiagram::parse("");
    CHECK(d.chord_count() == 0);
    CHECK(d.empty());
    CHECK(d.is_parallel());
    d = GaussDiagram::parse("\n");
    CHECK(d.chord_count() == 0);
}

TEST_CASE("parse the left virtual trefoil code") {
    GaussDiagram d = GaussDiagram::parse("O1-,O2-,U1-,U2-");
    REQUIRE(d.size() == 4);
    CHECK(d.at(0) == Endpoint{1, Role::Tail});
    CHECK(d.at(1) == Endpoint{2, Role::Tail});
    CHECK(d.at(2) == Endpoint{1, Role::Head});
    CHECK(d.at(3) == Endpoint{2, Role::Head});
    CHECK(d.sign(1) == -1);
    CHECK(d.sign(2) == -1);
    CHECK(d.parity(1) == Parity::Odd);
    CHECK(d.parity(2) == Parity::Odd);
}

TEST_CASE("parse tolerates whitespace after commas and a trailing newline") {
    GaussDiagram d = GaussDiagram::parse("O1-, O2-,\tU1-, U2-\n");
    CHECK(d.render() == "O1-,O2-,U1-,U2-");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(GaussDiagram::parse("X1+"), Error);
    CHECK_THROWS_AS(GaussDiagram::parse("O01+,U01+"), Error);
    CHECK_THROWS_AS(GaussDiagram::parse("O1"), Error);
    try {
        GaussDiagram::parse("O1+,U1-");
        FAIL("expected SignMismatch");
    } catch (const Error& e) {
        CHECK(e.code == ErrorCode::SignMismatch);
        CHECK(e.token == 2);
    }
    try {
        GaussDiagram::parse("O1+,O2+,U1+");
        FAIL("expected OddOccurrence");
    } catch (const Error& e) {
        CHECK(e.code == ErrorCode::OddOccurrence);
    }
    try {
        GaussDiagram::parse("O1+,U1+,O1+,U1+");
        FAIL("expected OddOccurrence");
    } catch (const Error& e) {
        CHECK(e.code == ErrorCode::OddOccurrence);
    }
}

TEST_CASE("render inverts parse") {
    CHECK(GaussDiagram{}.render() == "");
    GaussDiagram d = GaussDiagram::parse("O1-,O2-,U1-,U2-");
    CHECK(d.render() == "O1-,O2-,U1-,U2-");

    // Exhaustive round-trip over all 3-chord diagrams.
    EnumerationSpec spec;
    spec.n = 3;
    long count = enumerate_diagrams(spec, [](const GaussDiagram& g) {
        GaussDiagram back = GaussDiagram::parse(g.render());
        CHECK(back == g);
        return true;
    });
    CHECK(count == 960);
}

TEST_CASE("canonicalize identifies rotations") {
    GaussDiagram a = GaussDiagram::parse("U2-,O1-,O2-,U1-");
    GaussDiagram b = GaussDiagram::parse("O1-,O2-,U1-,U2-");
    CHECK(a.canonical() == b.canonical());
    CHECK(GaussDiagram{}.canonical() == GaussDiagram{});
    CHECK(b.canonical().render() == "O1-,O2-,U1-,U2-");
}

TEST_CASE("canonicalize is idempotent and constant on rotation orbits") {
    for (int n = 1; n <= 3; ++n) {
        EnumerationSpec spec;
        spec.n = n;
        enumerate_diagrams(spec, [](const GaussDiagram& g) {
            GaussDiagram c = g.canonical();
            CHECK(c == c.canonical());
            for (int r = 0; r < g.size(); ++r)
                CHECK(g.rotated(r).canonical() == c);
            return true;
        });
    }
}

TEST_CASE("interleaves") {
    GaussDiagram alt = GaussDiagram::parse("O1+,O2+,U1+,U2+");
    CHECK(alt.interleaves(1, 2));
    GaussDiagram nested = GaussDiagram::parse("O1+,O2+,U2+,U1+");
    CHECK_FALSE(nested.interleaves(1, 2));
    CHECK_THROWS_AS(alt.interleaves(1, 5), Error);

    // Symmetry over all 4-chord diagrams (signs are irrelevant here).
    EnumerationSpec spec;
    spec.n = 4;
    spec.include_signs = false;
    enumerate_diagrams(spec, [](const GaussDiagram& g) {
        for (int a = 1; a <= 4; ++a)
            for (int b = a + 1; b <= 4; ++b)
                CHECK(g.interleaves(a, b) == g.interleaves(b, a));
        return true;
    });
}

TEST_CASE("parity") {
    GaussDiagram tref = GaussDiagram::parse("O1-,O2-,U1-,U2-");
    CHECK(tref.parity(1) == Parity::Odd);
    CHECK(tref.parity(2) == Parity::Odd);
    GaussDiagram nested = GaussDiagram::parse("O1+,O2+,U2+,U1+");
    CHECK(nested.parity(1) == Parity::Even);
    CHECK(nested.parity(2) == Parity::Even);
    GaussDiagram kink = GaussDiagram::parse("O1+,U1+");
    CHECK(kink.parity(1) == Parity::Even);
}

TEST_CASE("is_parallel") {
    CHECK(GaussDiagram{}.is_parallel());
    CHECK_FALSE(GaussDiagram::parse("O1-,O2-,U1-,U2-").is_parallel());
    CHECK(GaussDiagram::parse("O1+,O2+,U2+,U1+").is_parallel());
}
