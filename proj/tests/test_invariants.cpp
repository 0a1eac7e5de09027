#include <doctest.h>

#include <json.hpp>

#include "invariants.hpp"
#include "moves.hpp"
#include "oracle.hpp"

using namespace vknot;

TEST_CASE("odd writhe") {
    CHECK(odd_writhe(GaussDiagram::parse("O1-,O2-,U1-,U2-")) == -2);
    CHECK(odd_writhe(GaussDiagram::parse("O1+,O2+,U1+,U2+")) == 2);
    CHECK(odd_writhe(GaussDiagram{}) == 0);
    CHECK(odd_writhe(GaussDiagram::parse("O1+,O2+,U2+,U1+")) == 0);
}

TEST_CASE("writhe") {
    CHECK(writhe(GaussDiagram::parse("O1-,O2-,U1-,U2-")) == -2);
    CHECK(writhe(GaussDiagram{}) == 0);
    GaussDiagram d = GaussDiagram::parse("O1+,O2-,U1+,U2-");
    CHECK(writhe(arc_shift_sign(d, 1)) == writhe(d) - 2);
    CHECK(writhe(arc_shift_sign(d, 2)) == writhe(d) + 2);
}

TEST_CASE("arc shift lower bound") {
    CHECK(arc_shift_lower_bound(GaussDiagram::parse("O1-,O2-,U1-,U2-")) == 1);
    CHECK(arc_shift_lower_bound(GaussDiagram::parse("O1+,O2+,U2+,U1+")) == 0);
    // Four mutually crossing positive chords: J = +4, bound 2.
    GaussDiagram full = GaussDiagram::parse("O1+,O2+,O3+,O4+,U1+,U2+,U3+,U4+");
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
            REQUIRE(full.interleaves(a, b));
    CHECK(odd_writhe(full) == 4);
    CHECK(arc_shift_lower_bound(full) == 2);
}

TEST_CASE("report bundles the invariants consistently") {
    InvariantReport r = report(GaussDiagram::parse("O1-,O2-,U1-,U2-"));
    CHECK(r.chord_count == 2);
    CHECK(r.writhe == -2);
    CHECK(r.odd_writhe == -2);
    CHECK(r.arc_shift_lower_bound == 1);
    CHECK(r.parity_table.at(1) == Parity::Odd);
    CHECK(r.parity_table.at(2) == Parity::Odd);

    InvariantReport empty = report(GaussDiagram{});
    CHECK(empty.chord_count == 0);
    CHECK(empty.writhe == 0);
    CHECK(empty.odd_writhe == 0);
    CHECK(empty.arc_shift_lower_bound == 0);
    CHECK(empty.parity_table.empty());

    EnumerationSpec spec;
    spec.n = 3;
    spec.canonical_only = true;
    enumerate_diagrams(spec, [](const GaussDiagram& g) {
        InvariantReport rep = report(g);
        for (const auto& [c, p] : rep.parity_table)
            CHECK(p == g.parity(c));
        CHECK(rep.odd_writhe == odd_writhe(g));
        CHECK(rep.arc_shift_lower_bound == arc_shift_lower_bound(g));
        return true;
    });
}

TEST_CASE("report json uses the exact documented keys") {
    auto j = nlohmann::json::parse(report_json(GaussDiagram::parse("O1-,O2-,U1-,U2-")));
    CHECK(j["code"] == "O1-,O2-,U1-,U2-");
    CHECK(j["chords"] == 2);
    CHECK(j["writhe"] == -2);
    CHECK(j["odd_writhe"] == -2);
    CHECK(j["parity"]["1"] == "odd");
    CHECK(j["parity"]["2"] == "odd");
    CHECK(j["arc_shift_lower_bound"] == 1);
}

TEST_CASE("delta J law for adjacent arc shifts, n <= 3") {
    for (int n = 2; n <= 3; ++n) {
        EnumerationSpec spec;
        spec.n = n;
        enumerate_diagrams(spec, [](const GaussDiagram& g) {
            int j_before = odd_writhe(g);
            for (int p = 0; p < g.size(); ++p) {
                int ca = g.at(p).chord, cb = g.at((p + 1) % g.size()).chord;
                if (ca == cb)
                    continue;
                int e1 = g.sign(ca), e2 = g.sign(cb);
                GaussDiagram r = arc_shift_adjacent(g, p).first;
                CHECK(odd_writhe(r) == j_before - (e1 + e2));
            }
            return true;
        });
    }
}

TEST_CASE("delta J law for the sign flip, n <= 3") {
    EnumerationSpec spec;
    spec.n = 3;
    enumerate_diagrams(spec, [](const GaussDiagram& g) {
        int j_before = odd_writhe(g);
        for (const auto& [c, e] : g.signs()) {
            int j_after = odd_writhe(arc_shift_sign(g, c));
            if (g.parity(c) == Parity::Even)
                CHECK(j_after == j_before);
            else
                CHECK(j_after == j_before - 2 * e);
        }
        return true;
    });
}

TEST_CASE("J of a parallel diagram is zero") {
    EnumerationSpec spec;
    spec.n = 3;
    enumerate_diagrams(spec, [](const GaussDiagram& g) {
        if (g.is_parallel())
            CHECK(odd_writhe(g) == 0);
        return true;
    });
}
