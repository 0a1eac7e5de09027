#include <doctest.h>

#include <set>

#include "invariants.hpp"
#include "oracle.hpp"

using namespace vknot;

TEST_CASE("enumeration counts match the pairing formula") {
    auto count_for = [](int n, bool canonical) {
        EnumerationSpec spec;
        spec.n = n;
        spec.canonical_only = canonical;
        return enumerate_diagrams(spec, [](const GaussDiagram&) { return true; });
    };
    CHECK(count_for(0, false) == 1);
    CHECK(count_for(1, false) == 4);
    CHECK(count_for(2, false) == 48);
    CHECK(count_for(3, false) == 960);
    CHECK(count_for(1, true) == 2);

    EnumerationSpec over;
    over.n = 6;
    CHECK_THROWS_AS(enumerate_diagrams(over, [](const GaussDiagram&) { return true; }), Error);
}

TEST_CASE("canonical enumeration yields pairwise distinct canonical codes") {
    for (int n = 1; n <= 3; ++n) {
        EnumerationSpec spec;
        spec.n = n;
        spec.canonical_only = true;
        std::set<std::string> seen;
        long count = enumerate_diagrams(spec, [&](const GaussDiagram& g) {
            CHECK(g == g.canonical());
            CHECK(seen.insert(g.render()).second);
            return true;
        });
        CHECK(count == static_cast<long>(seen.size()));
    }
}

TEST_CASE("every enumerated diagram is valid and sized correctly") {
    EnumerationSpec spec;
    spec.n = 3;
    enumerate_diagrams(spec, [](const GaussDiagram& g) {
        CHECK(g.chord_count() == 3);
        CHECK(g.size() == 6);
        return true;
    });
}

TEST_CASE("brute minimal cost on fixtures") {
    GaussDiagram tref = GaussDiagram::parse("O1-,O2-,U1-,U2-");
    CHECK(brute_min_cost(tref, MoveFamily::ArcShift, 2, 4) == 1);
    CHECK(brute_min_cost(tref, MoveFamily::Forbidden, 2, 4) == 1);
    CHECK(brute_min_cost(GaussDiagram{}, MoveFamily::ArcShift, 2, 2) == 0);
    CHECK(brute_min_cost(GaussDiagram::parse("O1+,O2+,U2+,U1+"), MoveFamily::ArcShift, 2, 2) == 0);
    // An R2 pair is already trivial under the free closure.
    CHECK(brute_min_cost(GaussDiagram::parse("O1+,O2-,U2-,U1+"), MoveFamily::ArcShift, 0, 2) == 0);
    CHECK_THROWS_AS(brute_min_cost(tref, MoveFamily::RegionArcShift, 1, 4), Error);
}

TEST_CASE("early stop is respected") {
    EnumerationSpec spec;
    spec.n = 3;
    long seen = 0;
    long reported = enumerate_diagrams(spec, [&](const GaussDiagram&) {
        return ++seen < 10;
    });
    CHECK(seen == 10);
    CHECK(reported == 10);
}
