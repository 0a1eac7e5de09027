#include <doctest.h>

#include <json.hpp>

#include "invariants.hpp"
#include "oracle.hpp"
#include "search.hpp"

using namespace vknot;

namespace {

SearchConfig config(MoveFamily family, int max_chords, long max_states = 200000) {
    SearchConfig cfg;
    cfg.family = family;
    cfg.max_chords = max_chords;
    cfg.max_states = max_states;
    return cfg;
}

const char* kTrefoil = "O1-,O2-,U1-,U2-";

} // namespace

TEST_CASE("triviality verdicts") {
    SearchConfig cfg = config(MoveFamily::ArcShift, 4);
    CHECK(is_trivial_bounded(GaussDiagram{}, cfg).verdict == Verdict::Trivial);
    CHECK(is_trivial_bounded(GaussDiagram::parse(kTrefoil), cfg).verdict == Verdict::Nontrivial);

    GaussDiagram r2 = GaussDiagram::parse("O1+,O2-,U2-,U1+");
    TrivialityVerdict v = is_trivial_bounded(r2, cfg);
    CHECK(v.verdict == Verdict::Trivial);
    CHECK(replay_witness(r2, v.witness).is_parallel());
}

TEST_CASE("arc shift search finds the trefoil exactly") {
    GaussDiagram tref = GaussDiagram::parse(kTrefoil);
    SearchResult r = unknotting_search(tref, config(MoveFamily::ArcShift, 4));
    CHECK(r.status == SearchStatus::Exact);
    CHECK(r.lower_bound == 1);
    CHECK(r.upper_bound == 1);
    int costed = 0;
    for (const MoveInstance& mi : r.witness)
        if (mi.kind == MoveKind::ArcShiftHH || mi.kind == MoveKind::ArcShiftTT ||
            mi.kind == MoveKind::ArcShiftHT || mi.kind == MoveKind::ArcShiftTH ||
            mi.kind == MoveKind::ArcShiftSign)
            costed++;
    CHECK(costed == 1);
    CHECK(replay_witness(tref, r.witness).is_parallel());
}

TEST_CASE("parallel input is exact at cost zero") {
    for (const char* code : {"", "O1+,O2+,U2+,U1+", "O1+,U1+"}) {
        GaussDiagram d = GaussDiagram::parse(code);
        for (MoveFamily fam :
             {MoveFamily::ArcShift, MoveFamily::Forbidden, MoveFamily::RegionArcShift}) {
            SearchResult r = unknotting_search(d, config(fam, d.chord_count() + 2));
            CHECK(r.status == SearchStatus::Exact);
            CHECK(r.upper_bound == 0);
            CHECK(r.witness.empty());
        }
    }
}

TEST_CASE("forbidden search on the trefoil") {
    GaussDiagram tref = GaussDiagram::parse(kTrefoil);
    SearchResult r = unknotting_search(tref, config(MoveFamily::Forbidden, 4));
    CHECK(r.status == SearchStatus::Exact); // nontrivial, so cost >= 1
    CHECK(r.lower_bound == 1);
    CHECK(r.upper_bound == 1);
    CHECK(replay_witness(tref, r.witness).is_parallel());
}

TEST_CASE("region search on the trefoil") {
    GaussDiagram tref = GaussDiagram::parse(kTrefoil);
    SearchResult r = unknotting_search(tref, config(MoveFamily::RegionArcShift, 4));
    CHECK(r.upper_bound == 1);
    CHECK(r.status == SearchStatus::Exact);
    CHECK(replay_witness(tref, r.witness).is_parallel());
}

TEST_CASE("search results are rotation invariant and deterministic") {
    GaussDiagram tref = GaussDiagram::parse(kTrefoil);
    SearchResult base = unknotting_search(tref, config(MoveFamily::ArcShift, 4));
    for (int k = 0; k < tref.size(); ++k) {
        SearchResult r = unknotting_search(tref.rotated(k), config(MoveFamily::ArcShift, 4));
        CHECK(r.upper_bound == base.upper_bound);
        CHECK(r.status == base.status);
        CHECK(search_report_json(r) ==
              search_report_json(unknotting_search(tref.rotated(k),
                                                   config(MoveFamily::ArcShift, 4))));
    }
}

TEST_CASE("budget exhaustion reports inconclusive") {
    GaussDiagram tref = GaussDiagram::parse(kTrefoil);
    SearchConfig cfg = config(MoveFamily::ArcShift, 4, 1);
    SearchResult r = unknotting_search(tref, cfg);
    CHECK(r.status == SearchStatus::Inconclusive);
    CHECK_THROWS_AS(unknotting_search(tref, config(MoveFamily::ArcShift, 1)), Error);
}

TEST_CASE("constructive unknotting on fixtures") {
    ConstructiveResult tref = constructive_unknot(GaussDiagram::parse(kTrefoil));
    CHECK(tref.arc_shift_count == 1);
    CHECK(replay_raw(GaussDiagram::parse(kTrefoil), tref.witness).is_parallel());

    CHECK(constructive_unknot(GaussDiagram{}).arc_shift_count == 0);
    CHECK(constructive_unknot(GaussDiagram::parse("O1+,O2+,U2+,U1+")).arc_shift_count == 0);
}

TEST_CASE("constructive unknotting terminates within the quadratic cap, n <= 3") {
    EnumerationSpec spec;
    spec.n = 3;
    enumerate_diagrams(spec, [](const GaussDiagram& g) {
        ConstructiveResult res = constructive_unknot(g);
        CHECK(res.arc_shift_count <= 3 * 2);
        CHECK(replay_raw(g, res.witness).is_parallel());
        return true;
    });
}

TEST_CASE("search never beats the constructive procedure's count, n <= 3 canonical") {
    EnumerationSpec spec;
    spec.n = 3;
    spec.canonical_only = true;
    enumerate_diagrams(spec, [](const GaussDiagram& g) {
        SearchResult r = unknotting_search(g, config(MoveFamily::ArcShift, 3));
        REQUIRE(r.upper_bound.has_value());
        CHECK(*r.upper_bound <= constructive_unknot(g).arc_shift_count);
        return true;
    });
}

TEST_CASE("brute force agrees with the search on sample diagrams") {
    for (const char* code :
         {kTrefoil, "O1+,O2+,U1+,U2+", "O1+,U2+,O2+,U1+", "O1+,U1+,O2-,U2-"}) {
        GaussDiagram d = GaussDiagram::parse(code);
        for (MoveFamily fam : {MoveFamily::ArcShift, MoveFamily::Forbidden}) {
            SearchResult r = unknotting_search(d, config(fam, d.chord_count()));
            std::optional<int> brute = brute_min_cost(d, fam, 2, d.chord_count());
            if (r.upper_bound && *r.upper_bound <= 2)
                CHECK(brute == *r.upper_bound);
            else
                CHECK_FALSE(brute.has_value());
        }
    }
}

TEST_CASE("forbidden witnesses convert to region sequences") {
    GaussDiagram tref = GaussDiagram::parse(kTrefoil);
    SearchResult r = unknotting_search(tref, config(MoveFamily::Forbidden, 4));
    REQUIRE(r.upper_bound == 1);
    std::vector<MoveInstance> ras = forbidden_to_ras(tref, r.witness);
    int region_ops = 0;
    for (const MoveInstance& mi : ras)
        if (mi.kind == MoveKind::Fh || mi.kind == MoveKind::Ft ||
            mi.kind == MoveKind::ForbiddenDetour)
            region_ops++;
    CHECK(region_ops == 1);
    CHECK(replay_witness(tref, ras).is_parallel());

    CHECK(forbidden_to_ras(GaussDiagram{}, {}).empty());

    // A witness that does not trivialize is rejected, as is one whose
    // moves do not apply.
    CHECK_THROWS_AS(forbidden_to_ras(tref, {}), Error);
    std::vector<MoveInstance> bogus;
    MoveInstance mi;
    mi.kind = MoveKind::Fh;
    mi.i = 1; // mixed roles on the canonical trefoil
    bogus.push_back(mi);
    CHECK_THROWS_AS(forbidden_to_ras(tref, bogus), Error);
}

TEST_CASE("search report json shape") {
    GaussDiagram tref = GaussDiagram::parse(kTrefoil);
    SearchResult r = unknotting_search(tref, config(MoveFamily::ArcShift, 4));
    auto j = nlohmann::json::parse(search_report_json(r));
    CHECK(j["family"] == "arcshift");
    CHECK(j["status"] == "exact");
    CHECK(j["lower_bound"] == 1);
    CHECK(j["upper_bound"] == 1);
    CHECK(j["witness"].is_array());
    CHECK(j["states_explored"].is_number());
    CHECK(j["max_chords"] == 4);
}
