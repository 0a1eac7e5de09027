#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "vknot/vknot.h"

namespace {

struct DiagramHandle {
    vk_diagram* d = nullptr;
    ~DiagramHandle() { vk_diagram_free(d); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { vk_string_free(s); }
};

} // namespace

TEST_CASE("parse, render, free") {
    DiagramHandle h;
    REQUIRE(vk_parse("O1-,O2-,U1-,U2-", &h.d) == VK_OK);
    CHECK(vk_chord_count(h.d) == 2);
    CHECK(vk_is_parallel(h.d) == 0);
    StringHandle s;
    REQUIRE(vk_render(h.d, &s.s) == VK_OK);
    CHECK(std::string(s.s) == "O1-,O2-,U1-,U2-");

    DiagramHandle empty;
    REQUIRE(vk_parse("", &empty.d) == VK_OK);
    CHECK(vk_chord_count(empty.d) == 0);
    CHECK(vk_is_parallel(empty.d) == 1);
}

TEST_CASE("parse errors carry codes, messages and token positions") {
    vk_diagram* d = nullptr;
    CHECK(vk_parse("O1+,U1-", &d) == VK_ERR_SIGN_MISMATCH);
    CHECK(vk_last_error_token() == 2);
    CHECK(std::string(vk_last_error_message()).find("SignMismatch") != std::string::npos);
    CHECK(vk_parse("O1+,U2+", &d) == VK_ERR_ODD_OCCURRENCE);
    CHECK(vk_parse("X1+", &d) == VK_ERR_BAD_TOKEN);
    CHECK(std::string(vk_status_name(VK_ERR_BAD_TOKEN)) == "BadToken");
}

TEST_CASE("invariants through the C surface") {
    DiagramHandle h;
    REQUIRE(vk_parse("O1-,O2-,U1-,U2-", &h.d) == VK_OK);
    int value = 0;
    REQUIRE(vk_odd_writhe(h.d, &value) == VK_OK);
    CHECK(value == -2);
    REQUIRE(vk_writhe(h.d, &value) == VK_OK);
    CHECK(value == -2);
    REQUIRE(vk_arc_shift_lower_bound(h.d, &value) == VK_OK);
    CHECK(value == 1);

    StringHandle s;
    REQUIRE(vk_invariants_json(h.d, &s.s) == VK_OK);
    auto j = nlohmann::json::parse(s.s);
    CHECK(j["odd_writhe"] == -2);
    CHECK(j["arc_shift_lower_bound"] == 1);
}

TEST_CASE("apply moves") {
    DiagramHandle h;
    REQUIRE(vk_parse("O1+,O2+,U1+,U2+", &h.d) == VK_OK);
    DiagramHandle shifted;
    REQUIRE(vk_apply(h.d, "as:2", &shifted.d) == VK_OK);
    StringHandle s;
    REQUIRE(vk_render(shifted.d, &s.s) == VK_OK);
    CHECK(std::string(s.s) == "O1-,O2-,U2-,U1-");

    DiagramHandle kink;
    REQUIRE(vk_parse("O1+,U1+", &kink.d) == VK_OK);
    vk_diagram* out = nullptr;
    CHECK(vk_apply(kink.d, "f:0", &out) == VK_ERR_SAME_CHORD);
    CHECK(vk_apply(h.d, "nope:1", &out) == VK_ERR_BAD_MOVE_SPEC);
}

TEST_CASE("canonical representative") {
    DiagramHandle a, b;
    REQUIRE(vk_parse("U2-,O1-,O2-,U1-", &a.d) == VK_OK);
    REQUIRE(vk_canonical(a.d, &b.d) == VK_OK);
    StringHandle s;
    REQUIRE(vk_render(b.d, &s.s) == VK_OK);
    CHECK(std::string(s.s) == "O1-,O2-,U1-,U2-");
}

TEST_CASE("realization json") {
    DiagramHandle h;
    REQUIRE(vk_parse("O1-,O2-,U1-,U2-", &h.d) == VK_OK);
    StringHandle s;
    REQUIRE(vk_realize_json(h.d, 1, &s.s) == VK_OK);
    auto j = nlohmann::json::parse(s.s);
    CHECK(j["vertices"].size() == 3);
    CHECK(j["regions"].size() == 5);
}

TEST_CASE("unknotting search json") {
    DiagramHandle h;
    REQUIRE(vk_parse("O1-,O2-,U1-,U2-", &h.d) == VK_OK);
    StringHandle s;
    REQUIRE(vk_unknot_json(h.d, "arcshift", 4, 0, &s.s) == VK_OK);
    auto j = nlohmann::json::parse(s.s);
    CHECK(j["status"] == "exact");
    CHECK(j["upper_bound"] == 1);

    char* out = nullptr;
    CHECK(vk_unknot_json(h.d, "bogus", 4, 0, &out) == VK_ERR_BAD_ARGUMENT);
}

TEST_CASE("corpus record json") {
    DiagramHandle h;
    REQUIRE(vk_parse("O1-,O2-,U1-,U2-", &h.d) == VK_OK);
    StringHandle s;
    REQUIRE(vk_corpus_record_json(h.d, "trefoil", nullptr, 0, 0, &s.s) == VK_OK);
    auto j = nlohmann::json::parse(s.s);
    CHECK(j["name"] == "trefoil");
    CHECK(j["cache_key"] == "O1-,O2-,U1-,U2-");
    CHECK(j["report"]["odd_writhe"] == -2);
    CHECK(j["bounds"]["arcshift"]["status"] == "exact");
    CHECK(j["bounds"]["forbidden"]["upper_bound"] == 1);
    CHECK(j["bounds"]["ras"]["upper_bound"] == 1);
    CHECK(j["ras_le_forbidden"] == true);
    CHECK(j["config"]["max_chords"] == 4);
}

TEST_CASE("selftest at cap zero passes vacuously") {
    StringHandle s;
    REQUIRE(vk_selftest_json(0, &s.s) == VK_OK);
    auto j = nlohmann::json::parse(s.s);
    CHECK(j.is_array());
    CHECK(j.size() > 0);
    for (const auto& prop : j)
        CHECK(prop["passed"] == true);

    char* out = nullptr;
    CHECK(vk_selftest_json(9, &out) == VK_ERR_CAP_EXCEEDED);
}
