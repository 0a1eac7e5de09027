#include "vknot/vknot.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "invariants.hpp"
#include "moves.hpp"
#include "planar.hpp"
#include "search.hpp"
#include "selftest.hpp"

using namespace vknot;

struct vk_diagram {
    GaussDiagram d;
};

namespace {

thread_local std::string g_error_message;
thread_local int g_error_token = -1;

vk_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::BadToken: return VK_ERR_BAD_TOKEN;
        case ErrorCode::OddOccurrence: return VK_ERR_ODD_OCCURRENCE;
        case ErrorCode::SignMismatch: return VK_ERR_SIGN_MISMATCH;
        case ErrorCode::UnknownChord: return VK_ERR_UNKNOWN_CHORD;
        case ErrorCode::SameChord: return VK_ERR_SAME_CHORD;
        case ErrorCode::RoleMismatch: return VK_ERR_ROLE_MISMATCH;
        case ErrorCode::OutOfRange: return VK_ERR_OUT_OF_RANGE;
        case ErrorCode::NotApplicable: return VK_ERR_NOT_APPLICABLE;
        case ErrorCode::DegenerateRegion: return VK_ERR_DEGENERATE_REGION;
        case ErrorCode::CapExceeded: return VK_ERR_CAP_EXCEEDED;
        case ErrorCode::InvalidWitness: return VK_ERR_INVALID_WITNESS;
        case ErrorCode::BadMoveSpec: return VK_ERR_BAD_MOVE_SPEC;
        case ErrorCode::BadArgument: return VK_ERR_BAD_ARGUMENT;
    }
    return VK_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
vk_status guarded(Fn&& fn) {
    g_error_message.clear();
    g_error_token = -1;
    try {
        fn();
        return VK_OK;
    } catch (const Error& e) {
        g_error_message = e.what();
        g_error_token = e.token;
        return status_of(e.code);
    } catch (const std::exception& e) {
        g_error_message = e.what();
        return VK_ERR_INTERNAL;
    }
}

bool parse_family(const char* name, MoveFamily* out) {
    std::string f = name ? name : "";
    if (f == "arcshift")
        *out = MoveFamily::ArcShift;
    else if (f == "forbidden")
        *out = MoveFamily::Forbidden;
    else if (f == "ras")
        *out = MoveFamily::RegionArcShift;
    else
        return false;
    return true;
}

SearchConfig make_config(const GaussDiagram& d, MoveFamily family, int max_chords,
                         long max_states) {
    SearchConfig cfg;
    cfg.family = family;
    cfg.max_chords = max_chords > 0 ? max_chords : d.chord_count() + 2;
    cfg.max_states = max_states > 0 ? max_states : 200000;
    return cfg;
}

} // namespace

extern "C" {

vk_status vk_parse(const char* code, vk_diagram** out) {
    return guarded([&] {
        if (!code || !out)
            throw Error(ErrorCode::BadArgument, "null argument");
        *out = new vk_diagram{GaussDiagram::parse(code)};
    });
}

void vk_diagram_free(vk_diagram* d) { delete d; }

vk_status vk_render(const vk_diagram* d, char** out) {
    return guarded([&] {
        if (!d || !out)
            throw Error(ErrorCode::BadArgument, "null argument");
        *out = dup_string(d->d.render());
    });
}

vk_status vk_canonical(const vk_diagram* d, vk_diagram** out) {
    return guarded([&] {
        if (!d || !out)
            throw Error(ErrorCode::BadArgument, "null argument");
        *out = new vk_diagram{d->d.canonical()};
    });
}

int vk_chord_count(const vk_diagram* d) { return d ? d->d.chord_count() : -1; }

int vk_is_parallel(const vk_diagram* d) { return d && d->d.is_parallel() ? 1 : 0; }

vk_status vk_writhe(const vk_diagram* d, int* out) {
    return guarded([&] {
        if (!d || !out)
            throw Error(ErrorCode::BadArgument, "null argument");
        *out = writhe(d->d);
    });
}

vk_status vk_odd_writhe(const vk_diagram* d, int* out) {
    return guarded([&] {
        if (!d || !out)
            throw Error(ErrorCode::BadArgument, "null argument");
        *out = odd_writhe(d->d);
    });
}

vk_status vk_arc_shift_lower_bound(const vk_diagram* d, int* out) {
    return guarded([&] {
        if (!d || !out)
            throw Error(ErrorCode::BadArgument, "null argument");
        *out = arc_shift_lower_bound(d->d);
    });
}

vk_status vk_invariants_json(const vk_diagram* d, char** json_out) {
    return guarded([&] {
        if (!d || !json_out)
            throw Error(ErrorCode::BadArgument, "null argument");
        *json_out = dup_string(report_json(d->d));
    });
}

vk_status vk_apply(const vk_diagram* d, const char* move_spec, vk_diagram** out) {
    return guarded([&] {
        if (!d || !move_spec || !out)
            throw Error(ErrorCode::BadArgument, "null argument");
        MoveInstance mi = parse_move(d->d, move_spec);
        *out = new vk_diagram{apply_move(d->d, mi)};
    });
}

vk_status vk_realize_json(const vk_diagram* d, int with_regions, char** json_out) {
    return guarded([&] {
        if (!d || !json_out)
            throw Error(ErrorCode::BadArgument, "null argument");
        *json_out = dup_string(planar_json(realize(d->d), with_regions != 0));
    });
}

vk_status vk_unknot_json(const vk_diagram* d, const char* family, int max_chords,
                         long max_states, char** json_out) {
    return guarded([&] {
        if (!d || !json_out)
            throw Error(ErrorCode::BadArgument, "null argument");
        MoveFamily fam;
        if (!parse_family(family, &fam))
            throw Error(ErrorCode::BadArgument, "family must be arcshift, forbidden or ras");
        SearchResult r = unknotting_search(d->d, make_config(d->d, fam, max_chords, max_states));
        *json_out = dup_string(search_report_json(r));
    });
}

vk_status vk_corpus_record_json(const vk_diagram* d, const char* name, const char* families,
                                int max_chords, long max_states, char** json_out) {
    return guarded([&] {
        if (!d || !json_out)
            throw Error(ErrorCode::BadArgument, "null argument");
        std::string fams = families && *families ? families : "arcshift,forbidden,ras";

        nlohmann::ordered_json record;
        record["name"] = name ? name : "";
        record["cache_key"] = d->d.canonical().render();
        record["code"] = d->d.render();
        record["report"] = nlohmann::ordered_json::parse(report_json(d->d));

        SearchConfig base = make_config(d->d, MoveFamily::ArcShift, max_chords, max_states);
        record["config"] = {{"max_chords", base.max_chords},
                            {"max_states", base.max_states},
                            {"families", fams}};

        nlohmann::ordered_json bounds = nlohmann::ordered_json::object();
        std::optional<SearchResult> forbidden_result;
        size_t start = 0;
        while (start <= fams.size()) {
            size_t comma = fams.find(',', start);
            std::string token = fams.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            start = comma == std::string::npos ? fams.size() + 1 : comma + 1;
            if (token.empty())
                continue;
            MoveFamily fam;
            if (!parse_family(token.c_str(), &fam))
                throw Error(ErrorCode::BadArgument, "unknown family '" + token + "'");
            SearchConfig cfg = base;
            cfg.family = fam;
            SearchResult r = unknotting_search(d->d, cfg);
            bounds[token] = nlohmann::ordered_json::parse(search_report_json(r));
            if (fam == MoveFamily::Forbidden)
                forbidden_result = r;
        }
        record["bounds"] = bounds;

        // Region bound never exceeds the forbidden bound: verified by
        // converting the forbidden witness into a region sequence.
        nlohmann::ordered_json ras_le = nullptr;
        if (forbidden_result && forbidden_result->upper_bound) {
            std::vector<MoveInstance> ras = forbidden_to_ras(d->d, forbidden_result->witness);
            long region_ops = 0;
            for (const MoveInstance& mi : ras)
                if (mi.kind == MoveKind::Fh || mi.kind == MoveKind::Ft ||
                    mi.kind == MoveKind::ForbiddenDetour)
                    region_ops++;
            ras_le = region_ops <= *forbidden_result->upper_bound &&
                     replay_witness(d->d, ras).is_parallel();
        }
        record["ras_le_forbidden"] = ras_le;
        *json_out = dup_string(record.dump());
    });
}

vk_status vk_selftest_json(int max_chords, char** json_out) {
    return guarded([&] {
        if (!json_out)
            throw Error(ErrorCode::BadArgument, "null argument");
        *json_out = dup_string(selftest_json(run_selftest(max_chords)));
    });
}

void vk_string_free(char* s) { std::free(s); }

const char* vk_status_name(vk_status s) {
    switch (s) {
        case VK_OK: return "OK";
        case VK_ERR_BAD_TOKEN: return "BadToken";
        case VK_ERR_ODD_OCCURRENCE: return "OddOccurrence";
        case VK_ERR_SIGN_MISMATCH: return "SignMismatch";
        case VK_ERR_UNKNOWN_CHORD: return "UnknownChord";
        case VK_ERR_SAME_CHORD: return "SameChord";
        case VK_ERR_ROLE_MISMATCH: return "RoleMismatch";
        case VK_ERR_OUT_OF_RANGE: return "OutOfRange";
        case VK_ERR_NOT_APPLICABLE: return "NotApplicable";
        case VK_ERR_DEGENERATE_REGION: return "DegenerateRegion";
        case VK_ERR_CAP_EXCEEDED: return "CapExceeded";
        case VK_ERR_INVALID_WITNESS: return "InvalidWitness";
        case VK_ERR_BAD_MOVE_SPEC: return "BadMoveSpec";
        case VK_ERR_BAD_ARGUMENT: return "BadArgument";
        case VK_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* vk_last_error_message(void) { return g_error_message.c_str(); }

int vk_last_error_token(void) { return g_error_token; }

} // extern "C"
