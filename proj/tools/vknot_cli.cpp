// Command-line front end for the vknot shared library. Exit codes:
// 0 success, 1 parse error, 2 move not applicable, 3 inconclusive
// search, 4 partial corpus failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vknot/vknot.h"

namespace {

using nlohmann::json;

struct DiagramDeleter {
    void operator()(vk_diagram* d) const { vk_diagram_free(d); }
};
using Diagram = std::unique_ptr<vk_diagram, DiagramDeleter>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    vk_string_free(s);
    return out;
}

void print_error(vk_status status) {
    const char* name = vk_status_name(status);
    int token = vk_last_error_token();
    if (token >= 0)
        std::cout << name << " at token " << token << "\n";
    else
        std::cout << name << "\n";
    std::cerr << vk_last_error_message() << "\n";
}

int parse_or_fail(const std::string& code, Diagram* out) {
    vk_diagram* raw = nullptr;
    vk_status status = vk_parse(code.c_str(), &raw);
    if (status != VK_OK) {
        print_error(status);
        return 1;
    }
    out->reset(raw);
    return 0;
}

struct Budgets {
    int max_chords = 0; // 0: per-diagram default (n + 2)
    long max_states = 0;
    std::string families = "arcshift,forbidden,ras";
};

// Config files are plain "key=value" lines; '#' starts a comment.
// Recognized keys: max_chords, max_states, families.
bool load_config(const std::string& path, Budgets* budgets, std::string* error) {
    std::ifstream in(path);
    if (!in) {
        *error = "cannot open config file '" + path + "'";
        return false;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        size_t begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos)
            continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            *error = path + ":" + std::to_string(lineno) + ": expected key=value";
            return false;
        }
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "max_chords")
                budgets->max_chords = std::stoi(value);
            else if (key == "max_states")
                budgets->max_states = std::stol(value);
            else if (key == "families")
                budgets->families = value;
            else {
                *error = path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'";
                return false;
            }
        } catch (const std::exception&) {
            *error = path + ":" + std::to_string(lineno) + ": bad value '" + value + "'";
            return false;
        }
    }
    return true;
}

int cmd_validate(const std::string& code) {
    Diagram d;
    if (parse_or_fail(code, &d))
        return 1;
    int chords = vk_chord_count(d.get());
    if (chords == 0)
        std::cout << "valid, 0 chords (unknot)\n";
    else
        std::cout << "valid, " << chords << " chords\n";
    return 0;
}

int cmd_invariants(const std::string& code, bool tsv) {
    Diagram d;
    if (parse_or_fail(code, &d))
        return 1;
    char* raw = nullptr;
    if (vk_invariants_json(d.get(), &raw) != VK_OK) {
        std::cerr << vk_last_error_message() << "\n";
        return 1;
    }
    std::string text = take_string(raw);
    if (!tsv) {
        std::cout << text << "\n";
        return 0;
    }
    json j = json::parse(text);
    std::cout << j["code"].get<std::string>() << "\t" << j["chords"] << "\t" << j["writhe"]
              << "\t" << j["odd_writhe"] << "\t" << j["arc_shift_lower_bound"] << "\n";
    return 0;
}

int cmd_apply(const std::string& code, const std::string& move) {
    Diagram d;
    if (parse_or_fail(code, &d))
        return 1;
    vk_diagram* out = nullptr;
    vk_status status = vk_apply(d.get(), move.c_str(), &out);
    if (status != VK_OK) {
        print_error(status);
        return 2;
    }
    Diagram result(out);
    char* raw = nullptr;
    vk_render(result.get(), &raw);
    std::cout << take_string(raw) << "\n";
    return 0;
}

int cmd_unknot(const std::string& code, const std::string& family, const Budgets& budgets) {
    Diagram d;
    if (parse_or_fail(code, &d))
        return 1;
    char* raw = nullptr;
    vk_status status = vk_unknot_json(d.get(), family.c_str(), budgets.max_chords,
                                      budgets.max_states, &raw);
    if (status != VK_OK) {
        print_error(status);
        return 1;
    }
    std::string text = take_string(raw);
    std::cout << text << "\n";
    return json::parse(text)["status"] == "inconclusive" ? 3 : 0;
}

int cmd_realize(const std::string& code, bool with_regions) {
    Diagram d;
    if (parse_or_fail(code, &d))
        return 1;
    char* raw = nullptr;
    if (vk_realize_json(d.get(), with_regions ? 1 : 0, &raw) != VK_OK) {
        std::cerr << vk_last_error_message() << "\n";
        return 1;
    }
    std::cout << take_string(raw) << "\n";
    return 0;
}

int cmd_selftest(int max_chords) {
    char* raw = nullptr;
    vk_status status = vk_selftest_json(max_chords, &raw);
    if (status != VK_OK) {
        print_error(status);
        return 1;
    }
    json props = json::parse(take_string(raw));
    bool all_passed = true;
    for (const auto& p : props) {
        bool passed = p["passed"].get<bool>();
        all_passed = all_passed && passed;
        std::cout << (passed ? "PASS " : "FAIL ") << p["name"].get<std::string>() << ": "
                  << p["detail"].get<std::string>() << "\n";
    }
    std::cout << (all_passed ? "all propositions passed\n" : "FAILURES present\n");
    return all_passed ? 0 : 1;
}

int cmd_corpus(const std::string& file, const std::string& out_path, const Budgets& budgets) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "cannot open corpus file '" << file << "'\n";
        return 1;
    }

    // Resume: records already keyed in the output are not recomputed.
    std::map<std::string, json> existing;
    {
        std::ifstream prior(out_path);
        std::string line;
        while (prior && std::getline(prior, line)) {
            if (line.empty())
                continue;
            try {
                json j = json::parse(line);
                existing[j.at("cache_key").get<std::string>()] = j;
            } catch (const std::exception&) {
                std::cerr << "warning: ignoring malformed cache line\n";
            }
        }
    }

    std::ofstream out(out_path, std::ios::app);
    if (!out) {
        std::cerr << "cannot open output file '" << out_path << "'\n";
        return 1;
    }

    bool any_error = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty() || line[0] == '#')
            continue;
        size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            std::cerr << file << ":" << lineno << ": expected name<TAB>code\n";
            any_error = true;
            continue;
        }
        std::string name = line.substr(0, tab);
        std::string code = line.substr(tab + 1);

        vk_diagram* raw = nullptr;
        if (vk_parse(code.c_str(), &raw) != VK_OK) {
            std::cerr << file << ":" << lineno << " (" << name
                      << "): " << vk_last_error_message() << "\n";
            any_error = true;
            continue;
        }
        Diagram d(raw);

        vk_diagram* canon_raw = nullptr;
        vk_canonical(d.get(), &canon_raw);
        Diagram canon(canon_raw);
        char* key_raw = nullptr;
        vk_render(canon.get(), &key_raw);
        std::string cache_key = take_string(key_raw);

        auto it = existing.find(cache_key);
        if (it != existing.end()) {
            int resolved = budgets.max_chords > 0 ? budgets.max_chords
                                                  : vk_chord_count(d.get()) + 2;
            long states = budgets.max_states > 0 ? budgets.max_states : 200000;
            const json& cfg = it->second["config"];
            if (cfg["max_chords"] != resolved || cfg["max_states"] != states ||
                cfg["families"] != budgets.families)
                std::cerr << "warning: cached record for '" << name
                          << "' was computed under a different config; keeping it\n";
            continue;
        }

        char* record_raw = nullptr;
        vk_status status =
            vk_corpus_record_json(d.get(), name.c_str(), budgets.families.c_str(),
                                  budgets.max_chords, budgets.max_states, &record_raw);
        if (status != VK_OK) {
            std::cerr << file << ":" << lineno << " (" << name
                      << "): " << vk_last_error_message() << "\n";
            any_error = true;
            continue;
        }
        std::string record = take_string(record_raw);
        json parsed = json::parse(record);
        if (parsed["ras_le_forbidden"].is_boolean() && !parsed["ras_le_forbidden"].get<bool>())
            std::cerr << "violation: region bound exceeds forbidden bound for '" << name
                      << "'\n";
        out << record << "\n";
        out.flush();
        existing[cache_key] = parsed;
    }
    return any_error ? 4 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauss-diagram calculus for virtual knots"};
    app.require_subcommand(1);

    std::string code, move, family = "arcshift", out_path = "results.jsonl";
    std::string corpus_file, config_path;
    bool tsv = false, json_flag = false, with_regions = false;
    Budgets budgets;
    int flag_max_chords = 0;
    long flag_max_states = 0;
    std::string flag_families;
    int selftest_chords = 3;

    auto* validate = app.add_subcommand("validate", "Parse a Gauss code and report diagnostics");
    validate->add_option("code", code)->required();

    auto* invariants = app.add_subcommand("invariants", "Invariant report for a Gauss code");
    invariants->add_option("code", code)->required();
    invariants->add_flag("--json", json_flag, "JSON output (default)");
    invariants->add_flag("--tsv", tsv, "name, chords, writhe, odd_writhe, bound");

    auto* apply = app.add_subcommand("apply", "Apply one move to a diagram");
    apply->add_option("code", code)->required();
    apply->add_option("--move", move, "Move spec, e.g. as:2 or f:0")->required();

    auto* unknot = app.add_subcommand("unknot", "Bounded unknotting search");
    unknot->add_option("code", code)->required();
    unknot->add_option("--set", family, "arcshift | forbidden | ras");
    unknot->add_option("--max-chords", flag_max_chords, "Cap on diagram growth");
    unknot->add_option("--max-states", flag_max_states, "Explored-state budget");
    unknot->add_option("--config", config_path, "key=value config file");

    auto* corpus = app.add_subcommand("corpus", "Batch-process name<TAB>code records");
    corpus->add_option("file", corpus_file)->required();
    corpus->add_option("--out", out_path, "JSON Lines results cache");
    corpus->add_option("--max-chords", flag_max_chords, "Cap on diagram growth");
    corpus->add_option("--max-states", flag_max_states, "Explored-state budget");
    corpus->add_option("--families", flag_families, "Comma list of bound families");
    corpus->add_option("--config", config_path, "key=value config file");

    auto* realize = app.add_subcommand("realize", "Planar realization as JSON");
    realize->add_option("code", code)->required();
    realize->add_flag("--regions", with_regions, "Include the region list");

    auto* selftest = app.add_subcommand("selftest", "Run the proposition suite");
    selftest->add_option("--max-chords", selftest_chords, "Exhaustive cap (0..4)");

    CLI11_PARSE(app, argc, argv);

    if (!config_path.empty()) {
        std::string error;
        if (!load_config(config_path, &budgets, &error)) {
            std::cerr << error << "\n";
            return 1;
        }
    }
    if (flag_max_chords > 0)
        budgets.max_chords = flag_max_chords;
    if (flag_max_states > 0)
        budgets.max_states = flag_max_states;
    if (!flag_families.empty())
        budgets.families = flag_families;

    if (validate->parsed())
        return cmd_validate(code);
    if (invariants->parsed())
        return cmd_invariants(code, tsv);
    if (apply->parsed())
        return cmd_apply(code, move);
    if (unknot->parsed())
        return cmd_unknot(code, family, budgets);
    if (corpus->parsed())
        return cmd_corpus(corpus_file, out_path, budgets);
    if (realize->parsed())
        return cmd_realize(code, with_regions);
    if (selftest->parsed())
        return cmd_selftest(selftest_chords);
    return 0;
}
