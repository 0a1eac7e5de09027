#include "selftest.hpp"

#include <functional>

#include <json.hpp>

#include "invariants.hpp"
#include "moves.hpp"
#include "oracle.hpp"
#include "planar.hpp"
#include "search.hpp"

namespace vknot {

namespace {

using Check = std::pair<bool, std::string>;

long for_all(int max_n, bool canonical_only,
             const std::function<bool(const GaussDiagram&)>& visit) {
    long total = 0;
    for (int n = 0; n <= max_n; ++n) {
        EnumerationSpec spec;
        spec.n = n;
        spec.canonical_only = canonical_only;
        total += enumerate_diagrams(spec, visit);
    }
    return total;
}

Check check_arc_shift_involution(int cap) {
    long loci = 0;
    bool ok = true;
    for_all(cap, false, [&](const GaussDiagram& g) {
        for (int p = 0; p < g.size() && ok; ++p) {
            if (g.at(p).chord == g.at((p + 1) % g.size()).chord)
                continue;
            loci++;
            GaussDiagram once = arc_shift_adjacent(g, p).first;
            if (!(arc_shift_adjacent(once, p).first == g))
                ok = false;
        }
        return ok;
    });
    return {ok, std::to_string(loci) + " loci, double application restores the diagram"};
}

Check check_sign_shift(int cap) {
    long cases = 0;
    bool ok = true;
    for_all(cap, false, [&](const GaussDiagram& g) {
        for (const auto& [c, s] : g.signs()) {
            (void)s;
            cases++;
            GaussDiagram once = arc_shift_sign(g, c);
            if (!(arc_shift_sign(once, c) == g) || !(once.word() == g.word())) {
                ok = false;
                break;
            }
            for (const auto& [c2, s2] : g.signs()) {
                (void)s2;
                if (g.parity(c2) != once.parity(c2)) {
                    ok = false;
                    break;
                }
            }
        }
        return ok;
    });
    return {ok, std::to_string(cases) + " sign shifts, involutive and parity preserving"};
}

Check check_arc_shift_parity(int cap) {
    long moves = 0;
    bool ok = true;
    for_all(cap, false, [&](const GaussDiagram& g) {
        for (int p = 0; p < g.size() && ok; ++p) {
            int ca = g.at(p).chord, cb = g.at((p + 1) % g.size()).chord;
            if (ca == cb)
                continue;
            moves++;
            GaussDiagram r = arc_shift_adjacent(g, p).first;
            for (const auto& [c, s] : g.signs()) {
                (void)s;
                bool involved = c == ca || c == cb;
                if ((g.parity(c) != r.parity(c)) != involved)
                    ok = false;
            }
        }
        return ok;
    });
    return {ok, std::to_string(moves) + " shifts flip exactly the two involved parities"};
}

Check check_forbidden_signs(int cap) {
    long moves = 0;
    bool ok = true;
    for_all(cap, false, [&](const GaussDiagram& g) {
        int j = odd_writhe(g);
        for (const MoveInstance& mi : enumerate_moves(g, MoveFamily::Forbidden, EnumLimits{0})) {
            moves++;
            GaussDiagram r = apply_move(g, mi);
            if (!(r.signs() == g.signs()))
                ok = false;
            int dj = odd_writhe(r) - j;
            if (dj != 0 && dj != 2 && dj != -2)
                ok = false;
            int ca = g.at(mi.i).chord, cb = g.at((mi.i + 1) % g.size()).chord;
            for (const auto& [c, s] : g.signs()) {
                (void)s;
                bool involved = c == ca || c == cb;
                if ((g.parity(c) != r.parity(c)) != involved)
                    ok = false;
            }
        }
        return ok;
    });
    return {ok, std::to_string(moves) +
                    " moves preserve signs, flip the two parities and move J by at most 2"};
}

Check check_delta_j_adjacent(int cap) {
    long even_even = 0, odd_odd = 0, mixed = 0;
    bool ok = true;
    for_all(cap, false, [&](const GaussDiagram& g) {
        int j = odd_writhe(g);
        for (int p = 0; p < g.size() && ok; ++p) {
            int ca = g.at(p).chord, cb = g.at((p + 1) % g.size()).chord;
            if (ca == cb)
                continue;
            bool a_odd = g.parity(ca) == Parity::Odd;
            bool b_odd = g.parity(cb) == Parity::Odd;
            if (a_odd && b_odd)
                odd_odd++;
            else if (!a_odd && !b_odd)
                even_even++;
            else
                mixed++;
            if (odd_writhe(arc_shift_adjacent(g, p).first) != j - (g.sign(ca) + g.sign(cb)))
                ok = false;
        }
        return ok;
    });
    return {ok, "J drops by the sign sum in every case: both-even " + std::to_string(even_even) +
                    ", both-odd " + std::to_string(odd_odd) + ", mixed " + std::to_string(mixed)};
}

Check check_delta_j_sign_shift(int cap) {
    long on_even = 0, on_odd = 0;
    bool ok = true;
    for_all(cap, false, [&](const GaussDiagram& g) {
        int j = odd_writhe(g);
        for (const auto& [c, eps] : g.signs()) {
            int after = odd_writhe(arc_shift_sign(g, c));
            if (g.parity(c) == Parity::Even) {
                on_even++;
                if (after != j)
                    ok = false;
            } else {
                on_odd++;
                if (after != j - 2 * eps)
                    ok = false;
            }
        }
        return ok;
    });
    return {ok, "even chords keep J (" + std::to_string(on_even) + "), odd chords move it by -2*sign (" +
                    std::to_string(on_odd) + ")"};
}

Check check_j_invariance(int cap) {
    long instances = 0;
    bool ok = true;
    for_all(std::min(cap, 3), false, [&](const GaussDiagram& g) {
        int j = odd_writhe(g);
        EnumLimits limits{g.chord_count() + 2};
        for (const MoveInstance& mi : enumerate_moves(g, MoveFamily::Reidemeister, limits)) {
            instances++;
            if (odd_writhe(apply_move(g, mi)) != j) {
                ok = false;
                break;
            }
        }
        return ok;
    });
    return {ok, std::to_string(instances) + " Reidemeister instances leave J unchanged"};
}

Check check_r3_composite(int cap) {
    long configs = 0;
    bool ok = true;
    for_all(std::min(cap, 3), false, [&](const GaussDiagram& g) {
        for (const MoveInstance& mi :
             enumerate_moves(g, MoveFamily::Reidemeister, EnumLimits{g.chord_count()})) {
            if (mi.kind != MoveKind::R3)
                continue;
            configs++;
            auto [composite, used] = r3_via_arcshifts(g, mi);
            if (used != 3 || !(composite == reidemeister(g, mi)))
                ok = false;
        }
        return ok;
    });
    return {ok, std::to_string(configs) + " slide configurations match the three-shift composite"};
}

Check check_delta_composite(int cap) {
    long configs = 0;
    bool ok = true;
    for_all(std::min(cap, 3), false, [&](const GaussDiagram& g) {
        int m = g.size();
        for (int i = 0; i + 2 < m; ++i)
            for (int j = i + 1; j + 1 < m; ++j)
                for (int k = j + 1; k < m; ++k) {
                    if (!delta_matches(g, i, j, k))
                        continue;
                    configs++;
                    MoveInstance mi;
                    mi.kind = MoveKind::DeltaMove;
                    mi.i = i;
                    mi.j = j;
                    mi.k = k;
                    GaussDiagram direct = delta_move(g, mi);
                    GaussDiagram comp = g;
                    for (int p : {i, j, k})
                        comp = arc_shift_adjacent(comp, p).first;
                    if (!(comp == direct))
                        ok = false;
                }
        return ok;
    });
    return {ok, std::to_string(configs) + " exchange configurations match the composite"};
}

Check check_constructive(int cap) {
    long diagrams = 0;
    bool ok = true;
    for_all(cap, false, [&](const GaussDiagram& g) {
        diagrams++;
        ConstructiveResult res = constructive_unknot(g);
        int n = g.chord_count();
        if (res.arc_shift_count > n * (n - 1) ||
            !replay_raw(g, res.witness).is_parallel())
            ok = false;
        return ok;
    });
    return {ok, std::to_string(diagrams) +
                    " diagrams reach a parallel form within n(n-1) arc shifts"};
}

Check check_region_route(int cap) {
    long loci = 0;
    bool ok = true;
    for_all(std::min(cap, 3), false, [&](const GaussDiagram& g) {
        for (int p = 0; p < g.size() && ok; ++p) {
            if (g.at(p).chord == g.at((p + 1) % g.size()).chord)
                continue;
            loci++;
            bool same_role = g.at(p).role == g.at((p + 1) % g.size()).role;
            GaussDiagram expected =
                same_role ? forbidden(g, p).first : forbidden_detour(g, p).first;
            auto [got, ras_count] = ras_for_forbidden(g, p);
            if (ras_count != 1 || !(got == expected))
                ok = false;
        }
        return ok;
    });
    return {ok, std::to_string(loci) + " loci realized by a single region operation"};
}

Check check_region_involution(int cap) {
    long region_count = 0;
    bool ok = true;
    for_all(std::min(cap, 3), true, [&](const GaussDiagram& g) {
        PlanarDiagram p = realize(g);
        for (const Region& r : regions(p)) {
            if (region_is_degenerate(p, r))
                continue;
            region_count++;
            auto once = region_arc_shift(p, r).first;
            if (!(region_arc_shift_on(p, r, once).first == g))
                ok = false;
        }
        return ok;
    });
    return {ok, std::to_string(region_count) + " regions undo themselves on double application"};
}

Check check_region_vs_forbidden_bound(int cap) {
    long converted = 0;
    bool ok = true;
    for_all(std::min(cap, 3), true, [&](const GaussDiagram& g) {
        SearchConfig cfg;
        cfg.family = MoveFamily::Forbidden;
        cfg.max_chords = g.chord_count();
        cfg.max_cost = 2;
        SearchResult r = unknotting_search(g, cfg);
        if (!r.upper_bound)
            return true;
        converted++;
        std::vector<MoveInstance> ras = forbidden_to_ras(g, r.witness);
        long region_ops = 0;
        long forbidden_cost = 0;
        for (const MoveInstance& mi : ras) {
            if (mi.kind == MoveKind::Fh || mi.kind == MoveKind::Ft) {
                region_ops++;
                forbidden_cost++;
            } else if (mi.kind == MoveKind::ForbiddenDetour) {
                region_ops++;
                forbidden_cost += 2;
            }
        }
        if (region_ops > forbidden_cost || forbidden_cost != *r.upper_bound ||
            !replay_witness(g, ras).is_parallel())
            ok = false;
        return ok;
    });
    return {ok, std::to_string(converted) +
                    " forbidden witnesses converted to region sequences of no greater cost"};
}

} // namespace

std::vector<PropositionResult> run_selftest(int max_chords) {
    if (max_chords < 0 || max_chords > 4)
        throw Error(ErrorCode::CapExceeded, "selftest cap must be between 0 and 4");
    std::vector<PropositionResult> out;
    auto add = [&](const char* name, const Check& c) {
        out.push_back(PropositionResult{name, c.first, c.second});
    };
    add("arc-shift-involution", check_arc_shift_involution(max_chords));
    add("sign-shift-involution", check_sign_shift(max_chords));
    add("arc-shift-parity-flip", check_arc_shift_parity(max_chords));
    add("forbidden-sign-preservation", check_forbidden_signs(max_chords));
    add("delta-J-adjacent", check_delta_j_adjacent(max_chords));
    add("delta-J-sign-shift", check_delta_j_sign_shift(max_chords));
    add("J-reidemeister-invariance", check_j_invariance(max_chords));
    add("r3-via-arc-shifts", check_r3_composite(max_chords));
    add("delta-via-arc-shifts", check_delta_composite(max_chords));
    add("constructive-unknotting", check_constructive(max_chords));
    add("forbidden-via-region", check_region_route(max_chords));
    add("region-double-application", check_region_involution(max_chords));
    add("region-bound-vs-forbidden", check_region_vs_forbidden_bound(max_chords));
    return out;
}

std::string selftest_json(const std::vector<PropositionResult>& results) {
    nlohmann::ordered_json out = nlohmann::json::array();
    for (const PropositionResult& r : results) {
        nlohmann::ordered_json j;
        j["name"] = r.name;
        j["passed"] = r.passed;
        j["detail"] = r.detail;
        out.push_back(j);
    }
    return out.dump();
}

} // namespace vknot
