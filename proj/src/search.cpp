#include "search.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "invariants.hpp"
#include "planar.hpp"

namespace vknot {

namespace {

int family_lower_bound(const GaussDiagram& d, MoveFamily family) {
    if (family == MoveFamily::ArcShift)
        return arc_shift_lower_bound(d);
    // A nonzero odd writhe certifies a nontrivial knot, so at least one
    // costed move is needed; no sharper bound is available here.
    return odd_writhe(d) != 0 ? 1 : 0;
}

int family_heuristic(const GaussDiagram& d, MoveFamily family) {
    if (family == MoveFamily::RegionArcShift)
        return 0;
    // Every costed edge changes J by at most 2 per unit cost and free
    // moves preserve it, so ceil(|J|/2) is admissible and consistent.
    int j = odd_writhe(d);
    if (j < 0)
        j = -j;
    return (j + 1) / 2;
}

struct EdgeOut {
    GaussDiagram to;
    int cost = 1;
    std::vector<MoveInstance> moves;
};

// The sign-preserving transposition instance at an adjacent pair.
MoveInstance transposition_instance(const GaussDiagram& d, int pos) {
    MoveInstance mi;
    mi.i = pos;
    Role ra = d.at(pos).role;
    Role rb = d.at((pos + 1) % d.size()).role;
    if (ra == rb)
        mi.kind = ra == Role::Head ? MoveKind::Fh : MoveKind::Ft;
    else
        mi.kind = MoveKind::ForbiddenDetour;
    return mi;
}

std::vector<EdgeOut> costed_edges(const GaussDiagram& d, MoveFamily family) {
    std::vector<EdgeOut> out;
    if (family == MoveFamily::ArcShift || family == MoveFamily::Forbidden) {
        // The forbidden family also explores detours, at their cost of
        // two forbidden moves; the region-family enumeration lists
        // exactly the plain loci plus those detour loci.
        MoveFamily listing =
            family == MoveFamily::Forbidden ? MoveFamily::RegionArcShift : family;
        for (const MoveInstance& mi : enumerate_moves(d, listing, EnumLimits{0})) {
            EdgeOut e;
            e.to = apply_move(d, mi);
            e.cost = mi.kind == MoveKind::ForbiddenDetour ? 2 : 1;
            e.moves = {mi};
            out.push_back(std::move(e));
        }
        return out;
    }

    // Region moves: every non-degenerate region of the realization, plus
    // the constructed single-region representatives at each forbidden or
    // detour locus. A region's net effect is a set of disjoint adjacent
    // transpositions with all signs restored, so its witness serializes
    // as those transpositions.
    PlanarDiagram p = realize(d);
    for (const Region& r : regions(p)) {
        if (region_is_degenerate(p, r))
            continue;
        auto [shifted, arc_count] = region_arc_shift(p, r);
        (void)arc_count;
        if (shifted == d)
            continue;
        EdgeOut e;
        e.cost = 1;
        GaussDiagram check = d;
        for (const BoundaryArc& a : boundary_arcs(p, r)) {
            const PlanarVertex& vf = p.vertex(a.v_from);
            const PlanarVertex& vt = p.vertex(a.v_to);
            if (vf.kind != CrossingKind::Classical || vt.kind != CrossingKind::Classical)
                continue;
            Role role_from = p.dart_is_over(a.dart) ? Role::Tail : Role::Head;
            int pa = check.position_of(vf.chord, role_from);
            int pb = check.position_of(
                vt.chord, p.dart_is_over(p.sigma(a.dart)) ? Role::Tail : Role::Head);
            int locus = (pa + 1) % check.size() == pb ? pa : pb;
            MoveInstance mi = transposition_instance(check, locus);
            check = apply_move(check, mi);
            e.moves.push_back(mi);
        }
        if (!(check == shifted))
            throw std::logic_error("region move does not reduce to its transpositions");
        e.to = std::move(shifted);
        out.push_back(std::move(e));
    }
    for (const MoveInstance& mi : enumerate_moves(d, MoveFamily::RegionArcShift, EnumLimits{0})) {
        auto [shifted, ras_count] = ras_for_forbidden(d, mi.i);
        (void)ras_count;
        EdgeOut e;
        e.to = std::move(shifted);
        e.cost = 1;
        e.moves = {mi};
        out.push_back(std::move(e));
    }
    return out;
}

struct NodeInfo {
    int g = 0;
    int h = 0;
    bool closed = false;
    std::string parent;
    std::vector<MoveInstance> via;
};

} // namespace

TrivialityVerdict is_trivial_bounded(const GaussDiagram& d, const SearchConfig& cfg) {
    TrivialityVerdict v;
    if (d.is_parallel()) {
        v.verdict = Verdict::Trivial;
        return v;
    }
    if (odd_writhe(d) != 0) {
        // J is invariant under the free moves and vanishes on parallel
        // diagrams, so no free reduction can exist.
        v.verdict = Verdict::Nontrivial;
        return v;
    }
    EnumLimits limits{std::max(cfg.max_chords, d.chord_count())};
    GaussDiagram start = d.canonical();
    std::unordered_map<std::string, std::pair<std::string, MoveInstance>> parent;
    std::queue<std::string> pending;
    std::string code0 = start.render();
    parent.emplace(code0, std::make_pair(std::string{}, MoveInstance{}));
    pending.push(code0);
    long explored = 0;
    while (!pending.empty() && explored < cfg.max_states) {
        std::string code = std::move(pending.front());
        pending.pop();
        explored++;
        GaussDiagram g = GaussDiagram::parse(code);
        if (g.is_parallel()) {
            std::vector<MoveInstance> path;
            std::string at = code;
            while (at != code0) {
                auto& [prev, via] = parent.at(at);
                path.push_back(via);
                at = prev;
            }
            std::reverse(path.begin(), path.end());
            v.verdict = Verdict::Trivial;
            v.witness = std::move(path);
            return v;
        }
        for (const MoveInstance& mi : enumerate_moves(g, MoveFamily::Reidemeister, limits)) {
            std::string next = apply_move(g, mi).canonical().render();
            if (parent.emplace(next, std::make_pair(code, mi)).second)
                pending.push(next);
        }
    }
    v.verdict = Verdict::Unknown;
    return v;
}

SearchResult unknotting_search(const GaussDiagram& d, const SearchConfig& cfg) {
    if (cfg.max_chords < d.chord_count())
        throw Error(ErrorCode::BadArgument, "max_chords below the starting chord count");
    if (cfg.max_states <= 0)
        throw Error(ErrorCode::BadArgument, "max_states must be positive");

    SearchResult result;
    result.family = cfg.family;
    result.max_chords = cfg.max_chords;
    result.lower_bound = family_lower_bound(d, cfg.family);

    EnumLimits limits{cfg.max_chords};
    GaussDiagram start = d.canonical();
    std::string code0 = start.render();

    std::unordered_map<std::string, NodeInfo> nodes;
    std::set<std::pair<int, std::string>> open; // (g + h, canonical code)

    {
        NodeInfo n;
        n.g = 0;
        n.h = family_heuristic(start, cfg.family);
        nodes.emplace(code0, n);
        open.insert({n.h, code0});
    }

    std::optional<std::pair<int, std::string>> best_goal; // (g, code)
    std::optional<std::string> popped_goal;
    bool budget_hit = false;

    auto note_goal = [&](const GaussDiagram& g, int cost, const std::string& code) {
        if (g.is_parallel() && (!best_goal || cost < best_goal->first))
            best_goal = {cost, code};
    };
    note_goal(start, 0, code0);

    while (!open.empty()) {
        auto [f, code] = *open.begin();
        (void)f;
        open.erase(open.begin());
        NodeInfo& node = nodes.at(code);
        if (node.closed)
            continue;
        node.closed = true;
        result.states_explored++;

        GaussDiagram g = GaussDiagram::parse(code);
        if (g.is_parallel()) {
            popped_goal = code;
            break;
        }
        if (result.states_explored >= cfg.max_states) {
            budget_hit = true;
            break;
        }

        int base_g = node.g;
        auto relax = [&](const GaussDiagram& to, int edge_cost,
                         const std::vector<MoveInstance>& moves) {
            int ng = base_g + edge_cost;
            if (cfg.max_cost && ng > *cfg.max_cost)
                return;
            GaussDiagram canon = to.canonical();
            std::string ncode = canon.render();
            auto it = nodes.find(ncode);
            if (it != nodes.end() && it->second.g <= ng)
                return;
            if (it == nodes.end()) {
                NodeInfo n;
                n.h = family_heuristic(canon, cfg.family);
                it = nodes.emplace(ncode, n).first;
            } else {
                open.erase({it->second.g + it->second.h, ncode});
            }
            it->second.g = ng;
            it->second.parent = code;
            it->second.via = moves;
            open.insert({ng + it->second.h, ncode});
            note_goal(canon, ng, ncode);
        };

        for (const MoveInstance& mi : enumerate_moves(g, MoveFamily::Reidemeister, limits))
            relax(apply_move(g, mi), 0, {mi});
        for (const EdgeOut& e : costed_edges(g, cfg.family))
            relax(e.to, e.cost, e.moves);
    }

    auto witness_to = [&](const std::string& goal_code) {
        std::vector<MoveInstance> path;
        std::string at = goal_code;
        while (at != code0) {
            const NodeInfo& n = nodes.at(at);
            path.insert(path.end(), n.via.rbegin(), n.via.rend());
            at = n.parent;
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    if (popped_goal) {
        int cost = nodes.at(*popped_goal).g;
        result.upper_bound = cost;
        result.witness = witness_to(*popped_goal);
        result.status = cost == result.lower_bound ? SearchStatus::Exact
                                                   : SearchStatus::UpperBound;
        return result;
    }
    result.status = SearchStatus::Inconclusive;
    if (budget_hit && best_goal) {
        result.upper_bound = best_goal->first;
        result.witness = witness_to(best_goal->second);
    }
    return result;
}

ConstructiveResult constructive_unknot(const GaussDiagram& d) {
    ConstructiveResult res;
    GaussDiagram current = d;
    std::vector<int> chords;
    for (const auto& [c, s] : d.signs()) {
        (void)s;
        chords.push_back(c);
    }
    for (int c : chords) {
        int m = current.size();
        int head = current.position_of(c, Role::Head);
        int tail = current.position_of(c, Role::Tail);
        int fwd = (tail - head - 1 + m) % m;
        int bwd = (head - tail - 1 + m) % m;
        bool forward = fwd <= bwd;
        auto interleaves_any = [&] {
            for (const auto& [other, s] : current.signs()) {
                (void)s;
                if (other != c && current.interleaves(c, other))
                    return true;
            }
            return false;
        };
        while (interleaves_any()) {
            int locus = forward ? head : (head - 1 + m) % m;
            MoveInstance mi;
            auto [next, kind] = arc_shift_adjacent(current, locus);
            mi.kind = kind;
            mi.i = locus;
            res.witness.push_back(mi);
            res.arc_shift_count++;
            current = std::move(next);
            head = forward ? (head + 1) % m : (head - 1 + m) % m;
        }
    }
    if (!current.is_parallel())
        throw std::logic_error("constructive unknotting did not reach a parallel diagram");
    return res;
}

std::vector<MoveInstance> forbidden_to_ras(const GaussDiagram& d,
                                           const std::vector<MoveInstance>& witness) {
    std::vector<MoveInstance> out;
    GaussDiagram current = d.canonical();
    for (const MoveInstance& mi : witness) {
        bool costed = mi.kind == MoveKind::Fh || mi.kind == MoveKind::Ft ||
                      mi.kind == MoveKind::ForbiddenDetour;
        GaussDiagram next;
        try {
            next = apply_move(current, mi);
            if (costed) {
                auto [via_region, ras_count] = ras_for_forbidden(current, mi.i);
                (void)ras_count;
                if (!(via_region == next))
                    throw Error(ErrorCode::InvalidWitness,
                                "region route disagrees with the forbidden move");
            }
        } catch (const Error& e) {
            if (e.code == ErrorCode::InvalidWitness)
                throw;
            throw Error(ErrorCode::InvalidWitness,
                        std::string("witness replay failed: ") + e.what());
        }
        out.push_back(mi);
        current = next.canonical();
    }
    if (!current.is_parallel())
        throw Error(ErrorCode::InvalidWitness, "witness does not reach a parallel diagram");
    return out;
}

GaussDiagram replay_witness(const GaussDiagram& d, const std::vector<MoveInstance>& witness) {
    GaussDiagram current = d.canonical();
    for (const MoveInstance& mi : witness)
        current = apply_move(current, mi).canonical();
    return current;
}

GaussDiagram replay_raw(const GaussDiagram& d, const std::vector<MoveInstance>& witness) {
    GaussDiagram current = d;
    for (const MoveInstance& mi : witness)
        current = apply_move(current, mi);
    return current;
}

std::string search_report_json(const SearchResult& r) {
    nlohmann::ordered_json out;
    out["family"] = move_family_name(r.family);
    switch (r.status) {
        case SearchStatus::Exact: out["status"] = "exact"; break;
        case SearchStatus::UpperBound: out["status"] = "upper"; break;
        case SearchStatus::Inconclusive: out["status"] = "inconclusive"; break;
    }
    out["lower_bound"] = r.lower_bound;
    if (r.upper_bound)
        out["upper_bound"] = *r.upper_bound;
    else
        out["upper_bound"] = nullptr;
    nlohmann::ordered_json w = nlohmann::json::array();
    for (const MoveInstance& mi : r.witness)
        w.push_back(format_move(mi));
    out["witness"] = w;
    out["states_explored"] = r.states_explored;
    out["max_chords"] = r.max_chords;
    return out.dump();
}

} // namespace vknot
