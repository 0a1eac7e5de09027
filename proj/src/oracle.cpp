#include "oracle.hpp"

#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace vknot {

namespace {

void matchings_rec(int m, std::vector<int>& partner, std::vector<std::pair<int, int>>& current,
                   const std::function<bool(const std::vector<std::pair<int, int>>&)>& emit,
                   bool& stopped) {
    if (stopped)
        return;
    int first = -1;
    for (int p = 0; p < m; ++p)
        if (partner[static_cast<size_t>(p)] < 0) {
            first = p;
            break;
        }
    if (first < 0) {
        if (!emit(current))
            stopped = true;
        return;
    }
    for (int q = first + 1; q < m; ++q) {
        if (partner[static_cast<size_t>(q)] >= 0)
            continue;
        partner[static_cast<size_t>(first)] = q;
        partner[static_cast<size_t>(q)] = first;
        current.emplace_back(first, q);
        matchings_rec(m, partner, current, emit, stopped);
        current.pop_back();
        partner[static_cast<size_t>(first)] = -1;
        partner[static_cast<size_t>(q)] = -1;
        if (stopped)
            return;
    }
}

} // namespace

long enumerate_diagrams(const EnumerationSpec& spec,
                        const std::function<bool(const GaussDiagram&)>& visit) {
    if (spec.n < 0 || spec.n > spec.hard_cap)
        throw Error(ErrorCode::CapExceeded,
                    "chord count " + std::to_string(spec.n) + " exceeds cap " +
                        std::to_string(spec.hard_cap));
    long count = 0;
    if (spec.n == 0) {
        GaussDiagram empty;
        if (!spec.canonical_only || empty == empty.canonical()) {
            count++;
            visit(empty);
        }
        return count;
    }

    int n = spec.n;
    int m = 2 * n;
    int sign_masks = spec.include_signs ? (1 << n) : 1;

    std::vector<int> partner(static_cast<size_t>(m), -1);
    std::vector<std::pair<int, int>> pairs;
    bool stopped = false;

    auto emit = [&](const std::vector<std::pair<int, int>>& matching) {
        for (int role_mask = 0; role_mask < (1 << n); ++role_mask) {
            for (int sign_mask = 0; sign_mask < sign_masks; ++sign_mask) {
                std::vector<Endpoint> word(static_cast<size_t>(m));
                std::map<int, int> signs;
                for (int c = 0; c < n; ++c) {
                    auto [p, q] = matching[static_cast<size_t>(c)];
                    bool flip = (role_mask >> c) & 1;
                    word[static_cast<size_t>(p)] = Endpoint{c + 1, flip ? Role::Head : Role::Tail};
                    word[static_cast<size_t>(q)] = Endpoint{c + 1, flip ? Role::Tail : Role::Head};
                    signs[c + 1] = ((sign_mask >> c) & 1) ? -1 : 1;
                }
                GaussDiagram d(std::move(word), std::move(signs));
                if (spec.canonical_only && !(d == d.canonical()))
                    continue;
                count++;
                if (!visit(d))
                    return false;
            }
        }
        return true;
    };

    matchings_rec(m, partner, pairs, emit, stopped);
    return count;
}

std::optional<int> brute_min_cost(const GaussDiagram& d, MoveFamily family, int depth,
                                  int max_chords) {
    if (family == MoveFamily::RegionArcShift)
        throw Error(ErrorCode::BadArgument, "brute_min_cost does not cover region moves");
    EnumLimits limits{max_chords};

    // dist[code] = fewest cost-1 moves; pending[c] = states discovered at
    // cost c before taking the free Reidemeister closure.
    std::unordered_map<std::string, int> dist;
    std::map<int, std::set<std::string>> pending;
    pending[0].insert(d.canonical().render());

    while (!pending.empty()) {
        auto it = pending.begin();
        int cost = it->first;
        if (cost > depth)
            break;
        std::set<std::string> frontier = std::move(it->second);
        pending.erase(it);

        // Free closure at this cost level.
        std::vector<std::string> stack;
        for (const std::string& code : frontier)
            if (!dist.count(code)) {
                dist[code] = cost;
                stack.push_back(code);
            }
        std::vector<std::string> layer;
        while (!stack.empty()) {
            std::string code = std::move(stack.back());
            stack.pop_back();
            layer.push_back(code);
            GaussDiagram g = GaussDiagram::parse(code);
            if (g.is_parallel())
                return cost;
            for (const MoveInstance& mi : enumerate_moves(g, MoveFamily::Reidemeister, limits)) {
                std::string next = apply_move(g, mi).canonical().render();
                if (!dist.count(next)) {
                    dist[next] = cost;
                    stack.push_back(next);
                }
            }
        }

        if (family == MoveFamily::Reidemeister)
            break;

        // The forbidden family's edge set includes detours at cost 2,
        // mirroring the search; the region-family enumeration lists them.
        MoveFamily listing =
            family == MoveFamily::Forbidden ? MoveFamily::RegionArcShift : family;
        for (const std::string& code : layer) {
            GaussDiagram g = GaussDiagram::parse(code);
            for (const MoveInstance& mi : enumerate_moves(g, listing, limits)) {
                int edge_cost = mi.kind == MoveKind::ForbiddenDetour ? 2 : 1;
                std::string next = apply_move(g, mi).canonical().render();
                if (!dist.count(next))
                    pending[cost + edge_cost].insert(next);
            }
        }
    }
    return std::nullopt;
}

} // namespace vknot
