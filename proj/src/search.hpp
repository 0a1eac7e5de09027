#ifndef VKNOT_SEARCH_HPP
#define VKNOT_SEARCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "moves.hpp"

namespace vknot {

struct SearchConfig {
    MoveFamily family = MoveFamily::ArcShift; // the cost-1 move set
    int max_chords = 0;                       // cap on diagram growth
    long max_states = 200000;                 // explored-state budget
    std::optional<int> max_cost;              // optional cost ceiling
};

enum class Verdict { Trivial, Nontrivial, Unknown };

struct TrivialityVerdict {
    Verdict verdict = Verdict::Unknown;
    // Trivial: a free-move reduction to a parallel diagram (canonical
    // replay convention). Nontrivial: witnessed by odd_writhe != 0.
    std::vector<MoveInstance> witness;
};

enum class SearchStatus { Exact, UpperBound, Inconclusive };

struct SearchResult {
    MoveFamily family = MoveFamily::ArcShift;
    SearchStatus status = SearchStatus::Inconclusive;
    int lower_bound = 0;
    std::optional<int> upper_bound;
    // Cost-1 moves interleaved with free Reidemeister moves; a region
    // move appears as its sign-preserving transpositions. Canonical
    // replay convention (see replay_witness).
    std::vector<MoveInstance> witness;
    long states_explored = 0;
    int max_chords = 0;
};

// Trivial if the diagram is parallel or a free Reidemeister search
// (insertions capped at max_chords) reaches a parallel diagram within
// budget; Nontrivial if odd_writhe != 0; Unknown otherwise.
TrivialityVerdict is_trivial_bounded(const GaussDiagram& d, const SearchConfig& cfg);

// Uniform-cost search over canonicalized states. Free edges are the
// Reidemeister instances within max_chords; cost-1 edges come from the
// configured family (region moves draw on realized regions plus the
// constructed single-region representatives, and the detour costs 2 in
// the Forbidden family). Goal: a parallel chord diagram. Exact is claimed
// only when the found cost meets the sound lower bound.
SearchResult unknotting_search(const GaussDiagram& d, const SearchConfig& cfg);

struct ConstructiveResult {
    // Raw replay convention: moves apply sequentially, no canonicalizing.
    std::vector<MoveInstance> witness;
    int arc_shift_count = 0;
};

// Clears chords one by one: the current chord's head sweeps past every
// endpoint between it and its tail on the shorter side, one adjacent arc
// shift per endpoint, until nothing interleaves it. Terminates at a
// parallel diagram in at most n(n-1) arc shifts.
ConstructiveResult constructive_unknot(const GaussDiagram& d);

// Replaces each forbidden-move instance of a replayable witness with the
// move realized through its single-region representative (detours too),
// validating the region route step by step. The returned sequence has
// one region operation per forbidden/detour instance.
std::vector<MoveInstance> forbidden_to_ras(const GaussDiagram& d,
                                           const std::vector<MoveInstance>& witness);

// Canonical replay: fold moves over canonical forms, canonicalizing after
// each application.
GaussDiagram replay_witness(const GaussDiagram& d, const std::vector<MoveInstance>& witness);

// Raw replay: apply moves to the diagram as-is.
GaussDiagram replay_raw(const GaussDiagram& d, const std::vector<MoveInstance>& witness);

// {"family":..., "status":..., "lower_bound":..., "upper_bound":...,
//  "witness": [...], "states_explored":..., "max_chords":...}
std::string search_report_json(const SearchResult& r);

} // namespace vknot

#endif
