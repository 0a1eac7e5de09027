#ifndef VKNOT_ORACLE_HPP
#define VKNOT_ORACLE_HPP

#include <functional>
#include <optional>

#include "moves.hpp"

namespace vknot {

// Raw count = (2n)!/(n! 2^n) pairings x 2^n role orientations x 2^n signs
// when include_signs is set, so the hard cap keeps runs tractable.
struct EnumerationSpec {
    int n = 0;
    bool include_signs = true;
    bool canonical_only = false;
    int hard_cap = 5;
};

// Yields every valid diagram with exactly n chords (one representative
// per canonical class when canonical_only). The visitor returns false to
// stop early. Returns the number of diagrams visited.
long enumerate_diagrams(const EnumerationSpec& spec,
                        const std::function<bool(const GaussDiagram&)>& visit);

// Exhaustive layered breadth-first minimum number of cost-1 family moves
// (with a free Reidemeister closure between layers, insertions capped at
// max_chords) to reach a parallel chord diagram; nullopt if above depth.
// Detour moves count 2 in the Forbidden family.
std::optional<int> brute_min_cost(const GaussDiagram& d, MoveFamily family, int depth,
                                  int max_chords);

} // namespace vknot

#endif
