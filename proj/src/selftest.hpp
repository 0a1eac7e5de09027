#ifndef VKNOT_SELFTEST_HPP
#define VKNOT_SELFTEST_HPP

#include <string>
#include <vector>

namespace vknot {

struct PropositionResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Exhaustive proposition suite over all diagrams with up to max_chords
// chords (move-level checks run at the full cap, the heavier planar and
// composite checks at min(max_chords, 3)). max_chords is limited to 4.
std::vector<PropositionResult> run_selftest(int max_chords);

std::string selftest_json(const std::vector<PropositionResult>& results);

} // namespace vknot

#endif
