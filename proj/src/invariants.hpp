#ifndef VKNOT_INVARIANTS_HPP
#define VKNOT_INVARIANTS_HPP

#include <map>
#include <string>

#include "gauss.hpp"

namespace vknot {

struct InvariantReport {
    int chord_count = 0;
    int writhe = 0;
    int odd_writhe = 0;
    std::map<int, Parity> parity_table;
    int arc_shift_lower_bound = 0;
};

// Sum of signs over chords of odd parity. A virtual knot invariant; zero
// on classical knots, so a nonzero value certifies a nonclassical (hence
// nontrivial) knot.
int odd_writhe(const GaussDiagram& d);

// Sum of all chord signs (diagnostic, not an invariant).
int writhe(const GaussDiagram& d);

// ceil(|odd_writhe| / 2): a lower bound for the arc shift number of the
// knot the diagram represents.
int arc_shift_lower_bound(const GaussDiagram& d);

InvariantReport report(const GaussDiagram& d);

// {"code":..., "chords":..., "writhe":..., "odd_writhe":...,
//  "parity": {"<id>": "odd"|"even"}, "arc_shift_lower_bound":...}
std::string report_json(const GaussDiagram& d);

} // namespace vknot

#endif
