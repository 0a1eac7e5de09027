#include "invariants.hpp"

#include <json.hpp>

namespace vknot {

int odd_writhe(const GaussDiagram& d) {
    int j = 0;
    for (const auto& [chord, s] : d.signs())
        if (d.parity(chord) == Parity::Odd)
            j += s;
    return j;
}

int writhe(const GaussDiagram& d) {
    int w = 0;
    for (const auto& [chord, s] : d.signs())
        w += s;
    return w;
}

int arc_shift_lower_bound(const GaussDiagram& d) {
    int j = odd_writhe(d);
    if (j < 0)
        j = -j;
    return (j + 1) / 2;
}

InvariantReport report(const GaussDiagram& d) {
    InvariantReport r;
    r.chord_count = d.chord_count();
    for (const auto& [chord, s] : d.signs()) {
        Parity p = d.parity(chord);
        r.parity_table[chord] = p;
        r.writhe += s;
        if (p == Parity::Odd)
            r.odd_writhe += s;
    }
    int j = r.odd_writhe < 0 ? -r.odd_writhe : r.odd_writhe;
    r.arc_shift_lower_bound = (j + 1) / 2;
    return r;
}

std::string report_json(const GaussDiagram& d) {
    InvariantReport r = report(d);
    nlohmann::ordered_json out;
    out["code"] = d.render();
    out["chords"] = r.chord_count;
    out["writhe"] = r.writhe;
    out["odd_writhe"] = r.odd_writhe;
    nlohmann::ordered_json parity = nlohmann::ordered_json::object();
    for (const auto& [chord, p] : r.parity_table)
        parity[std::to_string(chord)] = p == Parity::Odd ? "odd" : "even";
    out["parity"] = parity;
    out["arc_shift_lower_bound"] = r.arc_shift_lower_bound;
    return out.dump();
}

} // namespace vknot
