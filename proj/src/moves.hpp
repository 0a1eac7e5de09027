#ifndef VKNOT_MOVES_HPP
#define VKNOT_MOVES_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gauss.hpp"

namespace vknot {

// ArcShiftHH/TT/HT/TH are the adjacent-transposition arc shifts classified
// by the role pair read at (i, i+1) before the move; ArcShiftSign flips a
// single chord's sign.
enum class MoveKind {
    R1Insert,
    R1Delete,
    R2Insert,
    R2Delete,
    R3,
    Fh,
    Ft,
    ArcShiftHH,
    ArcShiftTT,
    ArcShiftHT,
    ArcShiftTH,
    ArcShiftSign,
    ForbiddenDetour,
    DeltaMove,
};

enum class MoveFamily { Reidemeister, Forbidden, ArcShift, RegionArcShift };

const char* move_kind_name(MoveKind k);
const char* move_family_name(MoveFamily f);

// A typed, located, applicable rewrite. Field usage is kind-specific:
//   adjacent transpositions (Fh/Ft/ArcShiftHH/TT/HT/TH/ForbiddenDetour):
//       i = position of the adjacent pair (i, i+1 mod 2n)
//   ArcShiftSign: chord_a
//   R1Insert: i = gap, sign, tail_first (true = "OU" order)
//   R1Delete: chord_a
//   R2Insert: i = gap for the tail pair, j = gap for the head pair,
//       variant in 0..3 (bit 0: head order swapped, bit 1: first chord -)
//   R2Delete: chord_a, chord_b
//   R3: i, j, k = the three adjacent pairs, variant = catalog index
//   DeltaMove: i, j, k
struct MoveInstance {
    MoveKind kind = MoveKind::R1Delete;
    int i = -1, j = -1, k = -1;
    int chord_a = 0, chord_b = 0;
    int sign = 0;
    bool tail_first = true;
    int variant = -1;

    bool operator==(const MoveInstance&) const = default;
};

struct EnumLimits {
    int max_chords = 0; // insertions allowed only if resulting n <= max_chords
};

// Transposes the adjacent endpoints at (i, i+1) and negates the signs of
// both involved chords. The returned kind classifies the role pair read
// before the move.
std::pair<GaussDiagram, MoveKind> arc_shift_adjacent(const GaussDiagram& d, int pos);

// The single-chord sign flip; counts as one arc shift move.
GaussDiagram arc_shift_sign(const GaussDiagram& d, int chord);

// Transposes an adjacent same-role pair with all signs unchanged.
std::pair<GaussDiagram, MoveKind> forbidden(const GaussDiagram& d, int pos);

// Transposes an adjacent head/tail pair of distinct chords with signs
// unchanged; costs two forbidden moves.
std::pair<GaussDiagram, int> forbidden_detour(const GaussDiagram& d, int pos);

GaussDiagram reidemeister(const GaussDiagram& d, const MoveInstance& m);

GaussDiagram delta_move(const GaussDiagram& d, const MoveInstance& m);

// Same result as reidemeister(d, R3 at m), computed as the composite of
// three adjacent arc shifts (mixed pair, then head pair, then tail pair);
// second member is always 3.
std::pair<GaussDiagram, int> r3_via_arcshifts(const GaussDiagram& d, const MoveInstance& m);

// Every applicable instance of the family, ordered by kind then locus.
// For RegionArcShift this lists the forbidden/detour loci that seed the
// constructed single-region representatives; region moves on realized
// diagrams are generated by the search itself.
std::vector<MoveInstance> enumerate_moves(const GaussDiagram& d, MoveFamily family,
                                          const EnumLimits& limits);

GaussDiagram apply_move(const GaussDiagram& d, const MoveInstance& m);

// Move spec mini-language: as:<i>, ass:<chord>, f:<i>, fd:<i>,
// r1d:<chord>, r1i:<pos>:<sign>:<OU|UO>, r2d:<a>:<b>,
// r2i:<posA>:<posB>:<variant>, r3:<i>:<j>:<k>:<variant>, delta:<i>:<j>:<k>.
// Positions refer to the diagram as rendered.
std::string format_move(const MoveInstance& m);
MoveInstance parse_move(const GaussDiagram& d, std::string_view spec);

// Variant catalogs for the triangle moves, derived from planar local
// pictures. r3_variant_of returns the catalog index or -1; delta_matches
// tests the all-mixed triangle configuration.
int r3_variant_of(const GaussDiagram& d, int i, int j, int k);
bool delta_matches(const GaussDiagram& d, int i, int j, int k);
const std::vector<std::string>& r3_catalog();
const std::vector<std::string>& delta_catalog();

// R2 pair predicate: tails adjacent, heads adjacent, opposite signs.
bool r2_deletable(const GaussDiagram& d, int chord_a, int chord_b);

} // namespace vknot

#endif
