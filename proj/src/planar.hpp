#ifndef VKNOT_PLANAR_HPP
#define VKNOT_PLANAR_HPP

#include <string>
#include <utility>
#include <vector>

#include "gauss.hpp"

namespace vknot {

enum class CrossingKind : std::uint8_t { Classical, Virtual };

// Darts of vertex v are 4v..4v+3 in counterclockwise rotation order. The
// two transversal strands occupy the even and odd slot axes; for a
// classical crossing over_axis tells which axis carries the overpass.
struct PlanarVertex {
    CrossingKind kind = CrossingKind::Virtual;
    int sign = 0;      // classical only
    int over_axis = 0; // 0: slots {0,2}, 1: slots {1,3}
    int chord = 0;     // classical only: originating chord id
};

// 4-valent combinatorial map of a virtual knot diagram. The edge pairing
// is a fixed-point-free involution on darts; the strand continues through
// a vertex to the opposite slot. A zero-vertex diagram represents the
// crossingless unknot (two faces by convention).
class PlanarDiagram {
public:
    PlanarDiagram() = default;
    PlanarDiagram(std::vector<PlanarVertex> vertices, std::vector<int> sigma, int basepoint);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int dart_count() const { return static_cast<int>(sigma_.size()); }
    int edge_count() const { return dart_count() / 2; }
    const PlanarVertex& vertex(int v) const { return vertices_[static_cast<size_t>(v)]; }
    int sigma(int dart) const { return sigma_[static_cast<size_t>(dart)]; }
    int basepoint() const { return basepoint_; }

    static int vertex_of(int dart) { return dart / 4; }
    static int slot_of(int dart) { return dart % 4; }
    static int opposite(int dart) { return (dart & ~3) | ((dart + 2) & 3); }
    static int rho(int dart) { return (dart & ~3) | ((dart + 1) & 3); }

    // True when the dart's slot lies on the vertex's overpass axis.
    bool dart_is_over(int dart) const {
        return slot_of(dart) % 2 == vertex(vertex_of(dart)).over_axis;
    }

    // Checks the involution, the single-strand traversal, and Euler's
    // formula V - E + F = 2; throws std::logic_error on violation.
    void validate() const;

    int face_count() const;

private:
    std::vector<PlanarVertex> vertices_;
    std::vector<int> sigma_;
    int basepoint_ = -1;
};

struct Region {
    std::vector<int> boundary; // darts in face-walk order, starting at the minimum
};

struct BoundaryArc {
    int dart = -1;   // region-side dart of the edge
    int v_from = -1; // vertex at the dart
    int v_to = -1;   // vertex at the paired dart
};

// Places classical crossings in first-encounter order and routes the
// strand through the faces built so far, inserting a virtual crossing for
// every edge the route must cross. read_gauss(realize(g)) == g.
PlanarDiagram realize(const GaussDiagram& g);

// Strand traversal from the basepoint, recording classical crossings;
// virtual crossings are skipped.
GaussDiagram read_gauss(const PlanarDiagram& p);

// Face traversal of the map, deterministically ordered.
std::vector<Region> regions(const PlanarDiagram& p);

// A region is degenerate when its boundary revisits a crossing or runs
// along an edge both of whose ends sit at one crossing; region moves are
// undefined there.
bool region_is_degenerate(const PlanarDiagram& p, const Region& r);

// One arc per boundary edge, in walk order. Rejects degenerate regions.
std::vector<BoundaryArc> boundary_arcs(const PlanarDiagram& p, const Region& r);

// Applies, sequentially in boundary-walk order, the arc shift determined
// by each boundary arc: classical/classical acts as the adjacent
// transposition at the matching Gauss adjacency, classical/virtual as the
// sign flip of the classical chord, virtual/virtual as the identity.
// Returns the resulting Gauss diagram and the number of arcs with at
// least one classical end.
std::pair<GaussDiagram, int> region_arc_shift(const PlanarDiagram& p, const Region& r);

// Same, but applied to `g` instead of read_gauss(p); arcs are tracked by
// crossing identity, so applying a region twice restores the input. `g`
// must contain the same passes as read_gauss(p).
std::pair<GaussDiagram, int> region_arc_shift_on(const PlanarDiagram& p, const Region& r,
                                                 const GaussDiagram& g);

// Planar representative of d (rotated so the pair sits at positions 0,1)
// containing a three-sided region whose region arc shift realizes the
// transposition at (pos, pos+1) without sign change: one classical/
// classical arc and two classical/virtual arcs meeting at one virtual
// crossing introduced by a virtual R2 poke.
struct RasRepresentative {
    PlanarDiagram diagram;
    int region_dart = -1; // the region is the face orbit of this dart
};
RasRepresentative forbidden_region_representative(const GaussDiagram& d, int pos);

// Single region arc shift realizing the forbidden move (equal roles) or
// the forbidden detour (mixed roles) at (pos, pos+1); second member is
// always 1 region operation.
std::pair<GaussDiagram, int> ras_for_forbidden(const GaussDiagram& d, int pos);

// {"vertices": [{"kind","sign","darts"}], "edges": [[a,b]], "basepoint":..}
// Darts are listed counterclockwise starting on the overpass axis.
std::string planar_json(const PlanarDiagram& p, bool with_regions);

} // namespace vknot

#endif
