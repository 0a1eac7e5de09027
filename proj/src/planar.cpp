#include "planar.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include <json.hpp>

#include "moves.hpp"

namespace vknot {

namespace {

[[noreturn]] void broken(const std::string& what) {
    throw std::logic_error("planar map invariant violated: " + what);
}

// Mutable combinatorial map under construction. Unpaired darts behave as
// zero-length stubs: a face walk entering one bounces straight back, so
// faces stay well defined while the strand is being threaded.
class MapBuilder {
public:
    int new_vertex(CrossingKind kind, int sign, int over_axis, int chord) {
        vertices_.push_back(PlanarVertex{kind, sign, over_axis, chord});
        sigma_.resize(sigma_.size() + 4, -1);
        return static_cast<int>(vertices_.size()) - 1;
    }

    static int dart(int v, int slot) { return 4 * v + slot; }
    int sigma(int d) const { return sigma_[static_cast<size_t>(d)]; }

    int face_next(int d) const {
        int s = sigma_[static_cast<size_t>(d)];
        return PlanarDiagram::rho(s >= 0 ? s : d);
    }

    std::vector<int> face_of(int d) const {
        std::vector<int> orbit;
        int x = d;
        do {
            orbit.push_back(x);
            x = face_next(x);
        } while (x != d && orbit.size() <= sigma_.size() + 4);
        if (x != d)
            broken("face walk does not close");
        return orbit;
    }

    int face_id(int d) const {
        std::vector<int> orbit = face_of(d);
        return *std::min_element(orbit.begin(), orbit.end());
    }

    void connect(int a, int b) {
        if (sigma_[static_cast<size_t>(a)] >= 0 || sigma_[static_cast<size_t>(b)] >= 0)
            broken("connect on paired dart");
        if (face_id(a) != face_id(b))
            broken("connect across faces");
        sigma_[static_cast<size_t>(a)] = b;
        sigma_[static_cast<size_t>(b)] = a;
    }

    // Pairs the fresh vertex's slot-0 dart with `cursor`, placing the
    // vertex inside the cursor's face.
    void attach_new_vertex(int cursor, int v) {
        if (sigma_[static_cast<size_t>(cursor)] >= 0)
            broken("attach on paired dart");
        sigma_[static_cast<size_t>(cursor)] = dart(v, 0);
        sigma_[static_cast<size_t>(dart(v, 0))] = cursor;
    }

    // Splits the edge at `edge_dart` with a fresh virtual vertex whose
    // slot-1 dart opens into face `f` (which must border the edge);
    // slot 3 opens into the opposite side. Returns the new vertex.
    int split_edge(int edge_dart, int f) {
        int p = edge_dart;
        int q = sigma_[static_cast<size_t>(p)];
        if (q < 0)
            broken("split of unpaired dart");
        if (face_id(p) != f) {
            std::swap(p, q);
            if (face_id(p) != f)
                broken("split face does not border the edge");
        }
        int w = new_vertex(CrossingKind::Virtual, 0, 0, 0);
        sigma_[static_cast<size_t>(p)] = dart(w, 0);
        sigma_[static_cast<size_t>(dart(w, 0))] = p;
        sigma_[static_cast<size_t>(q)] = dart(w, 2);
        sigma_[static_cast<size_t>(dart(w, 2))] = q;
        return w;
    }

    // Inserts a virtual kink on the edge at `edge_dart`, adjacent to that
    // dart's end: the strand enters the new vertex, loops once through
    // its other axis and continues. Returns the new vertex.
    int insert_kink(int edge_dart) {
        int p = edge_dart;
        int q = sigma_[static_cast<size_t>(p)];
        if (q < 0)
            broken("kink on unpaired dart");
        int k = new_vertex(CrossingKind::Virtual, 0, 0, 0);
        sigma_[static_cast<size_t>(p)] = dart(k, 0);
        sigma_[static_cast<size_t>(dart(k, 0))] = p;
        sigma_[static_cast<size_t>(dart(k, 2))] = dart(k, 1);
        sigma_[static_cast<size_t>(dart(k, 1))] = dart(k, 2);
        sigma_[static_cast<size_t>(dart(k, 3))] = q;
        sigma_[static_cast<size_t>(q)] = dart(k, 3);
        return k;
    }

    void unpair(int d) {
        int q = sigma_[static_cast<size_t>(d)];
        if (q < 0)
            broken("unpair of unpaired dart");
        sigma_[static_cast<size_t>(d)] = -1;
        sigma_[static_cast<size_t>(q)] = -1;
    }

    // Marks the edge at `d` as one the router must never cross (and so
    // never split). A non-loop edge is never a dual bridge, so routing
    // stays feasible around it.
    void protect(int d) {
        protected_.insert(d);
        protected_.insert(sigma_[static_cast<size_t>(d)]);
    }

    // Threads the strand from phantom `from` to phantom `to`, crossing as
    // few edges as possible; every crossed edge gains a virtual crossing.
    void route(int from, int to) {
        for (;;) {
            int source = face_id(from);
            int target = face_id(to);
            if (source == target) {
                connect(from, to);
                return;
            }
            // Breadth-first search in the dual graph; faces are keyed by
            // their minimum dart and explored in dart order.
            std::map<int, std::pair<int, int>> parent; // face -> (prev, crossing dart)
            std::queue<int> pending;
            pending.push(source);
            parent[source] = {-1, -1};
            int found = -1;
            while (!pending.empty() && found < 0) {
                int f = pending.front();
                pending.pop();
                std::vector<int> orbit = face_of(f);
                std::sort(orbit.begin(), orbit.end());
                for (int d : orbit) {
                    int s = sigma_[static_cast<size_t>(d)];
                    if (s < 0 || protected_.count(d))
                        continue;
                    int g = face_id(s);
                    if (parent.count(g))
                        continue;
                    parent[g] = {f, d};
                    if (g == target) {
                        found = g;
                        break;
                    }
                    pending.push(g);
                }
            }
            if (found < 0)
                broken("routing target unreachable");
            // Walk back to the first crossing on the path.
            int step = found;
            while (parent[step].first != source)
                step = parent[step].first;
            int cross_dart = parent[step].second;

            int w = split_edge(cross_dart, source);
            connect(from, dart(w, 1));
            from = dart(w, 3);
        }
    }

    PlanarDiagram finish(int basepoint) const {
        for (size_t d = 0; d < sigma_.size(); ++d)
            if (sigma_[d] < 0)
                broken("unpaired dart at finish");
        return PlanarDiagram(vertices_, sigma_, basepoint);
    }

private:
    std::vector<PlanarVertex> vertices_;
    std::vector<int> sigma_;
    std::set<int> protected_;
};

// The first pass of a chord occupies the even slot axis; it is the
// overpass exactly when that pass is the chord's tail.
bool first_pass_is_over(const GaussDiagram& g, int chord) {
    for (int t = 0; t < g.size(); ++t)
        if (g.at(t).chord == chord)
            return g.at(t).role == Role::Tail;
    throw Error(ErrorCode::UnknownChord, "unknown chord");
}

struct Realized {
    MapBuilder builder;
    int basepoint = -1;
};

enum class RealizeMode { Plain, ProtectFirstEdge };

// Places each classical crossing in the face holding the strand's loose
// end on first encounter; on second encounter the entry slot is fixed by
// the crossing sign, and the strand is routed there through the dual.
Realized realize_builder(const GaussDiagram& g, RealizeMode mode = RealizeMode::Plain) {
    Realized r;
    MapBuilder& b = r.builder;
    std::map<int, int> vertex_of_chord;
    int cursor = -1;
    int start_target = -1;

    for (int t = 0; t < g.size(); ++t) {
        const Endpoint& e = g.at(t);
        auto it = vertex_of_chord.find(e.chord);
        if (it == vertex_of_chord.end()) {
            int over_axis = e.role == Role::Tail ? 0 : 1;
            int v = b.new_vertex(CrossingKind::Classical, g.sign(e.chord), over_axis, e.chord);
            vertex_of_chord[e.chord] = v;
            if (t == 0)
                start_target = MapBuilder::dart(v, 0);
            else
                b.attach_new_vertex(cursor, v);
            if (t == 1 && mode == RealizeMode::ProtectFirstEdge)
                b.protect(MapBuilder::dart(v, 0));
            cursor = MapBuilder::dart(v, 2);
        } else {
            int v = it->second;
            bool first_over = first_pass_is_over(g, e.chord);
            int eps = g.sign(e.chord);
            int entry_slot = (first_over == (eps > 0)) ? 1 : 3;
            b.route(cursor, MapBuilder::dart(v, entry_slot));
            cursor = MapBuilder::dart(v, (entry_slot + 2) % 4);
        }
    }
    b.route(cursor, start_target);
    r.basepoint = start_target;
    return r;
}

void require_nondegenerate(const PlanarDiagram& p, const Region& r) {
    std::set<int> verts;
    for (int d : r.boundary) {
        if (PlanarDiagram::vertex_of(d) == PlanarDiagram::vertex_of(p.sigma(d)))
            throw Error(ErrorCode::DegenerateRegion,
                        "boundary arc passes through a single crossing twice");
        if (!verts.insert(PlanarDiagram::vertex_of(d)).second)
            throw Error(ErrorCode::DegenerateRegion,
                        "region boundary visits crossing " +
                            std::to_string(PlanarDiagram::vertex_of(d)) + " more than once");
    }
}

} // namespace

bool region_is_degenerate(const PlanarDiagram& p, const Region& r) {
    try {
        require_nondegenerate(p, r);
        return false;
    } catch (const Error&) {
        return true;
    }
}

PlanarDiagram::PlanarDiagram(std::vector<PlanarVertex> vertices, std::vector<int> sigma,
                             int basepoint)
    : vertices_(std::move(vertices)), sigma_(std::move(sigma)), basepoint_(basepoint) {}

void PlanarDiagram::validate() const {
    if (vertex_count() == 0) {
        if (!sigma_.empty() || basepoint_ != -1)
            broken("empty diagram must carry no darts");
        return;
    }
    if (dart_count() != 4 * vertex_count())
        broken("dart table size");
    for (int d = 0; d < dart_count(); ++d) {
        int s = sigma(d);
        if (s < 0 || s >= dart_count() || s == d)
            broken("edge pairing range");
        if (sigma(s) != d)
            broken("edge pairing involution");
    }
    if (basepoint_ < 0 || basepoint_ >= dart_count())
        broken("basepoint range");
    // Single strand visiting every edge exactly once.
    std::set<int> visited_edges;
    int d = basepoint_;
    int steps = 0;
    do {
        int exit = opposite(d);
        visited_edges.insert(std::min(exit, sigma(exit)));
        d = sigma(exit);
        if (++steps > 2 * edge_count())
            broken("strand traversal does not close");
    } while (d != basepoint_);
    if (steps != edge_count() || static_cast<int>(visited_edges.size()) != edge_count())
        broken("strand traversal must cover every edge once");
    int euler = vertex_count() - edge_count() + face_count();
    if (euler != 2)
        broken("Euler characteristic is " + std::to_string(euler));
}

int PlanarDiagram::face_count() const {
    if (vertex_count() == 0)
        return 2;
    std::vector<char> seen(static_cast<size_t>(dart_count()), 0);
    int faces = 0;
    for (int d = 0; d < dart_count(); ++d) {
        if (seen[static_cast<size_t>(d)])
            continue;
        faces++;
        int x = d;
        do {
            seen[static_cast<size_t>(x)] = 1;
            x = rho(sigma(x));
        } while (x != d);
    }
    return faces;
}

PlanarDiagram realize(const GaussDiagram& g) {
    if (g.empty())
        return PlanarDiagram{};
    Realized r = realize_builder(g);
    PlanarDiagram p = r.builder.finish(r.basepoint);
    p.validate();
    return p;
}

GaussDiagram read_gauss(const PlanarDiagram& p) {
    if (p.vertex_count() == 0)
        return GaussDiagram{};
    std::vector<Endpoint> word;
    std::map<int, int> signs;
    int d = p.basepoint();
    int guard = 0;
    do {
        const PlanarVertex& v = p.vertex(PlanarDiagram::vertex_of(d));
        if (v.kind == CrossingKind::Classical) {
            word.push_back(Endpoint{v.chord, p.dart_is_over(d) ? Role::Tail : Role::Head});
            signs[v.chord] = v.sign;
        }
        d = p.sigma(PlanarDiagram::opposite(d));
        if (++guard > 2 * p.edge_count())
            broken("read_gauss traversal does not close");
    } while (d != p.basepoint());
    return GaussDiagram(std::move(word), std::move(signs));
}

std::vector<Region> regions(const PlanarDiagram& p) {
    std::vector<Region> out;
    if (p.vertex_count() == 0) {
        out.resize(2);
        return out;
    }
    std::vector<char> seen(static_cast<size_t>(p.dart_count()), 0);
    for (int d = 0; d < p.dart_count(); ++d) {
        if (seen[static_cast<size_t>(d)])
            continue;
        Region r;
        int x = d;
        do {
            seen[static_cast<size_t>(x)] = 1;
            r.boundary.push_back(x);
            x = PlanarDiagram::rho(p.sigma(x));
        } while (x != d);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<BoundaryArc> boundary_arcs(const PlanarDiagram& p, const Region& r) {
    require_nondegenerate(p, r);
    std::vector<BoundaryArc> arcs;
    for (int d : r.boundary) {
        BoundaryArc a;
        a.dart = d;
        a.v_from = PlanarDiagram::vertex_of(d);
        a.v_to = PlanarDiagram::vertex_of(p.sigma(d));
        arcs.push_back(a);
    }
    return arcs;
}

std::pair<GaussDiagram, int> region_arc_shift(const PlanarDiagram& p, const Region& r) {
    return region_arc_shift_on(p, r, read_gauss(p));
}

std::pair<GaussDiagram, int> region_arc_shift_on(const PlanarDiagram& p, const Region& r,
                                                 const GaussDiagram& g) {
    std::vector<BoundaryArc> arcs = boundary_arcs(p, r);
    GaussDiagram current = g;
    int shifts = 0;
    for (const BoundaryArc& a : arcs) {
        const PlanarVertex& vf = p.vertex(a.v_from);
        const PlanarVertex& vt = p.vertex(a.v_to);
        bool cf = vf.kind == CrossingKind::Classical;
        bool ct = vt.kind == CrossingKind::Classical;
        if (cf && ct) {
            // An edge between classical crossings joins consecutive
            // passes, so the matching Gauss endpoints are adjacent.
            Role role_from = p.dart_is_over(a.dart) ? Role::Tail : Role::Head;
            Role role_to = p.dart_is_over(p.sigma(a.dart)) ? Role::Tail : Role::Head;
            int pa = current.position_of(vf.chord, role_from);
            int pb = current.position_of(vt.chord, role_to);
            int m = current.size();
            int locus;
            if ((pa + 1) % m == pb)
                locus = pa;
            else if ((pb + 1) % m == pa)
                locus = pb;
            else
                broken("classical boundary arc without adjacent Gauss endpoints");
            current = arc_shift_adjacent(current, locus).first;
            shifts++;
        } else if (cf || ct) {
            current = arc_shift_sign(current, cf ? vf.chord : vt.chord);
            shifts++;
        }
    }
    return {std::move(current), shifts};
}

RasRepresentative forbidden_region_representative(const GaussDiagram& d, int pos) {
    int m = d.size();
    if (pos < 0 || pos >= m)
        throw Error(ErrorCode::NotApplicable,
                    "no adjacent pair at position " + std::to_string(pos));
    if (d.at(pos).chord == d.at((pos + 1) % m).chord)
        throw Error(ErrorCode::NotApplicable, "adjacent endpoints share a chord");

    GaussDiagram dr = d.rotated(pos);
    Realized r = realize_builder(dr, RealizeMode::ProtectFirstEdge);
    MapBuilder& b = r.builder;

    // The first two passes create vertices 0 and 1 joined by a direct
    // edge (dart 2 <-> dart 4); that edge is the classical/classical arc.
    int ax = MapBuilder::dart(0, 2);
    if (b.sigma(ax) != MapBuilder::dart(1, 0))
        broken("representative lost the direct pair edge");

    int ex = MapBuilder::dart(0, 1); // other-axis arm of X flanking the arc
    int ey = MapBuilder::dart(1, 1); // other-axis arm of Y flanking the arc

    if (b.sigma(ex) == ey)
        b.insert_kink(ey);

    // Virtual R2 poke: reroute the X arm across the Y arm. The region
    // bounded by the pair edge, the Y arm stub and the poke is then
    // three-sided with corners X, Y and the first new virtual crossing.
    int far_x = b.sigma(ex);
    b.unpair(ex);
    int v1 = b.split_edge(ey, b.face_id(ex));
    b.connect(ex, MapBuilder::dart(v1, 1));
    int rem = MapBuilder::dart(v1, 2); // remainder of the Y arm edge
    int v2 = b.split_edge(rem, b.face_id(MapBuilder::dart(v1, 3)));
    b.connect(MapBuilder::dart(v1, 3), MapBuilder::dart(v2, 1));
    b.connect(MapBuilder::dart(v2, 3), far_x);

    PlanarDiagram p = b.finish(r.basepoint);
    p.validate();

    RasRepresentative rep;
    rep.diagram = std::move(p);
    rep.region_dart = ax;
    return rep;
}

std::pair<GaussDiagram, int> ras_for_forbidden(const GaussDiagram& d, int pos) {
    RasRepresentative rep = forbidden_region_representative(d, pos);
    Region region;
    int x = rep.region_dart;
    do {
        region.boundary.push_back(x);
        x = PlanarDiagram::rho(rep.diagram.sigma(x));
    } while (x != rep.region_dart);
    if (region.boundary.size() != 3)
        broken("representative region is not three-sided");
    auto [shifted, arc_count] = region_arc_shift(rep.diagram, region);
    if (arc_count != 3)
        broken("representative region arc count");
    int m = d.size();
    return {shifted.rotated((m - pos) % m), 1};
}

std::string planar_json(const PlanarDiagram& p, bool with_regions) {
    nlohmann::ordered_json out;
    out["vertices"] = nlohmann::json::array();
    for (int v = 0; v < p.vertex_count(); ++v) {
        const PlanarVertex& pv = p.vertex(v);
        nlohmann::ordered_json jv;
        jv["kind"] = pv.kind == CrossingKind::Classical ? "classical" : "virtual";
        if (pv.kind == CrossingKind::Classical)
            jv["sign"] = pv.sign;
        else
            jv["sign"] = nullptr;
        // Counterclockwise, starting on the overpass axis.
        nlohmann::ordered_json darts = nlohmann::json::array();
        int first = pv.kind == CrossingKind::Classical ? pv.over_axis : 0;
        for (int s = 0; s < 4; ++s)
            darts.push_back(4 * v + (first + s) % 4);
        jv["darts"] = darts;
        out["vertices"].push_back(jv);
    }
    out["edges"] = nlohmann::json::array();
    for (int d = 0; d < p.dart_count(); ++d)
        if (d < p.sigma(d))
            out["edges"].push_back(nlohmann::ordered_json::array({d, p.sigma(d)}));
    if (p.vertex_count() == 0)
        out["basepoint"] = nullptr;
    else
        out["basepoint"] = p.basepoint();
    if (with_regions) {
        out["regions"] = nlohmann::json::array();
        for (const Region& r : regions(p)) {
            nlohmann::ordered_json jr;
            jr["darts"] = r.boundary;
            if (region_is_degenerate(p, r)) {
                jr["arcs"] = nullptr;
                jr["degenerate"] = true;
            } else {
                jr["arcs"] = boundary_arcs(p, r).size();
            }
            out["regions"].push_back(jr);
        }
    }
    return out.dump();
}

} // namespace vknot
