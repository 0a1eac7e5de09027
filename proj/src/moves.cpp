#include "moves.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace vknot {

namespace {

std::string pos_str(int p) { return std::to_string(p); }

Error not_applicable(const std::string& why) {
    return Error(ErrorCode::NotApplicable, "NotApplicable: " + why);
}

// ---------------------------------------------------------------------
// Triangle-move variant catalogs.
//
// A triangle configuration is three chords whose six endpoints form three
// cyclically adjacent pairs, each pair holding endpoints of two different
// chords and each chord meeting exactly two pairs. Which of those
// configurations admit a slide move is derived by enumerating planar local
// pictures: three lines (slopes 0, +1, -1 in every assignment), every
// over/under relation (total orders for the Reidemeister slide, cyclic
// orders for the three-crossing exchange), and every choice of strand
// directions. Each picture is encoded as a naming-independent key; the
// derived key sets are the applicability tables.
// ---------------------------------------------------------------------

struct KeyPair {
    int ca = 0;
    Role ra = Role::Tail;
    int cb = 0;
    Role rb = Role::Tail;
};

char sign_char(int s) { return s > 0 ? '+' : '-'; }

// "" when the data is not a valid triangle configuration.
std::string triangle_key(const std::array<KeyPair, 3>& pairs, const std::map<int, int>& signs) {
    int n_tt = 0, n_hh = 0, n_mixed = 0;
    for (const KeyPair& p : pairs) {
        if (p.ca == p.cb)
            return "";
        if (p.ra == Role::Tail && p.rb == Role::Tail)
            n_tt++;
        else if (p.ra == Role::Head && p.rb == Role::Head)
            n_hh++;
        else
            n_mixed++;
    }

    auto chord_set_ok = [&] {
        std::map<int, int> counts;
        for (const KeyPair& p : pairs) {
            counts[p.ca]++;
            counts[p.cb]++;
        }
        if (counts.size() != 3)
            return false;
        for (auto& [c, k] : counts)
            if (k != 2)
                return false;
        return true;
    };
    if (!chord_set_ok())
        return "";

    auto in_pair = [](const KeyPair& p, int c) { return p.ca == c || p.cb == c; };

    if (n_tt == 1 && n_hh == 1 && n_mixed == 1) {
        const KeyPair* tt = nullptr;
        const KeyPair* hh = nullptr;
        const KeyPair* mx = nullptr;
        for (const KeyPair& p : pairs) {
            if (p.ra == Role::Tail && p.rb == Role::Tail)
                tt = &p;
            else if (p.ra == Role::Head && p.rb == Role::Head)
                hh = &p;
            else
                mx = &p;
        }
        int u = -1, v = -1, w = -1;
        for (int c : {tt->ca, tt->cb}) {
            if (in_pair(*mx, c))
                u = c;
            if (in_pair(*hh, c))
                v = c;
        }
        for (int c : {mx->ca, mx->cb})
            if (in_pair(*hh, c))
                w = c;
        if (u < 0 || v < 0 || w < 0 || u == v || v == w || u == w)
            return "";
        // u's end in the mixed pair is its head, w's its tail.
        Role u_role = mx->ca == u ? mx->ra : mx->rb;
        Role w_role = mx->ca == w ? mx->ra : mx->rb;
        if (u_role != Role::Head || w_role != Role::Tail)
            return "";
        std::string key = "R3|";
        key += tt->ca == u ? 'u' : 'v';
        key += hh->ca == v ? 'v' : 'w';
        key += mx->ca == u ? 'u' : 'w';
        key += '|';
        key += sign_char(signs.at(u));
        key += sign_char(signs.at(v));
        key += sign_char(signs.at(w));
        return key;
    }

    if (n_mixed == 3) {
        // Each pair holds one tail and one head of different chords; the
        // tail->head incidence must form a 3-cycle over the pairs.
        std::array<int, 3> out_chord{};
        std::array<int, 3> next{};
        std::map<int, int> head_pair;
        for (int p = 0; p < 3; ++p) {
            const KeyPair& kp = pairs[static_cast<size_t>(p)];
            int head_c = kp.ra == Role::Head ? kp.ca : kp.cb;
            head_pair[head_c] = p;
        }
        for (int p = 0; p < 3; ++p) {
            const KeyPair& kp = pairs[static_cast<size_t>(p)];
            out_chord[static_cast<size_t>(p)] = kp.ra == Role::Tail ? kp.ca : kp.cb;
        }
        for (int p = 0; p < 3; ++p) {
            auto it = head_pair.find(out_chord[static_cast<size_t>(p)]);
            if (it == head_pair.end() || it->second == p)
                return "";
            next[static_cast<size_t>(p)] = it->second;
        }
        if (next[0] == next[1] || next[1] == next[2] || next[0] == next[2])
            return "";
        std::string best;
        for (int start = 0; start < 3; ++start) {
            std::string s;
            int p = start;
            for (int step = 0; step < 3; ++step) {
                const KeyPair& kp = pairs[static_cast<size_t>(p)];
                int c = out_chord[static_cast<size_t>(p)];
                s += (kp.ca == c && kp.ra == Role::Tail) ? 'T' : 'H';
                s += sign_char(signs.at(c));
                p = next[static_cast<size_t>(p)];
            }
            if (p != start)
                return "";
            if (best.empty() || s < best)
                best = s;
        }
        return "D|" + best;
    }

    return "";
}

struct VariantTables {
    std::vector<std::string> r3;
    std::vector<std::string> delta;
};

VariantTables derive_tables() {
    static const int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    // Slopes: 0 -> y=0, 1 -> y=x, 2 -> y=1-x; all lines parameterized by x.
    auto xcoord = [](int s, int t) {
        if ((s == 0 && t == 1) || (s == 1 && t == 0))
            return 0.0;
        if ((s == 0 && t == 2) || (s == 2 && t == 0))
            return 1.0;
        return 0.5;
    };
    auto dir = [](int s) -> std::array<int, 2> {
        if (s == 0)
            return {1, 0};
        if (s == 1)
            return {1, 1};
        return {1, -1};
    };
    auto chord_of = [](int a, int b) {
        if (a > b)
            std::swap(a, b);
        if (a == 0 && b == 1)
            return 0;
        if (a == 0 && b == 2)
            return 1;
        return 2;
    };

    std::set<std::string> r3set, dset;

    // over_rel(a, b): does line a pass over line b.
    auto run = [&](auto over_rel, std::set<std::string>& out) {
        for (const auto& slope_of : kPerms) {
            for (int dirs = 0; dirs < 8; ++dirs) {
                std::array<int, 3> sdir{};
                for (int l = 0; l < 3; ++l)
                    sdir[static_cast<size_t>(l)] = (dirs >> l) & 1 ? 1 : -1;

                std::map<int, int> signs;
                for (int a = 0; a < 3; ++a) {
                    for (int b = a + 1; b < 3; ++b) {
                        int o = over_rel(a, b) ? a : b;
                        int u = o == a ? b : a;
                        auto d_o = dir(slope_of[o]);
                        auto d_u = dir(slope_of[u]);
                        int det = sdir[static_cast<size_t>(o)] * sdir[static_cast<size_t>(u)] *
                                  (d_o[0] * d_u[1] - d_o[1] * d_u[0]);
                        signs[chord_of(a, b)] = det > 0 ? 1 : -1;
                    }
                }

                std::array<KeyPair, 3> pairs{};
                for (int l = 0; l < 3; ++l) {
                    int m1 = l == 0 ? 1 : 0;
                    int m2 = l == 2 ? 1 : 2;
                    double x1 = xcoord(slope_of[l], slope_of[m1]);
                    double x2 = xcoord(slope_of[l], slope_of[m2]);
                    if ((x1 > x2) == (sdir[static_cast<size_t>(l)] > 0))
                        std::swap(m1, m2);
                    KeyPair kp;
                    kp.ca = chord_of(l, m1);
                    kp.ra = over_rel(l, m1) ? Role::Tail : Role::Head;
                    kp.cb = chord_of(l, m2);
                    kp.rb = over_rel(l, m2) ? Role::Tail : Role::Head;
                    pairs[static_cast<size_t>(l)] = kp;
                }
                std::string key = triangle_key(pairs, signs);
                if (!key.empty())
                    out.insert(key);
            }
        }
    };

    for (const auto& rank : kPerms) {
        auto over = [&rank](int a, int b) {
            auto pos = [&rank](int x) {
                for (int i = 0; i < 3; ++i)
                    if (rank[i] == x)
                        return i;
                return -1;
            };
            return pos(a) < pos(b);
        };
        run(over, r3set);
    }
    for (int cycle = 0; cycle < 2; ++cycle) {
        auto over = [cycle](int a, int b) {
            // cycle 0: 0>1, 1>2, 2>0 ; cycle 1: the reverse cycle
            bool forward = (b - a + 3) % 3 == 1;
            return cycle == 0 ? forward : !forward;
        };
        run(over, dset);
    }

    VariantTables t;
    t.r3.assign(r3set.begin(), r3set.end());
    t.delta.assign(dset.begin(), dset.end());
    return t;
}

const VariantTables& tables() {
    static const VariantTables t = derive_tables();
    return t;
}

// Builds the key for the candidate triple of adjacencies, or "" when the
// positions do not form a triangle configuration.
std::string candidate_key(const GaussDiagram& d, int i, int j, int k) {
    int m = d.size();
    if (m < 6)
        return "";
    for (int p : {i, j, k})
        if (p < 0 || p >= m)
            return "";
    std::set<int> used;
    std::array<KeyPair, 3> pairs{};
    int idx = 0;
    for (int p : {i, j, k}) {
        int q = (p + 1) % m;
        used.insert(p);
        used.insert(q);
        const Endpoint& a = d.at(p);
        const Endpoint& b = d.at(q);
        pairs[static_cast<size_t>(idx++)] = KeyPair{a.chord, a.role, b.chord, b.role};
    }
    if (used.size() != 6)
        return "";
    return triangle_key(pairs, d.signs());
}

GaussDiagram transpose_pairs(const GaussDiagram& d, std::initializer_list<int> positions) {
    std::vector<Endpoint> w = d.word();
    int m = d.size();
    for (int p : positions)
        std::swap(w[static_cast<size_t>(p)], w[static_cast<size_t>((p + 1) % m)]);
    return GaussDiagram(std::move(w), d.signs());
}

} // namespace

const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::R1Insert: return "R1Insert";
        case MoveKind::R1Delete: return "R1Delete";
        case MoveKind::R2Insert: return "R2Insert";
        case MoveKind::R2Delete: return "R2Delete";
        case MoveKind::R3: return "R3";
        case MoveKind::Fh: return "Fh";
        case MoveKind::Ft: return "Ft";
        case MoveKind::ArcShiftHH: return "ArcShiftHH";
        case MoveKind::ArcShiftTT: return "ArcShiftTT";
        case MoveKind::ArcShiftHT: return "ArcShiftHT";
        case MoveKind::ArcShiftTH: return "ArcShiftTH";
        case MoveKind::ArcShiftSign: return "ArcShiftSign";
        case MoveKind::ForbiddenDetour: return "ForbiddenDetour";
        case MoveKind::DeltaMove: return "DeltaMove";
    }
    return "Unknown";
}

const char* move_family_name(MoveFamily f) {
    switch (f) {
        case MoveFamily::Reidemeister: return "reidemeister";
        case MoveFamily::Forbidden: return "forbidden";
        case MoveFamily::ArcShift: return "arcshift";
        case MoveFamily::RegionArcShift: return "ras";
    }
    return "unknown";
}

const std::vector<std::string>& r3_catalog() { return tables().r3; }
const std::vector<std::string>& delta_catalog() { return tables().delta; }

int r3_variant_of(const GaussDiagram& d, int i, int j, int k) {
    std::string key = candidate_key(d, i, j, k);
    if (key.empty() || key[0] != 'R')
        return -1;
    const auto& cat = r3_catalog();
    auto it = std::lower_bound(cat.begin(), cat.end(), key);
    if (it == cat.end() || *it != key)
        return -1;
    return static_cast<int>(it - cat.begin());
}

bool delta_matches(const GaussDiagram& d, int i, int j, int k) {
    std::string key = candidate_key(d, i, j, k);
    if (key.empty() || key[0] != 'D')
        return false;
    const auto& cat = delta_catalog();
    return std::binary_search(cat.begin(), cat.end(), key);
}

std::pair<GaussDiagram, MoveKind> arc_shift_adjacent(const GaussDiagram& d, int pos) {
    int m = d.size();
    if (pos < 0 || pos >= m)
        throw Error(ErrorCode::OutOfRange, "position " + pos_str(pos) + " out of range");
    int q = (pos + 1) % m;
    const Endpoint& a = d.at(pos);
    const Endpoint& b = d.at(q);
    if (a.chord == b.chord)
        throw Error(ErrorCode::SameChord,
                    "endpoints at " + pos_str(pos) + "," + pos_str(q) + " belong to one chord");
    MoveKind kind;
    if (a.role == Role::Head)
        kind = b.role == Role::Head ? MoveKind::ArcShiftHH : MoveKind::ArcShiftHT;
    else
        kind = b.role == Role::Tail ? MoveKind::ArcShiftTT : MoveKind::ArcShiftTH;

    std::vector<Endpoint> w = d.word();
    std::swap(w[static_cast<size_t>(pos)], w[static_cast<size_t>(q)]);
    std::map<int, int> s = d.signs();
    s[a.chord] = -s[a.chord];
    s[b.chord] = -s[b.chord];
    return {GaussDiagram(std::move(w), std::move(s)), kind};
}

GaussDiagram arc_shift_sign(const GaussDiagram& d, int chord) {
    if (!d.has_chord(chord))
        throw Error(ErrorCode::UnknownChord, "unknown chord " + std::to_string(chord));
    std::map<int, int> s = d.signs();
    s[chord] = -s[chord];
    return GaussDiagram(d.word(), std::move(s));
}

std::pair<GaussDiagram, MoveKind> forbidden(const GaussDiagram& d, int pos) {
    int m = d.size();
    if (pos < 0 || pos >= m)
        throw Error(ErrorCode::OutOfRange, "position " + pos_str(pos) + " out of range");
    int q = (pos + 1) % m;
    const Endpoint& a = d.at(pos);
    const Endpoint& b = d.at(q);
    if (a.chord == b.chord)
        throw Error(ErrorCode::SameChord,
                    "endpoints at " + pos_str(pos) + "," + pos_str(q) + " belong to one chord");
    if (a.role != b.role)
        throw Error(ErrorCode::RoleMismatch, "roles at " + pos_str(pos) + "," + pos_str(q) +
                                                 " differ; not a forbidden move");
    std::vector<Endpoint> w = d.word();
    std::swap(w[static_cast<size_t>(pos)], w[static_cast<size_t>(q)]);
    return {GaussDiagram(std::move(w), d.signs()),
            a.role == Role::Head ? MoveKind::Fh : MoveKind::Ft};
}

std::pair<GaussDiagram, int> forbidden_detour(const GaussDiagram& d, int pos) {
    int m = d.size();
    if (pos < 0 || pos >= m)
        throw Error(ErrorCode::OutOfRange, "position " + pos_str(pos) + " out of range");
    int q = (pos + 1) % m;
    const Endpoint& a = d.at(pos);
    const Endpoint& b = d.at(q);
    if (a.chord == b.chord)
        throw Error(ErrorCode::SameChord,
                    "endpoints at " + pos_str(pos) + "," + pos_str(q) + " belong to one chord");
    if (a.role == b.role)
        throw Error(ErrorCode::RoleMismatch,
                    "roles at " + pos_str(pos) + "," + pos_str(q) + " equal; not a detour");
    std::vector<Endpoint> w = d.word();
    std::swap(w[static_cast<size_t>(pos)], w[static_cast<size_t>(q)]);
    return {GaussDiagram(std::move(w), d.signs()), 2};
}

namespace {

int fresh_chord_id(const GaussDiagram& d) {
    int id = 0;
    for (const auto& [c, s] : d.signs()) {
        (void)s;
        id = std::max(id, c);
    }
    return id + 1;
}

GaussDiagram insert_groups(const GaussDiagram& d, int gap_a,
                           const std::vector<Endpoint>& group_a, int gap_b,
                           const std::vector<Endpoint>& group_b, std::map<int, int> signs) {
    int m = d.size();
    int gaps = std::max(1, m);
    if (gap_a < 0 || gap_a >= gaps || (gap_b >= 0 && gap_b >= gaps))
        throw Error(ErrorCode::OutOfRange, "insertion gap out of range");
    std::vector<Endpoint> w;
    for (int t = 0; t <= m; ++t) {
        if (t < gaps) {
            if (t == gap_a)
                w.insert(w.end(), group_a.begin(), group_a.end());
            if (t == gap_b)
                w.insert(w.end(), group_b.begin(), group_b.end());
        }
        if (t < m)
            w.push_back(d.at(t));
    }
    return GaussDiagram(std::move(w), std::move(signs));
}

} // namespace

bool r2_deletable(const GaussDiagram& d, int chord_a, int chord_b) {
    if (chord_a == chord_b || !d.has_chord(chord_a) || !d.has_chord(chord_b))
        return false;
    if (d.sign(chord_a) != -d.sign(chord_b))
        return false;
    int m = d.size();
    auto adjacent = [m](int p, int q) { return (p + 1) % m == q || (q + 1) % m == p; };
    int ta = d.position_of(chord_a, Role::Tail), tb = d.position_of(chord_b, Role::Tail);
    int ha = d.position_of(chord_a, Role::Head), hb = d.position_of(chord_b, Role::Head);
    return adjacent(ta, tb) && adjacent(ha, hb);
}

GaussDiagram reidemeister(const GaussDiagram& d, const MoveInstance& m) {
    switch (m.kind) {
        case MoveKind::R1Insert: {
            if (m.sign != 1 && m.sign != -1)
                throw not_applicable("kink sign must be +-1");
            int id = fresh_chord_id(d);
            std::vector<Endpoint> group;
            if (m.tail_first)
                group = {Endpoint{id, Role::Tail}, Endpoint{id, Role::Head}};
            else
                group = {Endpoint{id, Role::Head}, Endpoint{id, Role::Tail}};
            std::map<int, int> s = d.signs();
            s[id] = m.sign;
            return insert_groups(d, m.i, group, -1, {}, std::move(s));
        }
        case MoveKind::R1Delete: {
            if (!d.has_chord(m.chord_a))
                throw not_applicable("unknown chord " + std::to_string(m.chord_a));
            int sz = d.size();
            int p = d.position_of(m.chord_a, Role::Tail);
            int q = d.position_of(m.chord_a, Role::Head);
            if ((p + 1) % sz != q && (q + 1) % sz != p)
                throw not_applicable("chord " + std::to_string(m.chord_a) +
                                     " endpoints are not adjacent");
            std::vector<Endpoint> w;
            for (int t = 0; t < sz; ++t)
                if (d.at(t).chord != m.chord_a)
                    w.push_back(d.at(t));
            std::map<int, int> s = d.signs();
            s.erase(m.chord_a);
            return GaussDiagram(std::move(w), std::move(s));
        }
        case MoveKind::R2Insert: {
            if (m.variant < 0 || m.variant > 3)
                throw not_applicable("r2 insert variant must be 0..3");
            int a = fresh_chord_id(d);
            int b = a + 1;
            std::vector<Endpoint> tails = {Endpoint{a, Role::Tail}, Endpoint{b, Role::Tail}};
            std::vector<Endpoint> heads;
            if (m.variant & 1)
                heads = {Endpoint{b, Role::Head}, Endpoint{a, Role::Head}};
            else
                heads = {Endpoint{a, Role::Head}, Endpoint{b, Role::Head}};
            std::map<int, int> s = d.signs();
            s[a] = (m.variant & 2) ? -1 : 1;
            s[b] = -s[a];
            if (m.i == m.j) {
                std::vector<Endpoint> both = tails;
                both.insert(both.end(), heads.begin(), heads.end());
                return insert_groups(d, m.i, both, -1, {}, std::move(s));
            }
            return insert_groups(d, m.i, tails, m.j, heads, std::move(s));
        }
        case MoveKind::R2Delete: {
            if (!r2_deletable(d, m.chord_a, m.chord_b))
                throw not_applicable("chords " + std::to_string(m.chord_a) + "," +
                                     std::to_string(m.chord_b) + " are not an R2 pair");
            std::vector<Endpoint> w;
            for (int t = 0; t < d.size(); ++t)
                if (d.at(t).chord != m.chord_a && d.at(t).chord != m.chord_b)
                    w.push_back(d.at(t));
            std::map<int, int> s = d.signs();
            s.erase(m.chord_a);
            s.erase(m.chord_b);
            return GaussDiagram(std::move(w), std::move(s));
        }
        case MoveKind::R3: {
            int variant = r3_variant_of(d, m.i, m.j, m.k);
            if (variant < 0)
                throw not_applicable("no R3 configuration at " + pos_str(m.i) + "," +
                                     pos_str(m.j) + "," + pos_str(m.k));
            if (m.variant >= 0 && m.variant != variant)
                throw not_applicable("R3 variant mismatch");
            return transpose_pairs(d, {m.i, m.j, m.k});
        }
        default:
            throw not_applicable("not a Reidemeister instance");
    }
}

GaussDiagram delta_move(const GaussDiagram& d, const MoveInstance& m) {
    if (!delta_matches(d, m.i, m.j, m.k))
        throw not_applicable("no delta configuration at " + pos_str(m.i) + "," + pos_str(m.j) +
                             "," + pos_str(m.k));
    return transpose_pairs(d, {m.i, m.j, m.k});
}

std::pair<GaussDiagram, int> r3_via_arcshifts(const GaussDiagram& d, const MoveInstance& m) {
    int variant = r3_variant_of(d, m.i, m.j, m.k);
    if (variant < 0)
        throw not_applicable("no R3 configuration at " + pos_str(m.i) + "," + pos_str(m.j) + "," +
                             pos_str(m.k));
    if (m.variant >= 0 && m.variant != variant)
        throw not_applicable("R3 variant mismatch");
    int sz = d.size();
    int mixed = -1, heads = -1, tails = -1;
    for (int p : {m.i, m.j, m.k}) {
        Role ra = d.at(p).role;
        Role rb = d.at((p + 1) % sz).role;
        if (ra == rb)
            (ra == Role::Head ? heads : tails) = p;
        else
            mixed = p;
    }
    // Mixed pair, then the head pair, then the tail pair; each chord's
    // sign is flipped twice, so the composite matches the plain slide.
    GaussDiagram out = arc_shift_adjacent(d, mixed).first;
    out = arc_shift_adjacent(out, heads).first;
    out = arc_shift_adjacent(out, tails).first;
    return {std::move(out), 3};
}

std::vector<MoveInstance> enumerate_moves(const GaussDiagram& d, MoveFamily family,
                                          const EnumLimits& limits) {
    std::vector<MoveInstance> out;
    int m = d.size();
    int n = d.chord_count();

    auto adjacent_kind = [&](int pos) -> MoveKind {
        const Endpoint& a = d.at(pos);
        const Endpoint& b = d.at((pos + 1) % m);
        if (a.role == Role::Head)
            return b.role == Role::Head ? MoveKind::ArcShiftHH : MoveKind::ArcShiftHT;
        return b.role == Role::Tail ? MoveKind::ArcShiftTT : MoveKind::ArcShiftTH;
    };
    auto distinct_chords = [&](int pos) {
        return d.at(pos).chord != d.at((pos + 1) % m).chord;
    };

    switch (family) {
        case MoveFamily::Reidemeister: {
            if (n + 1 <= limits.max_chords) {
                int gaps = std::max(1, m);
                for (int g = 0; g < gaps; ++g)
                    for (int sign : {1, -1})
                        for (bool tail_first : {true, false}) {
                            MoveInstance mi;
                            mi.kind = MoveKind::R1Insert;
                            mi.i = g;
                            mi.sign = sign;
                            mi.tail_first = tail_first;
                            out.push_back(mi);
                        }
            }
            for (const auto& [c, s] : d.signs()) {
                (void)s;
                int p = d.position_of(c, Role::Tail);
                int q = d.position_of(c, Role::Head);
                if ((p + 1) % m == q || (q + 1) % m == p) {
                    MoveInstance mi;
                    mi.kind = MoveKind::R1Delete;
                    mi.chord_a = c;
                    out.push_back(mi);
                }
            }
            if (n + 2 <= limits.max_chords) {
                int gaps = std::max(1, m);
                for (int ga = 0; ga < gaps; ++ga)
                    for (int gb = 0; gb < gaps; ++gb)
                        for (int v = 0; v < 4; ++v) {
                            MoveInstance mi;
                            mi.kind = MoveKind::R2Insert;
                            mi.i = ga;
                            mi.j = gb;
                            mi.variant = v;
                            out.push_back(mi);
                        }
            }
            for (auto it = d.signs().begin(); it != d.signs().end(); ++it)
                for (auto jt = std::next(it); jt != d.signs().end(); ++jt)
                    if (r2_deletable(d, it->first, jt->first)) {
                        MoveInstance mi;
                        mi.kind = MoveKind::R2Delete;
                        mi.chord_a = it->first;
                        mi.chord_b = jt->first;
                        out.push_back(mi);
                    }
            for (int i = 0; i + 2 < m; ++i)
                for (int j = i + 1; j + 1 < m; ++j)
                    for (int k = j + 1; k < m; ++k) {
                        int v = r3_variant_of(d, i, j, k);
                        if (v >= 0) {
                            MoveInstance mi;
                            mi.kind = MoveKind::R3;
                            mi.i = i;
                            mi.j = j;
                            mi.k = k;
                            mi.variant = v;
                            out.push_back(mi);
                        }
                    }
            break;
        }
        case MoveFamily::Forbidden:
        case MoveFamily::RegionArcShift: {
            // The forbidden family lists the two plain moves; the region
            // family additionally lists detour loci, each realizable by
            // a single region operation.
            std::vector<MoveKind> kinds = {MoveKind::Fh, MoveKind::Ft};
            if (family == MoveFamily::RegionArcShift)
                kinds.push_back(MoveKind::ForbiddenDetour);
            for (MoveKind kind : kinds) {
                for (int p = 0; p < m; ++p) {
                    if (!distinct_chords(p))
                        continue;
                    Role ra = d.at(p).role;
                    Role rb = d.at((p + 1) % m).role;
                    bool match = false;
                    if (kind == MoveKind::Fh)
                        match = ra == Role::Head && rb == Role::Head;
                    else if (kind == MoveKind::Ft)
                        match = ra == Role::Tail && rb == Role::Tail;
                    else
                        match = ra != rb;
                    if (match) {
                        MoveInstance mi;
                        mi.kind = kind;
                        mi.i = p;
                        out.push_back(mi);
                    }
                }
            }
            break;
        }
        case MoveFamily::ArcShift: {
            for (MoveKind kind : {MoveKind::ArcShiftHH, MoveKind::ArcShiftTT,
                                  MoveKind::ArcShiftHT, MoveKind::ArcShiftTH}) {
                for (int p = 0; p < m; ++p)
                    if (distinct_chords(p) && adjacent_kind(p) == kind) {
                        MoveInstance mi;
                        mi.kind = kind;
                        mi.i = p;
                        out.push_back(mi);
                    }
            }
            for (const auto& [c, s] : d.signs()) {
                (void)s;
                MoveInstance mi;
                mi.kind = MoveKind::ArcShiftSign;
                mi.chord_a = c;
                out.push_back(mi);
            }
            break;
        }
    }
    return out;
}

GaussDiagram apply_move(const GaussDiagram& d, const MoveInstance& m) {
    switch (m.kind) {
        case MoveKind::ArcShiftHH:
        case MoveKind::ArcShiftTT:
        case MoveKind::ArcShiftHT:
        case MoveKind::ArcShiftTH: {
            auto [result, kind] = arc_shift_adjacent(d, m.i);
            if (kind != m.kind)
                throw not_applicable("role pattern at position " + pos_str(m.i) +
                                     " does not match " + move_kind_name(m.kind));
            return result;
        }
        case MoveKind::ArcShiftSign:
            return arc_shift_sign(d, m.chord_a);
        case MoveKind::Fh:
        case MoveKind::Ft: {
            auto [result, kind] = forbidden(d, m.i);
            if (kind != m.kind)
                throw not_applicable("role pattern at position " + pos_str(m.i) +
                                     " does not match " + move_kind_name(m.kind));
            return result;
        }
        case MoveKind::ForbiddenDetour:
            return forbidden_detour(d, m.i).first;
        case MoveKind::DeltaMove:
            return delta_move(d, m);
        default:
            return reidemeister(d, m);
    }
}

std::string format_move(const MoveInstance& m) {
    switch (m.kind) {
        case MoveKind::ArcShiftHH:
        case MoveKind::ArcShiftTT:
        case MoveKind::ArcShiftHT:
        case MoveKind::ArcShiftTH:
            return "as:" + pos_str(m.i);
        case MoveKind::ArcShiftSign:
            return "ass:" + std::to_string(m.chord_a);
        case MoveKind::Fh:
        case MoveKind::Ft:
            return "f:" + pos_str(m.i);
        case MoveKind::ForbiddenDetour:
            return "fd:" + pos_str(m.i);
        case MoveKind::R1Delete:
            return "r1d:" + std::to_string(m.chord_a);
        case MoveKind::R1Insert:
            return "r1i:" + pos_str(m.i) + (m.sign > 0 ? ":+:" : ":-:") +
                   (m.tail_first ? "OU" : "UO");
        case MoveKind::R2Delete:
            return "r2d:" + std::to_string(m.chord_a) + ":" + std::to_string(m.chord_b);
        case MoveKind::R2Insert:
            return "r2i:" + pos_str(m.i) + ":" + pos_str(m.j) + ":" + std::to_string(m.variant);
        case MoveKind::R3:
            return "r3:" + pos_str(m.i) + ":" + pos_str(m.j) + ":" + pos_str(m.k) + ":" +
                   std::to_string(m.variant);
        case MoveKind::DeltaMove:
            return "delta:" + pos_str(m.i) + ":" + pos_str(m.j) + ":" + pos_str(m.k);
    }
    return "";
}

MoveInstance parse_move(const GaussDiagram& d, std::string_view spec) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (true) {
        size_t c = spec.find(':', pos);
        parts.emplace_back(spec.substr(pos, c == std::string_view::npos ? c : c - pos));
        if (c == std::string_view::npos)
            break;
        pos = c + 1;
    }
    auto bad = [&](const std::string& why) {
        return Error(ErrorCode::BadMoveSpec, "bad move spec '" + std::string(spec) + "': " + why);
    };
    auto num = [&](size_t idx) {
        if (idx >= parts.size() || parts[idx].empty())
            throw bad("missing field " + std::to_string(idx));
        for (size_t t = 0; t < parts[idx].size(); ++t) {
            char ch = parts[idx][t];
            if (!(ch >= '0' && ch <= '9') && !(t == 0 && ch == '-'))
                throw bad("field '" + parts[idx] + "' is not a number");
        }
        return std::stoi(parts[idx]);
    };
    auto want = [&](size_t count) {
        if (parts.size() != count)
            throw bad("expected " + std::to_string(count - 1) + " arguments");
    };

    const std::string& op = parts[0];
    MoveInstance m;
    if (op == "as") {
        want(2);
        int p = num(1);
        int sz = d.size();
        if (p < 0 || p >= std::max(1, sz))
            throw Error(ErrorCode::OutOfRange, "position " + pos_str(p) + " out of range");
        if (sz == 0)
            throw Error(ErrorCode::OutOfRange, "empty diagram");
        const Endpoint& a = d.at(p);
        const Endpoint& b = d.at((p + 1) % sz);
        if (a.chord == b.chord)
            throw Error(ErrorCode::SameChord, "endpoints at " + pos_str(p) + " share a chord");
        if (a.role == Role::Head)
            m.kind = b.role == Role::Head ? MoveKind::ArcShiftHH : MoveKind::ArcShiftHT;
        else
            m.kind = b.role == Role::Tail ? MoveKind::ArcShiftTT : MoveKind::ArcShiftTH;
        m.i = p;
    } else if (op == "ass") {
        want(2);
        m.kind = MoveKind::ArcShiftSign;
        m.chord_a = num(1);
    } else if (op == "f") {
        want(2);
        int p = num(1);
        int sz = d.size();
        if (p < 0 || sz == 0 || p >= sz)
            throw Error(ErrorCode::OutOfRange, "position " + pos_str(p) + " out of range");
        const Endpoint& a = d.at(p);
        const Endpoint& b = d.at((p + 1) % sz);
        if (a.chord == b.chord)
            throw Error(ErrorCode::SameChord, "endpoints at " + pos_str(p) + " share a chord");
        if (a.role != b.role)
            throw Error(ErrorCode::RoleMismatch, "roles at " + pos_str(p) + " differ");
        m.kind = a.role == Role::Head ? MoveKind::Fh : MoveKind::Ft;
        m.i = p;
    } else if (op == "fd") {
        want(2);
        m.kind = MoveKind::ForbiddenDetour;
        m.i = num(1);
    } else if (op == "r1d") {
        want(2);
        m.kind = MoveKind::R1Delete;
        m.chord_a = num(1);
    } else if (op == "r1i") {
        want(4);
        m.kind = MoveKind::R1Insert;
        m.i = num(1);
        if (parts[2] == "+")
            m.sign = 1;
        else if (parts[2] == "-")
            m.sign = -1;
        else
            throw bad("sign must be + or -");
        if (parts[3] == "OU")
            m.tail_first = true;
        else if (parts[3] == "UO")
            m.tail_first = false;
        else
            throw bad("order must be OU or UO");
    } else if (op == "r2d") {
        want(3);
        m.kind = MoveKind::R2Delete;
        m.chord_a = num(1);
        m.chord_b = num(2);
    } else if (op == "r2i") {
        want(4);
        m.kind = MoveKind::R2Insert;
        m.i = num(1);
        m.j = num(2);
        m.variant = num(3);
    } else if (op == "r3") {
        want(5);
        m.kind = MoveKind::R3;
        m.i = num(1);
        m.j = num(2);
        m.k = num(3);
        m.variant = num(4);
    } else if (op == "delta") {
        want(4);
        m.kind = MoveKind::DeltaMove;
        m.i = num(1);
        m.j = num(2);
        m.k = num(3);
    } else {
        throw bad("unknown operation '" + op + "'");
    }
    return m;
}

} // namespace vknot
