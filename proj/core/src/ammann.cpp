#include "aperiodic/ammann.hpp"

#include "aperiodic/dynamics.hpp"
#include "aperiodic/errors.hpp"
#include "aperiodic/faces.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace aperiodic {

namespace {

constexpr double kPi = std::numbers::pi;

using EdgeKey = std::pair<std::size_t, std::size_t>;

EdgeKey ekey(std::size_t a, std::size_t b) { return {std::min(a, b), std::max(a, b)}; }

using EdgeMap = std::map<EdgeKey, std::vector<std::pair<std::size_t, std::size_t>>>;

EdgeMap edge_index(const AmmannPatch& p) {
    EdgeMap m;
    for (std::size_t t = 0; t < p.tiles.size(); ++t) {
        const auto& v = p.tiles[t].v;
        for (std::size_t j = 0; j < v.size(); ++j) m[ekey(v[(j + v.size() - 1) % v.size()], v[j])].push_back({t, j});
    }
    return m;
}

TileKind produced_kind(int cls) { return cls == 1 ? TileKind::A : (cls <= 3 ? TileKind::B : TileKind::C); }

struct Slot {
    int member;  // 0 = centre, j = neighbour across centre edge j - 1
    const char* label;
};

const std::vector<Slot>& template_for(TileKind k) {
    static const std::vector<Slot> a = {{2, "η"}, {1, "ν"}, {1, "τ"}, {0, "δ"}, {3, "ν"}};
    static const std::vector<Slot> b = {{3, "ν"}, {2, "η"}, {1, "λ"}, {1, "η"}, {0, "ε"}, {0, "δ"}};
    static const std::vector<Slot> c = {{0, "ε"}, {0, "δ"}, {3, "λ"}, {3, "η"}, {0, "α"}};
    return k == TileKind::A ? a : (k == TileKind::B ? b : c);
}

std::size_t label_index(TileKind k, const std::string& label) {
    const auto& l = angle_labels(k);
    return static_cast<std::size_t>(std::find(l.begin(), l.end(), label) - l.begin());
}

double corner_angle(const AmmannPatch& p, const AmmannTile& t, std::size_t i) {
    const std::size_t n = t.v.size();
    std::complex<double> z = p.nodes[t.v[i]].z;
    std::complex<double> prev = p.nodes[t.v[(i + n - 1) % n]].z - z;
    std::complex<double> next = p.nodes[t.v[(i + 1) % n]].z - z;
    double a = p.orientation == Orientation::CCW ? std::arg(prev / next) : std::arg(next / prev);
    return a < 0 ? a + 2 * kPi : a;
}

std::string corner_token(TileKind k, std::size_t i) { return std::string(1, kind_char(k)) + angle_labels(k)[i]; }

// Penrose edges inside each tile, as pairs of corner indices.
const std::vector<std::pair<std::size_t, std::size_t>>& cuts(TileKind k) {
    static const std::vector<std::pair<std::size_t, std::size_t>> a = {{1, 4}};
    static const std::vector<std::pair<std::size_t, std::size_t>> b = {{2, 0}, {4, 0}};
    static const std::vector<std::pair<std::size_t, std::size_t>> c = {{0, 2}};
    return k == TileKind::A ? a : (k == TileKind::B ? b : c);
}

struct RecoveredRhomb {
    Shape shape;
    std::size_t as, ao, b, c;  // node ids
    std::size_t marker;        // Q of a thin rhomb, S of a thick one
};

std::vector<RecoveredRhomb> recover_rhombs(const AmmannPatch& p) {
    const auto pos = p.positions();
    std::set<Segment> segs;
    for (const auto& t : p.tiles)
        for (auto [i, j] : cuts(t.kind)) segs.insert(ekey(t.v[i], t.v[j]));
    FaceGraph g = trace_faces(pos, {segs.begin(), segs.end()});

    // Node adjacency along tile edges.
    std::map<std::size_t, std::set<std::size_t>> adj;
    for (const auto& t : p.tiles) {
        for (std::size_t j = 0; j < t.v.size(); ++j) {
            std::size_t a = t.v[j], b = t.v[(j + 1) % t.v.size()];
            adj[a].insert(b);
            adj[b].insert(a);
        }
    }

    auto face_beside = [&](std::size_t u, std::size_t v, std::size_t m) -> std::ptrdiff_t {
        std::complex<double> d = pos[v] - pos[u];
        bool left = std::imag(std::conj(d) * (pos[m] - pos[u])) > 0;
        auto it = left ? g.face_of.find({u, v}) : g.face_of.find({v, u});
        if (it == g.face_of.end()) return -1;
        return static_cast<std::ptrdiff_t>(it->second);
    };
    std::map<std::size_t, std::set<std::size_t>> markers;
    for (const auto& t : p.tiles) {
        std::ptrdiff_t f = -1;
        if (t.kind == TileKind::B) f = face_beside(t.v[0], t.v[2], t.v[3]);
        if (t.kind == TileKind::A) f = face_beside(t.v[1], t.v[4], t.v[2]);
        if (f < 0) continue;
        std::size_t m = t.kind == TileKind::B ? t.v[3] : t.v[2];
        markers[static_cast<std::size_t>(f)].insert(m);
    }

    std::vector<RecoveredRhomb> out;
    for (const auto& [fi, ms] : markers) {
        const auto& f = g.faces[fi];
        if (f.size() != 4 || signed_area(pos, f) <= 0) continue;
        if (ms.size() != 1) throw MalformedPatch("underlying_penrose: two markers in one rhomb");
        const std::size_t m = *ms.begin();
        double ang[4];
        for (std::size_t i = 0; i < 4; ++i) ang[i] = interior_angle(pos, f, i);
        const double small = std::min({ang[0], ang[1], ang[2], ang[3]});
        Shape shape;
        if (std::abs(small - kPi / 5) < 1e-6)
            shape = Shape::Acute;
        else if (std::abs(small - 2 * kPi / 5) < 1e-6)
            shape = Shape::Obtuse;
        else
            throw MalformedPatch("underlying_penrose: cut face is not a rhomb");
        const double apex = shape == Shape::Acute ? kPi / 5 : 3 * kPi / 5;
        std::size_t k = 4;
        for (std::size_t i = 0; i < 4; ++i)
            if (std::abs(ang[i] - apex) < 1e-6 && adj[m].count(f[i])) k = (k == 4 ? i : 5);
        if (k >= 4) throw MalformedPatch("underlying_penrose: rhomb apex not determined");
        RecoveredRhomb rh{shape, f[k], f[(k + 2) % 4], f[(k + 1) % 4], f[(k + 3) % 4], m};
        // Order b, c so that the apex half has chirality s.
        const int s = p.orientation == Orientation::CCW ? -1 : 1;
        const auto& n = p.nodes;
        int ch = n[rh.as].exact && n[rh.b].exact && n[rh.c].exact
                     ? cross_sign(*n[rh.b].exact - *n[rh.as].exact, *n[rh.c].exact - *n[rh.as].exact)
                     : (std::imag(std::conj(pos[rh.b] - pos[rh.as]) * (pos[rh.c] - pos[rh.as])) > 0 ? 1 : -1);
        if (ch != s) std::swap(rh.b, rh.c);
        out.push_back(rh);
    }
    return out;
}

}  // namespace

const std::vector<std::string>& corona_class_signature(int cls) {
    static const std::vector<std::vector<std::string>> sigs = {
        {"Cn", "Bi", "Cn", "Cp", "Bg"},
        {"Bf", "Bi", "Cn", "Cp", "Aa"},
        {"Bf", "Bi", "Cn", "Cp", "Bg"},
        {"Ae", "Co", "Bf", "Cp", "Aa"},
        {"Ae", "Co", "Bf", "Cp", "Bg"},
    };
    return sigs.at(static_cast<std::size_t>(cls - 1));
}

namespace {

CoronaRecord corona_in(const AmmannPatch& patch, const EdgeMap& edges, std::size_t a_tile) {
    CoronaRecord rec;
    rec.center = a_tile;
    const auto& t = patch.tiles.at(a_tile);
    if (t.kind != TileKind::A) return rec;
    rec.complete = true;
    for (std::size_t j = 0; j < t.v.size(); ++j) {
        auto e = edges.find(ekey(t.v[(j + t.v.size() - 1) % t.v.size()], t.v[j]));
        auto it = std::find_if(e->second.begin(), e->second.end(), [&](const auto& x) { return x.first != a_tile; });
        if (it == e->second.end()) {
            rec.complete = false;
            continue;
        }
        const auto& nb = patch.tiles[it->first];
        rec.ring.push_back(it->first);
        rec.signature.push_back(std::string(1, kind_char(nb.kind)) + edge_labels(nb.kind)[it->second]);
    }
    if (!rec.complete) return rec;
    for (int c = 1; c <= kCoronaClasses; ++c)
        if (rec.signature == corona_class_signature(c)) rec.corona_class = c;
    return rec;
}

}  // namespace

CoronaRecord classify_corona(const AmmannPatch& patch, std::size_t a_tile) {
    return corona_in(patch, edge_index(patch), a_tile);
}

std::vector<CoronaRecord> classify_coronas(const AmmannPatch& patch) {
    const auto edges = edge_index(patch);
    std::vector<CoronaRecord> out;
    for (std::size_t i = 0; i < patch.tiles.size(); ++i)
        if (patch.tiles[i].kind == TileKind::A) out.push_back(corona_in(patch, edges, i));
    return out;
}

AmmannPatch iterate(const AmmannPatch& patch, bool rescale) {
    AmmannPatch out;
    out.orientation = patch.orientation == Orientation::CCW ? Orientation::CW : Orientation::CCW;
    out.penrose_generation = patch.penrose_generation - 2;
    out.q = q_map_exact(patch.q);

    std::map<std::size_t, std::size_t> remap;
    auto node = [&](std::size_t id) {
        auto [it, fresh] = remap.try_emplace(id, out.nodes.size());
        if (fresh) out.nodes.push_back(patch.nodes[id]);
        return it->second;
    };

    for (const auto& rec : classify_coronas(patch)) {
        if (!rec.complete) {
            ++out.dropped;
            continue;
        }
        if (rec.corona_class == 0) throw MalformedPatch("iterate: corona outside the atlas");
        AmmannTile t;
        t.kind = produced_kind(rec.corona_class);
        t.rhomb = rec.center;
        for (const auto& slot : template_for(t.kind)) {
            std::size_t tid = slot.member == 0 ? rec.center : rec.ring[static_cast<std::size_t>(slot.member - 1)];
            const auto& src = patch.tiles[tid];
            std::size_t li = label_index(src.kind, slot.label);
            if (li >= src.v.size()) throw MalformedPatch("iterate: template does not fit the corona");
            t.v.push_back(src.v[li]);
        }
        double a = 0;
        for (std::size_t i = 0; i < t.v.size(); ++i) {
            auto p = patch.nodes[t.v[i]].z, q = patch.nodes[t.v[(i + 1) % t.v.size()]].z;
            a += p.real() * q.imag() - p.imag() * q.real();
        }
        if (std::abs(a) < 1e-9 || (a > 0) != (out.orientation == Orientation::CCW))
            throw MalformedPatch("iterate: template tile has the wrong orientation");
        for (auto& id : t.v) id = node(id);
        out.tiles.push_back(std::move(t));
    }

    if (rescale) {
        const GoldenRational s = GoldenRational::inv_phi();
        const double sd = 1 / std::numbers::phi;
        for (auto& n : out.nodes) {
            n.z *= sd;
            if (n.exact) {
                *n.exact *= s;
                n.z = n.exact->embed();
            }
        }
    }
    return out;
}

PenrosePatch underlying_penrose(const AmmannPatch& patch) {
    const int s = patch.orientation == Orientation::CCW ? -1 : 1;
    PenrosePatch out;
    out.generation = patch.penrose_generation;
    for (const auto& r : recover_rhombs(patch)) {
        const auto& n = patch.nodes;
        for (std::size_t id : {r.as, r.ao, r.b, r.c})
            if (!n[id].exact) throw MalformedPatch("underlying_penrose: Penrose vertex without exact coordinates");
        const CycloPoint& as = *n[r.as].exact;
        const CycloPoint& ao = *n[r.ao].exact;
        const CycloPoint& b = *n[r.b].exact;
        const CycloPoint& c = *n[r.c].exact;
        if (cross_sign(b - as, c - as) != s) throw MalformedPatch("underlying_penrose: inconsistent chirality");
        out.tiles.push_back({r.shape, as, b, c});
        out.tiles.push_back({r.shape, ao, b, c});
    }
    std::sort(out.tiles.begin(), out.tiles.end());
    return out;
}

QPoint extract_q(const AmmannPatch& patch) {
    std::optional<QPoint> first;
    for (const auto& r : recover_rhombs(patch)) {
        if (r.shape != Shape::Acute) continue;
        const auto& n = patch.nodes;
        std::complex<double> a = n[r.as].z, b = n[r.b].z, c = n[r.c].z, m = n[r.marker].z;
        bool direct = std::imag(std::conj(c - a) * (b - a)) > 0;
        std::complex<double> w = (m - a) / (c - a);
        if (!direct) w = std::conj(w);
        QPoint q;
        if (n[r.as].exact && n[r.c].exact && n[r.marker].exact) {
            CycloPoint we = (*n[r.marker].exact - *n[r.as].exact) / (*n[r.c].exact - *n[r.as].exact);
            if (!direct) we = we.conj();
            q = QPoint::exact_point(we.coeff(0), we.coeff(1));
        } else {
            q = QPoint::polar(std::abs(w), std::arg(w));
        }
        if (!first) {
            first = q;
        } else if (std::abs(first->w() - q.w()) > 1e-9 || (first->exact && q.exact && *first->exact != *q.exact)) {
            throw MalformedPatch("extract_q: thin rhombs disagree on Q");
        }
    }
    if (!first) throw MalformedPatch("extract_q: no complete thin rhomb");
    return *first;
}

const std::vector<std::string>& ammann_star_atlas() {
    static const std::vector<std::string> atlas = {
        "Aα Aδ Cτ",       "Aα Bμ Bκ",          "Aα Cρ Bκ",       "Aβ Bι Cσ",       "Aβ Cσ Aε Bγ",
        "Aδ Cτ Bη",       "Aε Aε Aε Aε Aε",    "Aε Aε Aε Aε Bγ", "Aε Aε Bγ Aε Bγ", "Aχ Bμ Cω",
        "Aχ Cρ Cω",       "Bλ Bλ Cν",          "Bλ Cν Cν Cν",    "Cν Cν Cν Cν Cν",
    };
    return atlas;
}

std::vector<VertexStarRecord> star_atlas_audit(const AmmannPatch& patch) {
    struct Corner {
        std::size_t tile, idx;
        double angle, start;
    };
    std::map<std::size_t, std::vector<Corner>> at;
    const bool ccw = patch.orientation == Orientation::CCW;
    for (std::size_t t = 0; t < patch.tiles.size(); ++t) {
        const auto& tile = patch.tiles[t];
        const std::size_t n = tile.v.size();
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> z = patch.nodes[tile.v[i]].z;
            std::complex<double> toward = patch.nodes[tile.v[ccw ? (i + 1) % n : (i + n - 1) % n]].z - z;
            at[tile.v[i]].push_back({t, i, corner_angle(patch, tile, i), std::arg(toward)});
        }
    }
    const auto& atlas = ammann_star_atlas();
    const auto& rejected = rejected_star_list();
    std::vector<VertexStarRecord> out;
    for (auto& [node, corners] : at) {
        double sum = 0;
        for (const auto& c : corners) sum += c.angle;
        if (std::abs(sum - 2 * kPi) > 1e-9) continue;
        std::sort(corners.begin(), corners.end(), [](const Corner& x, const Corner& y) { return x.start < y.start; });
        if (!ccw) std::reverse(corners.begin(), corners.end());
        VertexStarRecord rec;
        rec.node = node;
        rec.z = patch.nodes[node].z;
        rec.angle_sum = sum;
        std::vector<std::string> toks;
        for (const auto& c : corners) {
            rec.incident.push_back({c.tile, c.idx});
            toks.push_back(corner_token(patch.tiles[c.tile].kind, c.idx));
        }
        const std::size_t n = toks.size();
        for (std::size_t r = 0; r < n; ++r) {
            std::string s;
            for (std::size_t k = 0; k < n; ++k) s += (k ? " " : "") + toks[(r + k) % n];
            if (r == 0 || s < rec.signature) rec.signature = s;
        }
        if (auto it = std::find(atlas.begin(), atlas.end(), rec.signature); it != atlas.end()) {
            rec.cls = StarClass::Atlas;
            rec.id = static_cast<int>(it - atlas.begin()) + 1;
        } else if (auto jt = std::find(rejected.begin(), rejected.end(), rec.signature); jt != rejected.end()) {
            rec.cls = StarClass::Rejected;
            rec.id = static_cast<int>(jt - rejected.begin()) + 1;
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::string star_numbers(const std::string& signature) {
    // Corners numbered 1..16 through A, B and C in label order.
    std::string out = "(";
    std::size_t pos = 0;
    bool first = true;
    while (pos < signature.size()) {
        std::size_t end = signature.find(' ', pos);
        if (end == std::string::npos) end = signature.size();
        std::string tok = signature.substr(pos, end - pos);
        pos = end + 1;
        int base = 0;
        for (TileKind k : {TileKind::A, TileKind::B, TileKind::C}) {
            if (tok[0] == kind_char(k)) {
                std::size_t i = label_index(k, tok.substr(1));
                out += (first ? "" : ",") + std::to_string(base + static_cast<int>(i) + 1);
                first = false;
            }
            base += static_cast<int>(corner_count(k));
        }
    }
    return out + ")";
}

}  // namespace aperiodic
