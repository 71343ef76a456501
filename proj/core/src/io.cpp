#include "aperiodic/io.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

namespace aperiodic {

namespace {

Json rational(const mpq_class& q) { return Json::array({q.get_num().get_str(), q.get_den().get_str()}); }

mpq_class rational_from(const Json& num, const Json& den) {
    mpq_class q(mpz_class(num.get<std::string>()), mpz_class(den.get<std::string>()));
    q.canonicalize();
    return q;
}

const char* kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::Penrose: return "P";
        case NodeKind::Q: return "Q";
        case NodeKind::R: return "R";
        default: return "S";
    }
}

NodeKind node_kind(const std::string& s) {
    if (s == "Q") return NodeKind::Q;
    if (s == "R") return NodeKind::R;
    if (s == "S") return NodeKind::S;
    return NodeKind::Penrose;
}

TileKind tile_kind(const std::string& s) {
    if (s == "A") return TileKind::A;
    if (s == "B") return TileKind::B;
    if (s == "C") return TileKind::C;
    throw std::invalid_argument("unknown tile kind " + s);
}

const char* status_name(StarStatus s) {
    switch (s) {
        case StarStatus::Extendable: return "extendable";
        case StarStatus::Rejected: return "rejected";
        default: return "inconclusive";
    }
}

}  // namespace

Json to_json(const GoldenRational& x) {
    Json a = rational(x.a()), b = rational(x.b());
    return Json::array({a[0], a[1], b[0], b[1]});
}

Json to_json(const CycloPoint& p) {
    Json j = Json::array();
    for (const auto& c : p.coeffs()) j.push_back(to_json(c));
    return j;
}

GoldenRational golden_from_json(const Json& j) { return GoldenRational(rational_from(j.at(0), j.at(1)), rational_from(j.at(2), j.at(3))); }

CycloPoint cyclo_from_json(const Json& j) {
    return CycloPoint(golden_from_json(j.at(0)), golden_from_json(j.at(1)), golden_from_json(j.at(2)), golden_from_json(j.at(3)));
}

Json to_json(const PenrosePatch& patch) {
    std::map<CycloPoint, std::size_t> ids;
    Json verts = Json::array(), coords = Json::array(), tiles = Json::array();
    auto id = [&](const CycloPoint& p) {
        auto [it, fresh] = ids.try_emplace(p, ids.size());
        if (fresh) {
            verts.push_back(to_json(p));
            auto z = p.embed();
            coords.push_back(Json::array({z.real(), z.imag()}));
        }
        return it->second;
    };
    for (const auto& t : patch.tiles) {
        Json v = Json::array({id(t.a), id(t.b), id(t.c)});
        tiles.push_back({{"size", patch.size_of(t) == Size::Small ? "s" : "l"},
                         {"shape", t.shape == Shape::Acute ? "acute" : "obtuse"},
                         {"chirality", t.chirality() > 0 ? "L" : "R"},
                         {"v", v}});
    }
    Json j;
    j["type"] = "penrose";
    j["generation"] = patch.generation;
    j["dropped"] = patch.dropped;
    j["vertices"] = std::move(verts);
    j["coords"] = std::move(coords);
    j["tiles"] = std::move(tiles);
    return j;
}

PenrosePatch penrose_from_json(const Json& j) {
    PenrosePatch p;
    p.generation = j.at("generation").get<int>();
    p.dropped = j.value("dropped", std::size_t{0});
    std::vector<CycloPoint> verts;
    for (const auto& v : j.at("vertices")) verts.push_back(cyclo_from_json(v));
    for (const auto& t : j.at("tiles")) {
        HalfTile h;
        const auto& v = t.at("v");
        h.a = verts.at(v.at(0).get<std::size_t>());
        h.b = verts.at(v.at(1).get<std::size_t>());
        h.c = verts.at(v.at(2).get<std::size_t>());
        if (t.contains("shape")) {
            h.shape = t.at("shape").get<std::string>() == "acute" ? Shape::Acute : Shape::Obtuse;
        } else {
            bool small = t.at("size").get<std::string>() == "s";
            bool rhomb = ((p.generation % 2) + 2) % 2 == 0;
            h.shape = (small == rhomb) ? Shape::Acute : Shape::Obtuse;
        }
        p.tiles.push_back(std::move(h));
    }
    return p;
}

Json to_json(const QPoint& q) {
    Json j = {{"r", q.r}, {"theta", q.theta}, {"x", q.x()}, {"y", q.y()}};
    if (q.exact) j["exact"] = Json::array({to_json(q.exact->first), to_json(q.exact->second)});
    return j;
}

QPoint qpoint_from_json(const Json& j) {
    if (j.contains("exact")) return QPoint::exact_point(golden_from_json(j["exact"][0]), golden_from_json(j["exact"][1]));
    return QPoint::polar(j.at("r").get<double>(), j.at("theta").get<double>());
}

Json to_json(const AmmannPatch& patch) {
    Json nodes = Json::array(), tiles = Json::array(), frags = Json::array();
    for (const auto& n : patch.nodes) {
        Json e = {{"x", n.z.real()}, {"y", n.z.imag()}, {"kind", kind_name(n.kind)}};
        if (n.kind != NodeKind::Penrose) e["rhomb"] = n.rhomb;
        if (n.exact) e["exact"] = to_json(*n.exact);
        nodes.push_back(std::move(e));
    }
    for (const auto& t : patch.tiles)
        tiles.push_back({{"kind", std::string(1, kind_char(t.kind))}, {"v", t.v}, {"rhomb", t.rhomb}});
    for (const auto& f : patch.fragments) frags.push_back(f);
    Json j;
    j["type"] = "ammann";
    j["orientation"] = patch.orientation == Orientation::CCW ? "ccw" : "cw";
    j["q"] = to_json(patch.q);
    j["penrose_generation"] = patch.penrose_generation;
    j["thick_rhombs"] = patch.thick_rhombs;
    j["thin_rhombs"] = patch.thin_rhombs;
    j["dropped"] = patch.dropped;
    j["nodes"] = std::move(nodes);
    j["tiles"] = std::move(tiles);
    j["fragments"] = std::move(frags);
    return j;
}

AmmannPatch ammann_from_json(const Json& j) {
    AmmannPatch p;
    p.orientation = j.at("orientation").get<std::string>() == "cw" ? Orientation::CW : Orientation::CCW;
    p.q = qpoint_from_json(j.at("q"));
    p.penrose_generation = j.value("penrose_generation", 0);
    p.thick_rhombs = j.value("thick_rhombs", std::size_t{0});
    p.thin_rhombs = j.value("thin_rhombs", std::size_t{0});
    p.dropped = j.value("dropped", std::size_t{0});
    for (const auto& n : j.at("nodes")) {
        AmmannNode a;
        a.z = {n.at("x").get<double>(), n.at("y").get<double>()};
        a.kind = node_kind(n.at("kind").get<std::string>());
        a.rhomb = n.value("rhomb", std::size_t{0});
        if (n.contains("exact")) {
            a.exact = cyclo_from_json(n["exact"]);
            a.z = a.exact->embed();
        }
        p.nodes.push_back(std::move(a));
    }
    for (const auto& t : j.at("tiles")) {
        AmmannTile a;
        a.kind = tile_kind(t.at("kind").get<std::string>());
        a.v = t.at("v").get<std::vector<std::size_t>>();
        a.rhomb = t.value("rhomb", std::size_t{0});
        if (a.v.size() != corner_count(a.kind)) throw std::invalid_argument("tile with the wrong number of corners");
        for (std::size_t id : a.v)
            if (id >= p.nodes.size()) throw std::invalid_argument("tile refers to a missing node");
        p.tiles.push_back(std::move(a));
    }
    if (j.contains("fragments"))
        for (const auto& f : j["fragments"]) p.fragments.push_back(f.get<std::vector<std::size_t>>());
    return p;
}

Json to_json(const GenericityReport& r) {
    return {{"aq", r.aq}, {"bq", r.bq}, {"cq", r.cq}, {"rs", r.rs}, {"exact", r.exact}, {"generic", r.generic()}, {"coincidences", r.coincidences}};
}

Json to_json(const RelationReport& r) {
    auto list = [](const std::vector<Residual>& l) {
        Json a = Json::array();
        for (const auto& x : l) {
            Json e = {{"relation", x.relation}, {"residual", x.residual}};
            if (x.exact) e["exact"] = *x.exact;
            a.push_back(std::move(e));
        }
        return a;
    };
    return {{"angles", list(r.angles)}, {"edges", list(r.edges)}, {"max_residual", r.max_residual()}, {"exact_checked", r.exact_checked()}, {"exact_holds", r.exact_holds()}};
}

Json to_json(const std::vector<VertexStar>& stars) {
    Json a = Json::array();
    const auto& names = penrose_star_names();
    for (const auto& s : stars) {
        auto z = s.vertex.embed();
        a.push_back({{"x", z.real()},
                     {"y", z.imag()},
                     {"signature", s.signature},
                     {"atlas_id", s.atlas_id},
                     {"name", s.atlas_id > 0 ? names[static_cast<std::size_t>(s.atlas_id - 1)] : "Unknown"}});
    }
    return a;
}

Json to_json(const std::vector<VertexStarRecord>& stars) {
    Json a = Json::array();
    for (const auto& s : stars) {
        const char* cls = s.cls == StarClass::Atlas ? "atlas" : (s.cls == StarClass::Rejected ? "rejected" : "unknown");
        a.push_back({{"node", s.node}, {"x", s.z.real()}, {"y", s.z.imag()}, {"signature", s.signature}, {"numbers", star_numbers(s.signature)}, {"class", cls}, {"id", s.id}});
    }
    return a;
}

Json to_json(const std::vector<CoronaRecord>& coronas) {
    Json a = Json::array();
    for (const auto& c : coronas)
        a.push_back({{"center", c.center}, {"complete", c.complete}, {"class", c.corona_class}, {"ring", c.ring}, {"signature", c.signature}});
    return a;
}

Json to_json(const StarEnumeration& e) {
    Json a = Json::array();
    for (const auto& s : e.candidates)
        a.push_back({{"signature", s.signature}, {"numbers", s.numbers}, {"in_atlas", s.in_atlas}, {"status", status_name(s.status)}, {"depth", s.depth}});
    return {{"max_depth", e.max_depth},
            {"angle_candidates", e.angle_candidates},
            {"candidates", e.candidates.size()},
            {"extra", e.extra()},
            {"extendable", e.extendable().size()},
            {"rejected", e.rejected().size()},
            {"inconclusive", e.inconclusive().size()},
            {"stars", a}};
}

std::string patch_type(const Json& j) { return j.value("type", std::string("penrose")); }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    return Json::parse(in);
}

void write_json_file(const std::string& path, const Json& j, int indent) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(indent) << "\n";
}

}  // namespace aperiodic
