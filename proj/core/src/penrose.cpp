#include "aperiodic/penrose.hpp"

#include "aperiodic/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>

namespace aperiodic {

namespace {

using Edge = std::pair<CycloPoint, CycloPoint>;

Edge undirected(const CycloPoint& p, const CycloPoint& q) { return q < p ? Edge{q, p} : Edge{p, q}; }

struct EdgeRef {
    std::size_t tile;
    int edge;  // 0 = ab, 1 = ac, 2 = bc
};

std::pair<const CycloPoint*, const CycloPoint*> edge_points(const HalfTile& t, int e) {
    switch (e) {
        case 0: return {&t.a, &t.b};
        case 1: return {&t.a, &t.c};
        default: return {&t.b, &t.c};
    }
}

const CycloPoint& opposite(const HalfTile& t, int e) { return e == 0 ? t.c : (e == 1 ? t.b : t.a); }

std::map<Edge, std::vector<EdgeRef>> edge_map(const PenrosePatch& patch) {
    std::map<Edge, std::vector<EdgeRef>> m;
    for (std::size_t i = 0; i < patch.tiles.size(); ++i) {
        for (int e = 0; e < 3; ++e) {
            auto [p, q] = edge_points(patch.tiles[i], e);
            m[undirected(*p, *q)].push_back({i, e});
        }
    }
    return m;
}


// Rhomb stage -> kite stage.
void half_step_rhomb(const HalfTile& t, std::vector<HalfTile>& out) {
    if (t.shape == Shape::Acute) {
        out.push_back(t);
        return;
    }
    CycloPoint r = t.b + (t.c - t.b) * GoldenRational::inv_phi();
    out.push_back({Shape::Acute, t.b, t.a, r});
    out.push_back({Shape::Obtuse, r, t.c, t.a});
}

// Kite stage -> rhomb stage.
void half_step_kite(const HalfTile& t, std::vector<HalfTile>& out) {
    if (t.shape == Shape::Obtuse) {
        out.push_back(t);
        return;
    }
    CycloPoint p = t.a + (t.b - t.a) * GoldenRational::inv_phi();
    out.push_back({Shape::Acute, t.c, p, t.b});
    out.push_back({Shape::Obtuse, p, t.c, t.a});
}

// Corner angle in units of pi/5.
int corner_units(Shape s, int role) {
    if (s == Shape::Acute) return role == 0 ? 1 : 2;
    return role == 0 ? 3 : 1;
}

}  // namespace

int HalfTile::chirality() const { return cross_sign(b - a, c - a); }

bool operator<(const HalfTile& x, const HalfTile& y) {
    if (x.shape != y.shape) return x.shape < y.shape;
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.c < y.c;
}

EdgeMark edge_mark(Shape shape, int edge) {
    switch (edge) {
        case 0:
            return shape == Shape::Obtuse ? EdgeMark{MarkKind::Double, 0, 1} : EdgeMark{MarkKind::Double, 1, 0};
        case 1: return {MarkKind::Single, 0, 2};
        default:
            return {shape == Shape::Acute ? MarkKind::ThinDiagonal : MarkKind::ThickDiagonal, 1, 2};
    }
}

Size PenrosePatch::size_of(const HalfTile& t) const {
    bool small = rhomb_stage() ? t.shape == Shape::Acute : t.shape == Shape::Obtuse;
    return small ? Size::Small : Size::Large;
}

PenrosePatch seed_patch(SeedKind kind) {
    PenrosePatch p;
    const GoldenRational half(mpq_class(1, 2));
    const GoldenRational phi = GoldenRational::phi();
    switch (kind) {
        case SeedKind::ThickRhomb: {
            // i sin(pi/5) = z - phi/2
            CycloPoint b(-phi * half), c(phi * half);
            CycloPoint apex = CycloPoint::zeta(1) - CycloPoint(phi * half);
            p.tiles.push_back({Shape::Obtuse, apex, b, c});
            p.tiles.push_back({Shape::Obtuse, -apex, b, c});
            break;
        }
        case SeedKind::ThinRhomb: {
            // i sin(2 pi/5) = (z^2 - z^8) / 2
            GoldenRational h = GoldenRational::inv_phi() * half;
            CycloPoint b(-h), c(h);
            CycloPoint apex = (CycloPoint::zeta(2) - CycloPoint::zeta(8)) * half;
            p.tiles.push_back({Shape::Acute, apex, b, c});
            p.tiles.push_back({Shape::Acute, -apex, b, c});
            break;
        }
        case SeedKind::Sun: {
            const CycloPoint origin;
            for (int k = 0; k < 5; ++k) {
                CycloPoint far = CycloPoint::zeta(2 * k) * phi;
                p.tiles.push_back({Shape::Obtuse, CycloPoint::zeta(2 * k + 1), far, origin});
                p.tiles.push_back({Shape::Obtuse, CycloPoint::zeta(2 * k - 1), far, origin});
            }
            break;
        }
    }
    return p;
}

PenrosePatch deflate(const PenrosePatch& patch, int steps) {
    PenrosePatch cur = patch;
    cur.dropped = 0;
    for (int s = 0; s < steps; ++s) {
        std::vector<HalfTile> next;
        next.reserve(cur.tiles.size() * 2);
        bool rhomb = cur.rhomb_stage();
        for (const auto& t : cur.tiles) {
            if (rhomb)
                half_step_rhomb(t, next);
            else
                half_step_kite(t, next);
        }
        if (!rhomb) {
            const GoldenRational phi = GoldenRational::phi();
            for (auto& t : next) {
                t.a *= phi;
                t.b *= phi;
                t.c *= phi;
            }
        }
        cur.tiles = std::move(next);
        ++cur.generation;
    }
    return cur;
}

PenrosePatch compose(const PenrosePatch& patch) {
    const bool rhomb = patch.rhomb_stage();
    const Shape small_shape = rhomb ? Shape::Acute : Shape::Obtuse;
    const auto edges = edge_map(patch);

    auto neighbour = [&](std::size_t i, int e) -> const EdgeRef* {
        auto [p, q] = edge_points(patch.tiles[i], e);
        const auto& refs = edges.at(undirected(*p, *q));
        for (const auto& r : refs)
            if (r.tile != i) return &r;
        return nullptr;
    };

    PenrosePatch out;
    out.generation = patch.generation - 1;
    std::vector<char> claimed(patch.tiles.size(), 0);

    for (std::size_t i = 0; i < patch.tiles.size(); ++i) {
        const HalfTile& s = patch.tiles[i];
        if (s.shape != small_shape) continue;
        std::vector<std::size_t> cands;
        bool open = false;
        for (int e = 0; e < 3; ++e) {
            const EdgeRef* n = neighbour(i, e);
            if (!n) {
                open = true;
                continue;
            }
            const HalfTile& l = patch.tiles[n->tile];
            if (l.shape == small_shape) continue;
            auto [p, q] = edge_points(s, e);
            const CycloPoint& x = opposite(s, e);
            const CycloPoint& y = opposite(l, n->edge);
            if (cross_sign(*p - x, y - x) == 0 || cross_sign(*q - x, y - x) == 0) cands.push_back(n->tile);
        }
        if (cands.size() >= 2) throw MalformedPatch("compose: small triangle with two mergeable neighbours");
        if (cands.empty()) {
            if (open) {
                ++out.dropped;
                continue;
            }
            throw MalformedPatch("compose: interior small triangle without a partner");
        }
        const HalfTile& l = patch.tiles[cands[0]];
        if (claimed[cands[0]]) throw MalformedPatch("compose: large triangle claimed twice");
        claimed[cands[0]] = 1;
        if (rhomb) {
            // acute (a, b, c) + obtuse (b, a, x) -> acute (x, c, a)
            if (!(l.a == s.b && l.b == s.a)) throw MalformedPatch("compose: partner roles disagree");
            out.tiles.push_back({Shape::Acute, l.c, s.c, s.a});
        } else {
            // obtuse (r, c, a) + acute (b, a, r) -> obtuse (a, b, c)
            if (!(l.b == s.c && l.c == s.a)) throw MalformedPatch("compose: partner roles disagree");
            out.tiles.push_back({Shape::Obtuse, s.c, l.a, s.b});
        }
        claimed[i] = 1;
    }

    // Large triangles left alone survive unchanged when the edge a partner
    // would use is shared with some tile; otherwise their status is unknown.
    const int certify_edge = rhomb ? 0 : 2;
    for (std::size_t i = 0; i < patch.tiles.size(); ++i) {
        const HalfTile& l = patch.tiles[i];
        if (l.shape == small_shape || claimed[i]) continue;
        if (neighbour(i, certify_edge))
            out.tiles.push_back(l);
        else
            ++out.dropped;
    }
    return out;
}

PenrosePatch scaled(const PenrosePatch& patch, const GoldenRational& factor) {
    PenrosePatch out = patch;
    for (auto& t : out.tiles) {
        t.a *= factor;
        t.b *= factor;
        t.c *= factor;
    }
    return out;
}

std::vector<Rhomb> pair_rhombs(const PenrosePatch& patch) {
    std::map<std::tuple<Shape, CycloPoint, CycloPoint>, std::vector<std::size_t>> by_base;
    for (std::size_t i = 0; i < patch.tiles.size(); ++i) {
        const auto& t = patch.tiles[i];
        by_base[{t.shape, t.b, t.c}].push_back(i);
    }
    std::vector<Rhomb> out;
    for (const auto& [key, idx] : by_base) {
        if (idx.size() != 2) continue;
        std::size_t p = idx[0], m = idx[1];
        if (patch.tiles[p].chirality() < 0) std::swap(p, m);
        out.push_back({std::get<0>(key), p, m});
    }
    std::sort(out.begin(), out.end(), [](const Rhomb& x, const Rhomb& y) { return x.plus < y.plus; });
    return out;
}

RhombCounts rhomb_counts(const PenrosePatch& patch) {
    RhombCounts c;
    for (const auto& r : pair_rhombs(patch)) {
        if (r.shape == Shape::Obtuse)
            ++c.thick;
        else
            ++c.thin;
    }
    return c;
}

RhombCounts half_tile_counts(const PenrosePatch& patch) {
    RhombCounts c;
    for (const auto& t : patch.tiles) {
        if (t.shape == Shape::Obtuse)
            ++c.thick;
        else
            ++c.thin;
    }
    c.thick /= 2;
    c.thin /= 2;
    return c;
}

GoldenRational area_units(const PenrosePatch& patch) {
    GoldenRational total;
    const GoldenRational half(mpq_class(1, 2));
    for (const auto& t : patch.tiles) {
        GoldenRational k = ((t.b - t.a).conj() * (t.c - t.a)).im_coeff();
        if (k.sign() < 0) k = -k;
        total += k * half;
    }
    return total;
}

std::string index_sequence(const PenrosePatch& patch, std::complex<double> p, int n) {
    constexpr double kTol = 1e-9;
    std::string out;
    PenrosePatch cur = patch;
    for (int k = 0; k < n; ++k) {
        const HalfTile* hit = nullptr;
        for (const auto& t : cur.tiles) {
            std::complex<double> v[3] = {t.a.embed(), t.b.embed(), t.c.embed()};
            double area2 = std::imag(std::conj(v[1] - v[0]) * (v[2] - v[0]));
            double sgn = area2 > 0 ? 1.0 : -1.0;
            double mind = 1e300;
            bool inside = true;
            for (int e = 0; e < 3; ++e) {
                std::complex<double> u = v[(e + 1) % 3] - v[e];
                double d = sgn * std::imag(std::conj(u) * (p - v[e])) / std::abs(u);
                mind = std::min(mind, d);
                if (d < -kTol) inside = false;
            }
            if (!inside) continue;
            if (mind <= kTol) throw OnBoundary("index_sequence: point on a tile boundary");
            hit = &t;
            break;
        }
        if (!hit) throw OutOfPatch("index_sequence: point left the composed patch");
        out.push_back(cur.size_of(*hit) == Size::Small ? 's' : 'l');
        if (k + 1 < n) cur = compose(cur);
    }
    return out;
}

namespace {

struct Corner {
    const HalfTile* tile;
    int role;
};

std::map<CycloPoint, std::vector<Corner>> corner_map(const PenrosePatch& patch) {
    std::map<CycloPoint, std::vector<Corner>> m;
    for (const auto& t : patch.tiles)
        for (int r = 0; r < 3; ++r) m[t.vertex(r)].push_back({&t, r});
    return m;
}

std::string canonical_signature(const CycloPoint& v, std::vector<Corner> corners) {
    std::complex<double> z = v.embed();
    auto bisector = [&](const Corner& c) {
        const HalfTile& t = *c.tile;
        std::complex<double> u = t.vertex((c.role + 1) % 3).embed() - z;
        std::complex<double> w = t.vertex((c.role + 2) % 3).embed() - z;
        return std::arg(u / std::abs(u) + w / std::abs(w));
    };
    std::sort(corners.begin(), corners.end(),
              [&](const Corner& x, const Corner& y) { return bisector(x) < bisector(y); });
    auto token = [](const Corner& c, bool mirror) {
        std::string s;
        s += c.tile->shape == Shape::Acute ? 'a' : 'o';
        s += static_cast<char>('A' + c.role);
        int ch = c.tile->chirality() * (mirror ? -1 : 1);
        s += ch > 0 ? '+' : '-';
        return s;
    };
    std::string best;
    const std::size_t n = corners.size();
    for (int mirror = 0; mirror < 2; ++mirror) {
        std::vector<std::string> toks;
        for (const auto& c : corners) toks.push_back(token(c, mirror));
        if (mirror) std::reverse(toks.begin(), toks.end());
        for (std::size_t r = 0; r < n; ++r) {
            std::string s;
            for (std::size_t k = 0; k < n; ++k) {
                if (k) s += ' ';
                s += toks[(r + k) % n];
            }
            if (best.empty() || s < best) best = s;
        }
    }
    return best;
}

int units_at(const std::vector<Corner>& corners) {
    int u = 0;
    for (const auto& c : corners) u += corner_units(c.tile->shape, c.role);
    return u;
}

int atlas_lookup(const std::string& sig) {
    const auto& atlas = penrose_star_atlas();
    for (std::size_t i = 0; i < atlas.size(); ++i)
        if (atlas[i] == sig) return static_cast<int>(i) + 1;
    return 0;
}

}  // namespace

VertexStar vertex_star(const PenrosePatch& patch, const CycloPoint& v) {
    auto m = corner_map(patch);
    auto it = m.find(v);
    if (it == m.end() || units_at(it->second) != 10) throw OutOfPatch("vertex_star: vertex is not surrounded");
    VertexStar s{v, canonical_signature(v, it->second), 0};
    s.atlas_id = atlas_lookup(s.signature);
    return s;
}

std::vector<VertexStar> audit_vertex_stars(const PenrosePatch& patch) {
    std::vector<VertexStar> out;
    for (const auto& [v, corners] : corner_map(patch)) {
        if (units_at(corners) != 10) continue;
        VertexStar s{v, canonical_signature(v, corners), 0};
        s.atlas_id = atlas_lookup(s.signature);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<CycloPoint> interior_vertices(const PenrosePatch& patch) {
    std::vector<CycloPoint> out;
    for (const auto& [v, corners] : corner_map(patch))
        if (units_at(corners) == 10) out.push_back(v);
    return out;
}

std::size_t marking_violations(const PenrosePatch& patch) {
    std::size_t bad = 0;
    for (const auto& [e, refs] : edge_map(patch)) {
        if (refs.size() != 2) {
            if (refs.size() > 2) bad += refs.size() - 2;
            continue;
        }
        const HalfTile& t0 = patch.tiles[refs[0].tile];
        const HalfTile& t1 = patch.tiles[refs[1].tile];
        EdgeMark m0 = edge_mark(t0.shape, refs[0].edge);
        EdgeMark m1 = edge_mark(t1.shape, refs[1].edge);
        if (m0.kind != m1.kind || t0.vertex(m0.from_role) != t1.vertex(m1.from_role)) ++bad;
    }
    return bad;
}

}  // namespace aperiodic
