#include "aperiodic/recompose.hpp"

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
constexpr double kTheta = kPi / 5;
constexpr std::complex<double> kZeta(0.80901699437494742410, 0.58778525229247312917);

CycloPoint chart_exact(const std::pair<GoldenRational, GoldenRational>& p) { return CycloPoint(p.first, p.second); }

// Frames of one rhomb, with a the apex of the chirality-s half.
struct Frame {
    CycloPoint as, ao, b, c;
};

Frame frame_of(const PenrosePatch& patch, const Rhomb& rh, int s) {
    const HalfTile& hs = patch.tiles[s > 0 ? rh.plus : rh.minus];
    const HalfTile& ho = patch.tiles[s > 0 ? rh.minus : rh.plus];
    return {hs.a, ho.a, hs.b, hs.c};
}

// Image of the chart point under the similarity taking 0 -> o and 1 -> o + d,
// choosing the orientation that keeps z on the side given by `ccw`.
struct Placed {
    std::complex<double> z;
    std::optional<CycloPoint> exact;
};

Placed place(const CycloPoint& o, const CycloPoint& d, const CycloPoint& pre, bool direct, const QPoint& q) {
    std::complex<double> w = q.w();
    if (!direct) w = std::conj(w);
    Placed p;
    std::complex<double> pz = direct ? pre.embed() : std::conj(pre.embed());
    p.z = o.embed() + d.embed() * pz * w;
    if (auto we = q.w_exact()) {
        CycloPoint e = direct ? *we : we->conj();
        CycloPoint pe = direct ? pre : pre.conj();
        p.exact = o + d * pe * e;
        p.z = p.exact->embed();
    }
    return p;
}

Placed thin_q(const Frame& f, const QPoint& q) {
    bool direct = cross_sign(f.c - f.as, f.b - f.as) > 0;
    return place(f.as, f.c - f.as, CycloPoint(GoldenRational(1)), direct, q);
}

// R: copy of ABQ with A -> E = B, B -> F = A_o. S: copy of CAQ with C -> G = C,
// A -> H = A_s.
std::pair<Placed, Placed> thick_rs(const Frame& f, const QPoint& q) {
    const CycloPoint& e = f.b;
    const CycloPoint& ff = f.ao;
    const CycloPoint& g = f.c;
    const CycloPoint& h = f.as;
    bool r_direct = cross_sign(ff - e, h - e) < 0;
    Placed r = place(e, ff - e, CycloPoint::zeta(9), r_direct, q);
    bool s_direct = cross_sign(g - h, e - h) > 0;
    Placed s = place(h, g - h, CycloPoint(GoldenRational(1)), s_direct, q);
    return {r, s};
}

Frame reference_thin() {
    // A = 0, C = 1, B = z.
    return {CycloPoint(), CycloPoint(GoldenRational(1)) + CycloPoint::zeta(1), CycloPoint::zeta(1),
            CycloPoint(GoldenRational(1))};
}

Frame reference_thick() {
    // Obtuse apex at 0, B = z^-1, C = z^2.
    CycloPoint as;
    CycloPoint b = CycloPoint::zeta(9);
    CycloPoint c = CycloPoint::zeta(2);
    return {as, b + c, b, c};
}


struct Key {
    long long x, y;
    bool operator<(const Key& o) const { return x != o.x ? x < o.x : y < o.y; }
};

Key cell(std::complex<double> z) {
    return {static_cast<long long>(std::floor(z.real())), static_cast<long long>(std::floor(z.imag()))};
}

// Splits segments at nodes lying in their interior and rejects coincident
// nodes. Only limit positions of q put nodes on other segments.
std::vector<std::vector<Segment>> planarize(const std::vector<std::complex<double>>& pos,
                                            const std::vector<Segment>& segs) {
    std::map<Key, std::vector<std::size_t>> grid;
    for (std::size_t i = 0; i < pos.size(); ++i) grid[cell(pos[i])].push_back(i);
    for (const auto& [k, ids] : grid) {
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                if (std::abs(pos[ids[i]] - pos[ids[j]]) < 1e-10) throw DegenerateTile("recompose: coincident vertices");
    }
    std::vector<std::vector<Segment>> out;
    out.reserve(segs.size());
    for (auto [a, b] : segs) {
        std::complex<double> pa = pos[a], pb = pos[b];
        std::complex<double> d = pb - pa;
        double len = std::abs(d);
        std::vector<std::pair<double, std::size_t>> on;
        Key lo = cell({std::min(pa.real(), pb.real()), std::min(pa.imag(), pb.imag())});
        Key hi = cell({std::max(pa.real(), pb.real()), std::max(pa.imag(), pb.imag())});
        for (long long x = lo.x - 1; x <= hi.x + 1; ++x) {
            for (long long y = lo.y - 1; y <= hi.y + 1; ++y) {
                auto it = grid.find({x, y});
                if (it == grid.end()) continue;
                for (std::size_t n : it->second) {
                    if (n == a || n == b) continue;
                    std::complex<double> rel = (pos[n] - pa) / d;
                    if (std::abs(rel.imag()) * len < 1e-9 && rel.real() > 1e-9 && rel.real() < 1 - 1e-9)
                        on.push_back({rel.real(), n});
                }
            }
        }
        std::sort(on.begin(), on.end());
        std::vector<Segment> pieces;
        std::size_t prev = a;
        for (const auto& [t, n] : on) {
            pieces.push_back({std::min(prev, n), std::max(prev, n)});
            prev = n;
        }
        pieces.push_back({std::min(prev, b), std::max(prev, b)});
        out.push_back(std::move(pieces));
    }
    return out;
}

// Rotates a face given in label order so that it starts at the first label,
// or returns false when the node kinds do not match any tile.
bool label_face(const std::vector<AmmannNode>& nodes, std::vector<std::size_t>& f, TileKind& kind, std::size_t& rhomb) {
    const std::size_t n = f.size();
    auto k = [&](std::size_t i) { return nodes[f[i % n]].kind; };
    auto same = [&](std::size_t i, std::size_t j) { return nodes[f[i % n]].rhomb == nodes[f[j % n]].rhomb; };
    std::size_t start = n;
    if (n == 6) {
        std::size_t hits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (k(i) == NodeKind::R) {
                ++hits;
                start = (i + n - 1) % n;
            }
        }
        if (hits != 1 || k(start) != NodeKind::Penrose || k(start + 3) != NodeKind::Q) return false;
        kind = TileKind::B;
        rhomb = nodes[f[(start + 3) % n]].rhomb;
    } else if (n == 5) {
        for (std::size_t i = 0; i < n && start == n; ++i) {
            if (k(i) == NodeKind::S && k(i + 1) == NodeKind::R && same(i, i + 1)) {
                kind = TileKind::A;
                start = (i + n - 2) % n;
                rhomb = nodes[f[(i + 1) % n]].rhomb;
            }
        }
        for (std::size_t i = 0; i < n && start == n; ++i) {
            if (k(i) == NodeKind::R && k(i + 1) == NodeKind::S && same(i, i + 1)) {
                kind = TileKind::C;
                start = (i + n - 3) % n;
                rhomb = nodes[f[i % n]].rhomb;
            }
        }
        if (start == n) return false;
    } else {
        return false;
    }
    std::rotate(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(start), f.end());
    return true;
}

double corner_angle(const std::vector<std::complex<double>>& v, std::size_t i, Orientation o) {
    const std::size_t n = v.size();
    std::complex<double> prev = v[(i + n - 1) % n] - v[i];
    std::complex<double> next = v[(i + 1) % n] - v[i];
    double a = o == Orientation::CCW ? std::arg(prev / next) : std::arg(next / prev);
    return a < 0 ? a + 2 * kPi : a;
}

CycloPoint corner_ratio(const std::vector<CycloPoint>& v, std::size_t i, Orientation o) {
    const std::size_t n = v.size();
    CycloPoint prev = v[(i + n - 1) % n] - v[i];
    CycloPoint next = v[(i + 1) % n] - v[i];
    return o == Orientation::CCW ? prev * next.conj() : next * prev.conj();
}

bool positive_real(const CycloPoint& p) { return p.im_coeff().is_zero() && p.re().sign() > 0; }

}  // namespace

QPoint QPoint::polar(double r, double theta) {
    QPoint q;
    q.r = r;
    q.theta = theta;
    return q;
}

QPoint QPoint::cartesian(double x, double y) { return polar(std::hypot(x, y), std::atan2(y, x)); }

QPoint QPoint::exact_point(GoldenRational p0, GoldenRational p1) {
    std::complex<double> w = CycloPoint(p0, p1).embed();
    QPoint q = polar(std::abs(w), std::arg(w));
    q.exact = std::make_pair(std::move(p0), std::move(p1));
    return q;
}

std::complex<double> QPoint::w() const {
    if (exact) return chart_exact(*exact).embed();
    return std::polar(r, theta);
}

std::optional<CycloPoint> QPoint::w_exact() const {
    if (!exact) return std::nullopt;
    return chart_exact(*exact);
}

double QPoint::x() const { return r * std::cos(theta); }
double QPoint::y() const { return r * std::sin(theta); }

GenericityReport validate_q(const QPoint& q) {
    constexpr double kTol = 1e-12;
    if (auto we = q.w_exact()) {
        const CycloPoint one(GoldenRational(1));
        const CycloPoint z = CycloPoint::zeta(1);
        if (cross_sign(one, *we) < 0 || cross_sign(*we, z) < 0 || cross_sign(z - one, *we - one) < 0)
            throw OutOfRhomb("q outside the chart triangle");
    } else {
        std::complex<double> w = q.w();
        if (!(q.r >= 0) || !std::isfinite(q.r) || !std::isfinite(q.theta) || q.theta < -kTol ||
            q.theta > kTheta + kTol)
            throw OutOfRhomb("q outside the chart triangle");
        if (std::imag(std::conj(kZeta - 1.0) * (w - 1.0)) < -kTol) throw OutOfRhomb("q outside the chart triangle");
    }

    GenericityReport rep;
    Frame thin = reference_thin();
    Frame thick = reference_thick();
    Placed qq = thin_q(thin, q);
    auto [r, s] = thick_rs(thick, q);
    rep.aq = std::abs(qq.z - thin.as.embed());
    rep.bq = std::abs(qq.z - thin.b.embed());
    rep.cq = std::abs(qq.z - thin.c.embed());
    rep.rs = std::abs(r.z - s.z);
    const char* names[4] = {"|AQ|", "|BQ|", "|CQ|", "|RS|"};
    double len[4] = {rep.aq, rep.bq, rep.cq, rep.rs};
    if (qq.exact) {
        rep.exact = true;
        GoldenRational sq[4] = {(*qq.exact - thin.as).norm2(), (*qq.exact - thin.b).norm2(),
                                (*qq.exact - thin.c).norm2(), (*r.exact - *s.exact).norm2()};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (sq[i] == sq[j]) rep.coincidences.push_back(std::string(names[i]) + "=" + names[j]);
    } else {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (std::abs(len[i] - len[j]) <= kTol) rep.coincidences.push_back(std::string(names[i]) + "=" + names[j]);
    }
    return rep;
}

char kind_char(TileKind k) { return k == TileKind::A ? 'A' : (k == TileKind::B ? 'B' : 'C'); }

std::size_t corner_count(TileKind k) { return k == TileKind::B ? 6 : 5; }

const std::vector<std::string>& angle_labels(TileKind k) {
    static const std::vector<std::string> a = {"α", "β", "χ", "δ", "ε"};
    static const std::vector<std::string> b = {"γ", "η", "ι", "κ", "λ", "μ"};
    static const std::vector<std::string> c = {"ν", "ρ", "σ", "τ", "ω"};
    return k == TileKind::A ? a : (k == TileKind::B ? b : c);
}

const std::vector<std::string>& edge_labels(TileKind k) {
    static const std::vector<std::string> a = {"a", "b", "c", "d", "e"};
    static const std::vector<std::string> b = {"f", "g", "h", "i", "j", "k"};
    static const std::vector<std::string> c = {"l", "m", "n", "o", "p"};
    return k == TileKind::A ? a : (k == TileKind::B ? b : c);
}

double AmmannPrototile::angle(std::size_t i) const { return corner_angle(vertices, i, orientation); }

double AmmannPrototile::edge(std::size_t i) const {
    const std::size_t n = vertices.size();
    return std::abs(vertices[i] - vertices[(i + n - 1) % n]);
}

std::vector<std::complex<double>> AmmannPatch::positions() const {
    std::vector<std::complex<double>> p;
    p.reserve(nodes.size());
    for (const auto& n : nodes) p.push_back(n.z);
    return p;
}

std::size_t AmmannPatch::count(TileKind k) const {
    return static_cast<std::size_t>(std::count_if(tiles.begin(), tiles.end(), [k](const AmmannTile& t) { return t.kind == k; }));
}

AmmannPatch recompose(const PenrosePatch& patch, const QPoint& q, int s) {
    if (!patch.rhomb_stage()) throw MalformedPatch("recompose: patch is not at a rhomb stage");
    validate_q(q);
    {
        std::complex<double> w = q.w();
        if (std::abs(w) < 1e-12 || std::abs(w - 1.0) < 1e-12 || std::abs(w - kZeta) < 1e-12)
            throw DegenerateTile("recompose: q on a rhomb vertex");
    }

    AmmannPatch out;
    out.q = q;
    out.orientation = s < 0 ? Orientation::CCW : Orientation::CW;
    out.penrose_generation = patch.generation;

    std::map<CycloPoint, std::size_t> penrose_id;
    auto pv = [&](const CycloPoint& p) {
        auto [it, fresh] = penrose_id.try_emplace(p, out.nodes.size());
        if (fresh) out.nodes.push_back({p.embed(), NodeKind::Penrose, 0, p});
        return it->second;
    };
    auto add = [&](const Placed& p, NodeKind k, std::size_t rh) {
        out.nodes.push_back({p.z, k, rh, p.exact});
        return out.nodes.size() - 1;
    };

    std::vector<Segment> segs;
    std::map<Segment, int> rhomb_edges;
    const auto rhombs = pair_rhombs(patch);
    for (std::size_t i = 0; i < rhombs.size(); ++i) {
        const Frame f = frame_of(patch, rhombs[i], s);
        std::size_t as = pv(f.as), ao = pv(f.ao), b = pv(f.b), c = pv(f.c);
        for (Segment e : {Segment{as, b}, Segment{b, ao}, Segment{ao, c}, Segment{c, as}})
            ++rhomb_edges[{std::min(e.first, e.second), std::max(e.first, e.second)}];
        if (rhombs[i].shape == Shape::Acute) {
            ++out.thin_rhombs;
            std::size_t qn = add(thin_q(f, q), NodeKind::Q, i);
            segs.insert(segs.end(), {{qn, as}, {qn, b}, {qn, c}});
        } else {
            ++out.thick_rhombs;
            auto [r, sp] = thick_rs(f, q);
            std::size_t rn = add(r, NodeKind::R, i);
            std::size_t sn = add(sp, NodeKind::S, i);
            segs.insert(segs.end(), {{rn, b}, {rn, ao}, {sn, c}, {sn, as}, {rn, sn}});
        }
    }
    const std::size_t interior_segments = segs.size();
    for (const auto& [e, n] : rhomb_edges)
        if (n == 1) segs.push_back(e);

    const auto pos = out.positions();
    const auto pieces = planarize(pos, segs);
    std::set<Segment> planar, boundary;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (const auto& p : pieces[i]) {
            planar.insert(p);
            if (i >= interior_segments) boundary.insert(p);
        }
    }

    FaceGraph g = trace_faces(pos, {planar.begin(), planar.end()});
    for (auto& f : g.faces) {
        if (signed_area(pos, f) <= 1e-12) continue;
        bool touches = false;
        for (std::size_t i = 0; i < f.size() && !touches; ++i) {
            std::size_t a = f[i], b = f[(i + 1) % f.size()];
            touches = boundary.count({std::min(a, b), std::max(a, b)}) > 0;
        }
        if (touches) {
            out.fragments.push_back(f);
            continue;
        }
        std::vector<std::size_t> lab = f;
        if (s > 0) std::reverse(lab.begin(), lab.end());
        AmmannTile t;
        if (!label_face(out.nodes, lab, t.kind, t.rhomb)) {
            // Limit positions of q add straight corners; drop them and retry.
            std::vector<std::size_t> bent;
            for (std::size_t i = 0; i < lab.size(); ++i) {
                std::complex<double> a = pos[lab[(i + lab.size() - 1) % lab.size()]], z = pos[lab[i]],
                                     b = pos[lab[(i + 1) % lab.size()]];
                if (std::abs(std::imag(std::conj(z - a) * (b - z))) > 1e-12 * std::abs(z - a) * std::abs(b - z))
                    bent.push_back(lab[i]);
            }
            if (!label_face(out.nodes, bent, t.kind, t.rhomb)) {
                out.fragments.push_back(f);
                ++out.dropped;
                continue;
            }
            lab = std::move(bent);
        }
        t.v = std::move(lab);
        out.tiles.push_back(std::move(t));
    }
    return out;
}

double tile_area(const AmmannPatch& patch, const AmmannTile& t) {
    return std::abs(signed_area(patch.positions(), t.v));
}

AmmannPrototile as_prototile(const AmmannPatch& patch, const AmmannTile& t) {
    AmmannPrototile p;
    p.kind = t.kind;
    p.orientation = patch.orientation;
    bool exact = true;
    for (std::size_t id : t.v) {
        p.vertices.push_back(patch.nodes[id].z);
        exact = exact && patch.nodes[id].exact.has_value();
    }
    if (exact)
        for (std::size_t id : t.v) p.exact.push_back(*patch.nodes[id].exact);
    return p;
}

PrototileSet build_prototiles(const QPoint& q, bool allow_nongeneric) {
    GenericityReport rep = validate_q(q);
    if (!rep.generic() && !allow_nongeneric) throw DomainError("build_prototiles: q is not generic");
    for (int steps : {4, 6}) {
        AmmannPatch ap = recompose(deflate(seed_patch(SeedKind::Sun), steps), q);
        PrototileSet out;
        bool found[3] = {false, false, false};
        double best[3] = {0, 0, 0};
        for (const auto& t : ap.tiles) {
            std::complex<double> c;
            for (std::size_t id : t.v) c += ap.nodes[id].z;
            double d = std::abs(c / static_cast<double>(t.v.size()));
            int k = static_cast<int>(t.kind);
            if (!found[k] || d < best[k]) {
                found[k] = true;
                best[k] = d;
                out[k] = as_prototile(ap, t);
            }
        }
        if (found[0] && found[1] && found[2]) {
            for (const auto& p : out) {
                std::vector<std::size_t> idx(p.vertices.size());
                for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
                if (std::abs(signed_area(p.vertices, idx)) < 1e-12) throw DegenerateTile("build_prototiles: zero-area tile");
            }
            return out;
        }
    }
    throw DegenerateTile("build_prototiles: tile kinds missing");
}

double RelationReport::max_residual() const {
    double m = 0;
    for (const auto& r : angles) m = std::max(m, r.residual);
    for (const auto& r : edges) m = std::max(m, r.residual);
    return m;
}

bool RelationReport::exact_checked() const {
    for (const auto* l : {&angles, &edges})
        for (const auto& r : *l)
            if (!r.exact) return false;
    return true;
}

bool RelationReport::exact_holds() const {
    if (!exact_checked()) return false;
    for (const auto* l : {&angles, &edges})
        for (const auto& r : *l)
            if (!*r.exact) return false;
    return true;
}

RelationReport verify_relations(const PrototileSet& t) {
    struct Term {
        int tile;
        int corner;
        int sign;
    };
    struct AngleRel {
        const char* name;
        std::vector<std::vector<Term>> sides;  // each side must equal units * theta
        int units;
    };
    enum { A, B, C };
    // Corners: A α0 β1 χ2 δ3 ε4; B γ0 η1 ι2 κ3 λ4 μ5; C ν0 ρ1 σ2 τ3 ω4.
    const std::vector<AngleRel> rels = {
        {"ε=γ=ν=2θ", {{{A, 4, 1}}, {{B, 0, 1}}, {{C, 0, 1}}}, 2},
        {"ι=λ=4θ", {{{B, 2, 1}}, {{B, 4, 1}}}, 4},
        {"β+σ=6θ", {{{A, 1, 1}, {C, 2, 1}}}, 6},
        {"χ+ρ+ω=10θ", {{{A, 2, 1}, {C, 1, 1}, {C, 4, 1}}}, 10},
        {"δ+τ+η=10θ", {{{A, 3, 1}, {C, 3, 1}, {B, 1, 1}}}, 10},
        {"α+κ+μ=10θ", {{{A, 0, 1}, {B, 3, 1}, {B, 5, 1}}}, 10},
        {"α=η", {{{A, 0, 1}, {B, 1, -1}}}, 0},
        {"μ=ρ", {{{B, 5, 1}, {C, 1, -1}}}, 0},
    };
    const bool exact = !t[0].exact.empty() && !t[1].exact.empty() && !t[2].exact.empty();

    RelationReport rep;
    for (const auto& rel : rels) {
        Residual r{rel.name, 0, std::nullopt};
        bool holds = true;
        for (const auto& side : rel.sides) {
            double sum = 0;
            for (const auto& term : side) sum += term.sign * t[term.tile].angle(term.corner);
            r.residual = std::max(r.residual, std::abs(sum - rel.units * kTheta));
            if (exact) {
                CycloPoint prod = CycloPoint::zeta(-rel.units);
                for (const auto& term : side) {
                    CycloPoint u = corner_ratio(t[term.tile].exact, term.corner, t[term.tile].orientation);
                    prod *= term.sign > 0 ? u : u.conj();
                }
                holds = holds && positive_real(prod);
            }
        }
        if (exact) r.exact = holds && r.residual < 1e-6;
        rep.angles.push_back(r);
    }

    struct EdgeRel {
        const char* name;
        std::vector<std::pair<int, int>> members;
    };
    // Edges: A a0 b1 c2 d3 e4; B f0 g1 h2 i3 j4 k5; C l0 m1 n2 o3 p4.
    const std::vector<EdgeRel> classes = {
        {"a=c=e=f=g=n", {{A, 0}, {A, 2}, {A, 4}, {B, 0}, {B, 1}, {C, 2}}},
        {"b=h=i=o", {{A, 1}, {B, 2}, {B, 3}, {C, 3}}},
        {"j=k=l=m", {{B, 4}, {B, 5}, {C, 0}, {C, 1}}},
        {"d=p", {{A, 3}, {C, 4}}},
    };
    for (const auto& cl : classes) {
        double lo = 1e300, hi = -1e300;
        for (auto [k, e] : cl.members) {
            double l = t[k].edge(e);
            lo = std::min(lo, l);
            hi = std::max(hi, l);
        }
        Residual r{cl.name, hi - lo, std::nullopt};
        if (exact) {
            auto sq = [&](int k, int e) {
                const auto& v = t[k].exact;
                return (v[e] - v[(e + v.size() - 1) % v.size()]).norm2();
            };
            GoldenRational ref = sq(cl.members[0].first, cl.members[0].second);
            bool holds = true;
            for (auto [k, e] : cl.members) holds = holds && sq(k, e) == ref;
            r.exact = holds;
        }
        rep.edges.push_back(r);
    }
    return rep;
}

}  // namespace aperiodic
