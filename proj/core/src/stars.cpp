#include "aperiodic/stars.hpp"

#include "aperiodic/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace aperiodic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * kPi;

struct CornerInfo {
    TileKind kind;
    std::size_t idx;
    std::string token;
    double angle;
    int in_class;   // length class of edge idx, ending at the corner
    int out_class;  // length class of edge idx + 1, leaving it
};

struct Placed {
    TileKind kind;
    std::vector<std::complex<double>> pts;
};

bool same_angle(double a, double b) { return std::abs(std::remainder(a - b, kTwoPi)) < 1e-6; }

class Enumerator {
public:
    Enumerator(const QPoint& q, std::size_t budget) : proto_(build_prototiles(q, true)), budget_(budget) {
        std::vector<double> lengths;
        for (const auto& p : proto_)
            for (std::size_t j = 0; j < p.vertices.size(); ++j) lengths.push_back(p.edge(j));
        std::sort(lengths.begin(), lengths.end());
        std::vector<double> reps;
        for (double l : lengths)
            if (reps.empty() || l - reps.back() > 1e-9) reps.push_back(l);
        auto cls = [&](double l) {
            for (std::size_t i = 0; i < reps.size(); ++i)
                if (std::abs(l - reps[i]) <= 1e-9) return static_cast<int>(i);
            return -1;
        };
        for (const auto& p : proto_) {
            const std::size_t n = p.vertices.size();
            for (std::size_t i = 0; i < n; ++i)
                corners_.push_back({p.kind, i, std::string(1, kind_char(p.kind)) + angle_labels(p.kind)[i], p.angle(i),
                                    cls(p.edge(i)), cls(p.edge((i + 1) % n))});
        }
        std::sort(corners_.begin(), corners_.end(), [](const CornerInfo& a, const CornerInfo& b) { return a.token < b.token; });
    }

    const std::vector<CornerInfo>& corners() const { return corners_; }

    int find(const std::string& tok) const {
        for (std::size_t i = 0; i < corners_.size(); ++i)
            if (corners_[i].token == tok) return static_cast<int>(i);
        throw DomainError("unknown corner " + tok);
    }

    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<int> seq;
        for (int c = 0; c < static_cast<int>(corners_.size()); ++c) {
            seq = {c};
            dfs(seq, corners_[static_cast<std::size_t>(c)].angle, out);
        }
        return out;
    }

    void set_candidates(std::vector<std::vector<int>> c) { cands_ = std::move(c); }

    Placed place(int c, std::complex<double> z0, std::complex<double> dir) const {
        const auto& ci = corners_[static_cast<std::size_t>(c)];
        const auto& pts = proto_[static_cast<std::size_t>(ci.kind)].vertices;
        const std::size_t n = pts.size();
        std::complex<double> a = pts[ci.idx], b = pts[(ci.idx + 1) % n];
        std::complex<double> rot = dir / ((b - a) / std::abs(b - a));
        Placed p{ci.kind, {}};
        for (const auto& v : pts) p.pts.push_back(z0 + (v - a) * rot);
        return p;
    }

    std::vector<Placed> star_tiles(const std::vector<int>& seq) const {
        std::vector<Placed> out;
        std::complex<double> d = 1;
        for (int c : seq) {
            Placed p = place(c, 0, d);
            const std::size_t n = p.pts.size();
            std::complex<double> w = p.pts[(corners_[static_cast<std::size_t>(c)].idx + n - 1) % n];
            d = w / std::abs(w);
            out.push_back(std::move(p));
        }
        return out;
    }

    // (corner, start angle) of every placed corner at z.
    std::vector<std::pair<int, double>> corners_at(const std::vector<Placed>& placed, std::complex<double> z) const {
        std::vector<std::pair<int, double>> l;
        for (const auto& p : placed) {
            const std::size_t n = p.pts.size();
            for (std::size_t i = 0; i < n; ++i)
                if (std::abs(p.pts[i] - z) < 1e-7)
                    l.push_back({corner_of(p.kind, i), std::arg(p.pts[(i + 1) % n] - p.pts[i])});
        }
        return l;
    }

    bool full(const std::vector<Placed>& placed, std::complex<double> z) const {
        double s = 0;
        for (const auto& [c, a] : corners_at(placed, z)) s += corners_[static_cast<std::size_t>(c)].angle;
        return std::abs(s - kTwoPi) < 1e-6;
    }

    // Candidate cycles compatible with the corners already at a vertex; each
    // yields the tiles still missing there.
    std::vector<std::vector<Placed>> completions(const std::vector<Placed>& placed, std::complex<double> z,
                                                 bool first_only) const {
        auto known = corners_at(placed, z);
        std::vector<std::vector<Placed>> out;
        std::vector<std::vector<std::pair<int, long long>>> keys;
        if (known.empty()) return out;
        for (const auto& cand : cands_) {
            const std::size_t n = cand.size();
            for (std::size_t rot = 0; rot < n; ++rot) {
                if (cand[rot] != known[0].first) continue;
                std::vector<std::pair<int, double>> pos;
                double a = known[0].second;
                for (std::size_t k = 0; k < n; ++k) {
                    int c = cand[(rot + k) % n];
                    pos.push_back({c, a});
                    a += corners_[static_cast<std::size_t>(c)].angle;
                }
                std::vector<char> used(n, 0);
                bool ok = true;
                for (const auto& [c, st] : known) {
                    std::size_t m = n;
                    for (std::size_t i = 0; i < n && m == n; ++i)
                        if (!used[i] && pos[i].first == c && same_angle(pos[i].second, st)) m = i;
                    if (m == n) {
                        ok = false;
                        break;
                    }
                    used[m] = 1;
                }
                if (!ok) continue;
                if (first_only) return {{}};
                std::vector<Placed> fresh;
                std::vector<std::pair<int, long long>> key;
                for (std::size_t i = 0; i < n; ++i) {
                    if (used[i]) continue;
                    Placed p = place(pos[i].first, z, std::polar(1.0, pos[i].second));
                    std::complex<double> c;
                    for (const auto& v : p.pts) c += v;
                    key.push_back({static_cast<int>(p.kind), std::llround(c.real() * 1e5) * 1000003LL + std::llround(c.imag() * 1e5)});
                    fresh.push_back(std::move(p));
                }
                std::sort(key.begin(), key.end());
                if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
                keys.push_back(std::move(key));
                out.push_back(std::move(fresh));
            }
        }
        return out;
    }

    bool consistent_at(const std::vector<Placed>& placed, std::complex<double> z) const {
        return !completions(placed, z, true).empty();
    }

    static std::vector<std::complex<double>> vertices(const std::vector<Placed>& placed) {
        std::vector<std::complex<double>> vs;
        for (const auto& p : placed)
            for (const auto& v : p.pts)
                if (std::none_of(vs.begin(), vs.end(), [&](auto w) { return std::abs(v - w) < 1e-7; })) vs.push_back(v);
        return vs;
    }

    static bool overlap(const Placed& x, const Placed& y) {
        for (const auto* poly : {&x.pts, &y.pts}) {
            const std::size_t n = poly->size();
            for (std::size_t i = 0; i < n; ++i) {
                std::complex<double> a = (*poly)[i], nrm = ((*poly)[(i + 1) % n] - a) * std::complex<double>(0, -1);
                auto proj = [&](const std::vector<std::complex<double>>& ps, double& lo, double& hi) {
                    lo = 1e300;
                    hi = -1e300;
                    for (const auto& p : ps) {
                        double v = ((p - a) * std::conj(nrm)).real();
                        lo = std::min(lo, v);
                        hi = std::max(hi, v);
                    }
                };
                double l1, h1, l2, h2;
                proj(x.pts, l1, h1);
                proj(y.pts, l2, h2);
                if (h1 <= l2 + 1e-7 || h2 <= l1 + 1e-7) return false;
            }
        }
        return true;
    }

    // Completes every open vertex of `ring`, then the next ring, `depth` times.
    bool extend(const std::vector<Placed>& placed, const std::vector<std::complex<double>>& ring, int depth) {
        if (++spent_ > budget_) throw budget_exceeded{};
        std::vector<std::complex<double>> todo;
        for (auto z : ring)
            if (!full(placed, z)) todo.push_back(z);
        if (todo.empty()) {
            if (depth <= 1) return true;
            std::vector<std::complex<double>> next;
            for (auto z : vertices(placed))
                if (!full(placed, z)) next.push_back(z);
            return extend(placed, next, depth - 1);
        }
        auto z = *std::min_element(todo.begin(), todo.end(), [](auto a, auto b) { return std::abs(a) < std::abs(b); });
        for (auto& fresh : completions(placed, z, false)) {
            bool clash = false;
            for (const auto& f : fresh)
                for (const auto& p : placed)
                    if (!clash && overlap(f, p)) clash = true;
            if (clash) continue;
            std::vector<Placed> next = placed;
            next.insert(next.end(), fresh.begin(), fresh.end());
            bool ok = true;
            for (auto v : vertices(fresh))
                if (ok && !consistent_at(next, v)) ok = false;
            if (!ok) continue;
            if (extend(next, ring, depth)) return true;
        }
        return false;
    }

    struct budget_exceeded {};
    void reset_budget() { spent_ = 0; }

private:
    int corner_of(TileKind k, std::size_t idx) const {
        for (std::size_t i = 0; i < corners_.size(); ++i)
            if (corners_[i].kind == k && corners_[i].idx == idx) return static_cast<int>(i);
        return -1;
    }

    void dfs(std::vector<int>& seq, double total, std::vector<std::vector<int>>& out) const {
        const auto& last = corners_[static_cast<std::size_t>(seq.back())];
        if (std::abs(total - kTwoPi) < 1e-7) {
            if (last.in_class == corners_[static_cast<std::size_t>(seq.front())].out_class && minimal(seq)) out.push_back(seq);
            return;
        }
        if (total > kTwoPi) return;
        for (int c = seq.front(); c < static_cast<int>(corners_.size()); ++c) {
            const auto& ci = corners_[static_cast<std::size_t>(c)];
            if (ci.out_class != last.in_class) continue;
            seq.push_back(c);
            dfs(seq, total + ci.angle, out);
            seq.pop_back();
        }
    }

    static bool minimal(const std::vector<int>& seq) {
        const std::size_t n = seq.size();
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t k = 0; k < n; ++k) {
                int a = seq[(r + k) % n], b = seq[k];
                if (a < b) return false;
                if (a > b) break;
            }
        }
        return true;
    }

    PrototileSet proto_;
    std::vector<CornerInfo> corners_;
    std::vector<std::vector<int>> cands_;
    std::size_t budget_;
    std::size_t spent_ = 0;
};

// Is sum(corners) - 10 theta in the span of the angle relations?
bool satisfies_relations(const std::vector<CornerInfo>& corners, const std::vector<int>& seq) {
    const int cols = 17;
    auto col = [&](const std::string& tok) {
        int base = 0;
        for (TileKind k : {TileKind::A, TileKind::B, TileKind::C}) {
            const auto& l = angle_labels(k);
            for (std::size_t i = 0; i < l.size(); ++i)
                if (tok == std::string(1, kind_char(k)) + l[i]) return base + static_cast<int>(i);
            base += static_cast<int>(l.size());
        }
        return -1;
    };
    auto row = [&](std::vector<std::pair<std::string, int>> terms, int units) {
        std::vector<mpq_class> r(cols, 0);
        for (const auto& [t, c] : terms) r[static_cast<std::size_t>(col(t))] += c;
        r[16] = units;
        return r;
    };
    std::vector<std::vector<mpq_class>> m = {
        row({{"Aε", 1}}, 2),
        row({{"Bγ", 1}}, 2),
        row({{"Cν", 1}}, 2),
        row({{"Bι", 1}}, 4),
        row({{"Bλ", 1}}, 4),
        row({{"Aβ", 1}, {"Cσ", 1}}, 6),
        row({{"Aχ", 1}, {"Cρ", 1}, {"Cω", 1}}, 10),
        row({{"Aδ", 1}, {"Cτ", 1}, {"Bη", 1}}, 10),
        row({{"Aα", 1}, {"Bκ", 1}, {"Bμ", 1}}, 10),
        row({{"Aα", 1}, {"Bη", -1}}, 0),
        row({{"Bμ", 1}, {"Cρ", -1}}, 0),
    };
    std::vector<mpq_class> v(cols, 0);
    for (int c : seq) v[static_cast<std::size_t>(col(corners[static_cast<std::size_t>(c)].token))] += 1;
    v[16] = 10;

    auto rank = [&](std::vector<std::vector<mpq_class>> a) {
        std::size_t r = 0;
        for (int c = 0; c < cols && r < a.size(); ++c) {
            std::size_t p = r;
            while (p < a.size() && sgn(a[p][static_cast<std::size_t>(c)]) == 0) ++p;
            if (p == a.size()) continue;
            std::swap(a[p], a[r]);
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (i == r || sgn(a[i][static_cast<std::size_t>(c)]) == 0) continue;
                mpq_class f = a[i][static_cast<std::size_t>(c)] / a[r][static_cast<std::size_t>(c)];
                for (int j = 0; j < cols; ++j) a[i][static_cast<std::size_t>(j)] -= f * a[r][static_cast<std::size_t>(j)];
            }
            ++r;
        }
        return r;
    };
    std::size_t base = rank(m);
    m.push_back(v);
    return rank(m) == base;
}

std::vector<std::string> tokens(const std::string& sig) {
    std::vector<std::string> out;
    std::istringstream in(sig);
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

}  // namespace

std::vector<LocalStar> StarEnumeration::extendable() const {
    std::vector<LocalStar> out;
    for (const auto& s : candidates)
        if (s.status == StarStatus::Extendable) out.push_back(s);
    return out;
}

std::vector<LocalStar> StarEnumeration::rejected() const {
    std::vector<LocalStar> out;
    for (const auto& s : candidates)
        if (s.status == StarStatus::Rejected) out.push_back(s);
    return out;
}

std::vector<LocalStar> StarEnumeration::inconclusive() const {
    std::vector<LocalStar> out;
    for (const auto& s : candidates)
        if (s.status == StarStatus::Inconclusive) out.push_back(s);
    return out;
}

std::size_t StarEnumeration::extra() const {
    return static_cast<std::size_t>(std::count_if(candidates.begin(), candidates.end(), [](const LocalStar& s) { return !s.in_atlas; }));
}

StarEnumeration enumerate_local_stars(const QPoint& q, int max_extension_depth, std::size_t budget) {
    Enumerator en(q, budget);
    const auto& corners = en.corners();
    auto cycles = en.cycles();
    StarEnumeration res;
    res.max_depth = max_extension_depth;
    res.angle_candidates = cycles.size();

    std::vector<std::vector<int>> cands;
    for (const auto& c : cycles)
        if (satisfies_relations(corners, c)) cands.push_back(c);
    en.set_candidates(cands);

    const auto& atlas = ammann_star_atlas();
    for (const auto& c : cands) {
        LocalStar s;
        for (int i : c) s.corners.push_back(corners[static_cast<std::size_t>(i)].token);
        for (std::size_t i = 0; i < s.corners.size(); ++i) s.signature += (i ? " " : "") + s.corners[i];
        s.numbers = star_numbers(s.signature);
        s.in_atlas = std::find(atlas.begin(), atlas.end(), s.signature) != atlas.end();

        if (max_extension_depth < 1) {
            s.status = StarStatus::Extendable;
            res.candidates.push_back(std::move(s));
            continue;
        }
        auto placed = en.star_tiles(c);
        std::vector<std::complex<double>> ring;
        bool ok = true;
        for (auto v : Enumerator::vertices(placed)) {
            if (std::abs(v) < 1e-7) continue;
            ring.push_back(v);
            if (!en.consistent_at(placed, v)) ok = false;
        }
        if (!ok) {
            s.status = StarStatus::Rejected;
            s.depth = 1;
        } else {
            s.status = StarStatus::Extendable;
            s.depth = 1;
            try {
                for (int d = 2; d <= max_extension_depth; ++d) {
                    en.reset_budget();
                    if (!en.extend(placed, ring, d - 1)) {
                        s.status = StarStatus::Rejected;
                        s.depth = d;
                        break;
                    }
                    s.depth = d;
                }
            } catch (const Enumerator::budget_exceeded&) {
                s.status = StarStatus::Inconclusive;
            }
        }
        res.candidates.push_back(std::move(s));
    }
    return res;
}

AmmannPatch star_patch(const QPoint& q, const std::string& signature) {
    Enumerator en(q, 0);
    std::vector<int> seq;
    for (const auto& t : tokens(signature)) seq.push_back(en.find(t));
    AmmannPatch out;
    out.q = q;
    std::vector<std::complex<double>> pos;
    auto node = [&](std::complex<double> z) {
        for (std::size_t i = 0; i < pos.size(); ++i)
            if (std::abs(pos[i] - z) < 1e-7) return i;
        pos.push_back(z);
        out.nodes.push_back({z, NodeKind::Penrose, 0, std::nullopt});
        return pos.size() - 1;
    };
    for (const auto& p : en.star_tiles(seq)) {
        AmmannTile t;
        t.kind = p.kind;
        for (const auto& z : p.pts) t.v.push_back(node(z));
        out.tiles.push_back(std::move(t));
    }
    return out;
}

const std::vector<std::string>& rejected_star_list() {
    static const std::vector<std::string> list = {
        "Aβ Cσ Aε Aε",    "Aβ Cσ Bγ Aε",    "Aβ Cσ Bγ Bγ",       "Aε Aε Aε Bγ Bγ", "Aε Aε Bγ Bγ Bγ",
        "Aε Bγ Aε Bγ Bγ", "Aε Bγ Bγ Bγ Bγ", "Bγ Bγ Bγ Bγ Bγ",    "Bη Bμ Bκ",       "Bη Cρ Bκ",
    };
    return list;
}

}  // namespace aperiodic
