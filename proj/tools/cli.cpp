#include "cli.hpp"

#include "aperiodic/ammann.hpp"
#include "aperiodic/dynamics.hpp"
#include "aperiodic/errors.hpp"
#include "aperiodic/io.hpp"
#include "aperiodic/penrose.hpp"
#include "aperiodic/recompose.hpp"
#include "aperiodic/spectra.hpp"
#include "aperiodic/stars.hpp"
#include "aperiodic/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace aperiodic::cli {

namespace {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AuditFailure : std::runtime_error {
    AuditFailure(const std::string& what, Json r) : std::runtime_error(what), report(std::move(r)) {}
    Json report;
};

std::vector<std::string> split(const std::string& s, char sep = ',') {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

std::pair<double, double> parse_pair(const std::string& s, const std::string& flag) {
    auto p = split(s);
    if (p.size() != 2) throw ValidationError(flag + " expects two comma-separated numbers");
    try {
        std::size_t i = 0, j = 0;
        double a = std::stod(p[0], &i), b = std::stod(p[1], &j);
        if (i != p[0].size() || j != p[1].size() || !std::isfinite(a) || !std::isfinite(b)) throw std::invalid_argument(s);
        return {a, b};
    } catch (const std::logic_error&) {
        throw ValidationError(flag + ": cannot parse '" + s + "'");
    }
}

mpq_class parse_rational(const std::string& s) {
    try {
        mpq_class q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ValidationError("--q-exact: cannot parse rational '" + s + "'");
    }
}

struct QOptions {
    std::string polar, xy, exact;
    bool allow_nongeneric = false;

    void add(CLI::App* app, bool required) {
        auto* a = app->add_option("--q", polar, "Q as r,theta (theta in radians from AC)");
        auto* b = app->add_option("--q-xy", xy, "Q as x,y in the thin-rhomb chart");
        auto* c = app->add_option("--q-exact", exact, "Q = (a0 + b0 phi) + (a1 + b1 phi) zeta as a0,b0,a1,b1");
        a->excludes(b)->excludes(c);
        b->excludes(c);
        if (required) app->require_option(1, 0);
    }

    bool given() const { return !polar.empty() || !xy.empty() || !exact.empty(); }

    QPoint get() const {
        QPoint q;
        if (!exact.empty()) {
            auto p = split(exact);
            if (p.size() != 4) throw ValidationError("--q-exact expects four rationals a0,b0,a1,b1");
            q = QPoint::exact_point(GoldenRational(parse_rational(p[0]), parse_rational(p[1])),
                                    GoldenRational(parse_rational(p[2]), parse_rational(p[3])));
        } else if (!xy.empty()) {
            auto [x, y] = parse_pair(xy, "--q-xy");
            q = QPoint::cartesian(x, y);
        } else if (!polar.empty()) {
            auto [r, t] = parse_pair(polar, "--q");
            q = QPoint::polar(r, t);
        } else {
            throw ValidationError("one of --q, --q-xy, --q-exact is required");
        }
        validate_q(q);
        return q;
    }
};

SeedKind parse_seed(const std::string& s) {
    if (s == "thick") return SeedKind::ThickRhomb;
    if (s == "thin") return SeedKind::ThinRhomb;
    if (s == "sun") return SeedKind::Sun;
    throw ValidationError("unknown seed '" + s + "'");
}

template <class Patch>
void write_svg_file(const std::string& path, const Patch& patch) {
    std::ofstream f(path);
    if (!f) throw ValidationError("cannot write " + path);
    write_svg(patch, f);
}

// The JSON goes to --out when given, else to stdout; a summary is printed in the first case.
void emit(const Json& doc, const std::string& path, const Json& summary, std::ostream& out) {
    if (path.empty()) {
        out << doc.dump() << "\n";
    } else {
        write_json_file(path, doc);
        out << summary.dump() << "\n";
    }
}

Json load(const std::string& path) {
    try {
        return read_json_file(path);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw ValidationError(e.what());
    }
}

PenrosePatch load_penrose(const std::string& path) {
    Json j = load(path);
    if (patch_type(j) != "penrose") throw ValidationError(path + " is not a Penrose patch");
    try {
        return penrose_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

AmmannPatch load_ammann(const std::string& path) {
    Json j = load(path);
    if (patch_type(j) != "ammann") throw ValidationError(path + " is not an Ammann patch");
    try {
        return ammann_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

Json penrose_summary(const PenrosePatch& p) {
    auto rc = rhomb_counts(p);
    auto hc = half_tile_counts(p);
    return {{"type", "penrose"},
            {"generation", p.generation},
            {"half_tiles", p.tiles.size()},
            {"thick", hc.thick},
            {"thin", hc.thin},
            {"paired_thick", rc.thick},
            {"paired_thin", rc.thin},
            {"dropped", p.dropped}};
}

Json ammann_summary(const AmmannPatch& p) {
    return {{"type", "ammann"},
            {"A", p.count(TileKind::A)},
            {"B", p.count(TileKind::B)},
            {"C", p.count(TileKind::C)},
            {"fragments", p.fragments.size()},
            {"nodes", p.nodes.size()},
            {"dropped", p.dropped}};
}

struct Check {
    Json rows = Json::array();
    bool ok = true;
    void add(const std::string& name, bool passed, Json detail) {
        rows.push_back({{"check", name}, {"passed", passed}, {"detail", std::move(detail)}});
        ok = ok && passed;
    }
};

void audit_penrose(const PenrosePatch& p, Check& c, const std::string& prefix) {
    std::size_t bad = marking_violations(p);
    c.add(prefix + "markings", bad == 0, {{"violations", bad}});
    auto stars = audit_vertex_stars(p);
    std::vector<std::size_t> hist(kPenroseAtlasSize + 1, 0);
    for (const auto& s : stars) ++hist[static_cast<std::size_t>(s.atlas_id)];
    c.add(prefix + "vertex_stars", hist[0] == 0, {{"interior", stars.size()}, {"unknown", hist[0]}, {"by_atlas_id", std::vector<std::size_t>(hist.begin() + 1, hist.end())}});
}

void audit_ammann(const AmmannPatch& t, Check& c) {
    auto protos = build_prototiles(t.q, true);
    auto rel = verify_relations(protos);
    bool rel_ok = rel.max_residual() < 1e-9 && (!rel.exact_checked() || rel.exact_holds());
    c.add("relations", rel_ok, to_json(rel));

    // Iterates are larger by a power of phi unless rescaled, so edges are compared up to one common factor.
    double worst = 0, scale = 1;
    if (!t.tiles.empty()) {
        const auto& first = t.tiles.front();
        scale = as_prototile(t, first).edge(0) / protos[static_cast<std::size_t>(first.kind)].edge(0);
    }
    for (const auto& tile : t.tiles) {
        auto m = as_prototile(t, tile);
        const auto& ref = protos[static_cast<std::size_t>(tile.kind)];
        for (std::size_t i = 0; i < m.vertices.size(); ++i) {
            worst = std::max(worst, std::abs(m.angle(i) - ref.angle(i)));
            worst = std::max(worst, std::abs(m.edge(i) / scale - ref.edge(i)));
        }
    }
    c.add("tile_congruence", worst < 1e-9, {{"scale", scale}, {"max_deviation", worst}});

    auto coronas = classify_coronas(t);
    std::vector<std::size_t> hist(kCoronaClasses + 1, 0);
    std::size_t complete = 0;
    for (const auto& r : coronas) {
        if (!r.complete) continue;
        ++complete;
        ++hist[static_cast<std::size_t>(r.corona_class)];
    }
    c.add("coronas", hist[0] == 0, {{"complete", complete}, {"unknown", hist[0]}, {"by_class", std::vector<std::size_t>(hist.begin() + 1, hist.end())}});

    auto stars = star_atlas_audit(t);
    std::size_t atlas = 0, rejected = 0, unknown = 0;
    for (const auto& s : stars) (s.cls == StarClass::Atlas ? atlas : s.cls == StarClass::Rejected ? rejected : unknown)++;
    c.add("vertex_stars", rejected == 0 && unknown == 0, {{"interior", stars.size()}, {"atlas", atlas}, {"rejected", rejected}, {"unknown", unknown}});

    bool exact = std::all_of(t.nodes.begin(), t.nodes.end(), [](const AmmannNode& n) { return n.kind != NodeKind::Penrose || n.exact; });
    if (exact && !t.tiles.empty()) {
        try {
            audit_penrose(underlying_penrose(t), c, "underlying_");
        } catch (const MalformedPatch& e) {
            c.add("underlying_penrose", false, {{"error", e.what()}});
        }
    }
}

int cmd_generate(const std::string& seed, int steps, const std::string& out_path, const std::string& svg, std::ostream& out) {
    auto p = deflate(seed_patch(parse_seed(seed)), steps);
    if (!svg.empty()) write_svg_file(svg, p);
    emit(to_json(p), out_path, penrose_summary(p), out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Penrose and Ammann tilings, Q dynamics and diffraction"};
    app.name("aperiodic");
    app.require_subcommand(1);
    app.fallthrough();
    bool json_errors = std::find(args.begin(), args.end(), "--json-errors") != args.end();
    app.add_flag("--json-errors", json_errors, "Print errors as JSON on stderr");

    std::string seed = "thick", out_path, svg, in_path, csv, format = "csv";
    int steps = 6, n = 30, res = 256, depth = 3, times = 1, order = 10, sign = -1;
    double kmax = 10;
    std::size_t points = 0, budget = 2000000;
    bool rescale = false, invert = false;
    QOptions qo;

    auto* gen = app.add_subcommand("generate", "Deflate a seed patch");
    gen->add_option("--seed", seed, "thick, thin or sun")->check(CLI::IsMember({"thick", "thin", "sun"}));
    gen->add_option("--steps", steps, "Half-steps of substitution")->check(CLI::Range(0, 20));
    gen->add_option("--out", out_path, "Patch JSON (default stdout)");
    gen->add_option("--svg", svg, "SVG rendering");

    auto* rec = app.add_subcommand("recompose", "Build the Ammann tiling of a Penrose patch");
    rec->add_option("--in", in_path, "Penrose patch JSON")->required();
    qo.add(rec, true);
    rec->add_flag("--allow-nongeneric", qo.allow_nongeneric, "Accept q with coinciding lengths");
    rec->add_option("--sign", sign, "Chart orientation, -1 labels tiles counter-clockwise")->check(CLI::IsMember({-1, 1}));
    rec->add_option("--out", out_path, "Ammann patch JSON (default stdout)");
    rec->add_option("--svg", svg, "SVG rendering");

    auto* itr = app.add_subcommand("iterate", "Iterate an Ammann tiling");
    itr->add_option("--in", in_path, "Ammann patch JSON")->required();
    itr->add_option("--times", times, "Number of iterations")->check(CLI::Range(1, 8));
    itr->add_flag("--rescale", rescale, "Scale each iterate by 1/phi");
    itr->add_option("--out", out_path, "Ammann patch JSON (default stdout)");
    itr->add_option("--svg", svg, "SVG rendering");

    auto* orb = app.add_subcommand("orbit", "Orbit of Q under the iteration map");
    qo.add(orb, true);
    orb->add_option("--n", n, "Number of steps")->check(CLI::Range(0, 100000));
    orb->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* dif = app.add_subcommand("diffract", "Diffraction intensity of a vertex set");
    dif->add_option("--in", in_path, "Penrose or Ammann patch JSON")->required();
    dif->add_option("--points", points, "Keep the N vertices closest to the origin (0 keeps all)");
    dif->add_option("--kmax", kmax, "Grid spans [-kmax, kmax] on both axes")->check(CLI::PositiveNumber);
    dif->add_option("--res", res, "Grid nodes per axis")->check(CLI::Range(2, 8192));
    dif->add_option("--order", order, "Rotation order for the symmetry score")->check(CLI::Range(1, 360));
    dif->add_option("--out", out_path, "PGM image");
    dif->add_option("--csv", csv, "Raw intensities as CSV");
    dif->add_flag("--invert", invert, "Dark peaks on a light ground");

    auto* ver = app.add_subcommand("verify", "Run the atlas and relation audits");
    ver->add_option("--in", in_path, "Penrose or Ammann patch JSON");
    ver->add_option("--seed", seed, "Seed when no --in is given")->check(CLI::IsMember({"thick", "thin", "sun"}));
    ver->add_option("--steps", steps, "Half-steps when no --in is given")->check(CLI::Range(0, 20));
    qo.add(ver, false);
    ver->add_flag("--allow-nongeneric", qo.allow_nongeneric, "Accept q with coinciding lengths");

    auto* sta = app.add_subcommand("stars", "Enumerate local Ammann vertex stars");
    qo.add(sta, true);
    sta->add_option("--depth", depth, "Extension depth")->check(CLI::Range(0, 6));
    sta->add_option("--budget", budget, "Placements tried per candidate");
    sta->add_flag("--allow-nongeneric", qo.allow_nongeneric, "Accept q with coinciding lengths");

    auto fail = [&](int code, const std::string& kind, const std::string& msg) {
        if (json_errors)
            err << Json({{"error", kind}, {"message", msg}, {"exit", code}}).dump() << "\n";
        else
            err << "aperiodic: " << msg << "\n";
        return code;
    };

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        return fail(kValidation, "usage", e.what());
    }

    auto generic_q = [&]() {
        QPoint q = qo.get();
        if (!qo.allow_nongeneric) {
            auto g = validate_q(q);
            if (!g.generic()) throw ValidationError("q is not generic: " + to_json(g)["coincidences"].dump());
        }
        return q;
    };

    try {
        if (*gen) return cmd_generate(seed, steps, out_path, svg, out);

        if (*rec) {
            auto p = load_penrose(in_path);
            auto t = recompose(p, generic_q(), sign);
            if (!svg.empty()) write_svg_file(svg, t);
            emit(to_json(t), out_path, ammann_summary(t), out);
            return kOk;
        }

        if (*itr) {
            auto t = load_ammann(in_path);
            for (int i = 0; i < times; ++i) t = iterate(t, rescale);
            if (!svg.empty()) write_svg_file(svg, t);
            emit(to_json(t), out_path, ammann_summary(t), out);
            return kOk;
        }

        if (*orb) {
            auto states = orbit(qo.get(), n);
            if (format == "json") {
                Json a = Json::array();
                for (const auto& s : states)
                    a.push_back({{"n", s.n}, {"r", s.r}, {"theta", s.theta}, {"x", s.x}, {"y", s.y}, {"u", s.u}, {"v", s.v}, {"norm_uv", s.norm_uv()}});
                out << a.dump(1) << "\n";
            } else {
                out << "n,r,theta,x,y,u,v,norm_uv\n";
                char buf[512];
                for (const auto& s : states) {
                    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", s.n, s.r, s.theta, s.x, s.y, s.u, s.v, s.norm_uv());
                    out << buf;
                }
            }
            return kOk;
        }

        if (*dif) {
            Json j = load(in_path);
            Points pts;
            if (patch_type(j) == "ammann")
                pts = vertex_set(ammann_from_json(j));
            else
                pts = vertex_set(penrose_from_json(j));
            if (pts.empty()) throw ValidationError("patch has no vertices");
            if (points > 0) pts = nearest_points(pts, points);
            auto grid = diffraction(pts, GridSpec{-kmax, kmax, res});
            if (!out_path.empty()) {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw ValidationError("cannot write " + out_path);
                write_pgm(grid, f, invert);
            }
            if (!csv.empty()) {
                std::ofstream f(csv);
                if (!f) throw ValidationError("cannot write " + csv);
                write_csv(grid, f);
            }
            double n2 = static_cast<double>(pts.size()) * static_cast<double>(pts.size());
            out << Json({{"points", pts.size()},
                         {"resolution", res},
                         {"kmax", kmax},
                         {"n_squared", n2},
                         {"max", grid.max()},
                         {"symmetry_order", order},
                         {"symmetry_score", symmetry_score(grid, order)},
                         {"peak_ratio", peak_ratio(grid, 0.5)}})
                       .dump(1)
                << "\n";
            return kOk;
        }

        if (*ver) {
            Check c;
            Json subject;
            if (!in_path.empty()) {
                Json j = load(in_path);
                if (patch_type(j) == "ammann") {
                    auto t = ammann_from_json(j);
                    subject = ammann_summary(t);
                    audit_ammann(t, c);
                } else {
                    auto p = penrose_from_json(j);
                    subject = penrose_summary(p);
                    audit_penrose(p, c, "");
                }
            } else {
                auto p = deflate(seed_patch(parse_seed(seed)), steps);
                subject = penrose_summary(p);
                audit_penrose(p, c, "");
                if (qo.given()) {
                    if (!p.rhomb_stage()) throw ValidationError("recomposition needs an even number of steps");
                    auto t = recompose(p, generic_q());
                    subject["ammann"] = ammann_summary(t);
                    audit_ammann(t, c);
                }
            }
            Json report = {{"subject", subject}, {"passed", c.ok}, {"checks", c.rows}};
            out << report.dump(1) << "\n";
            if (!c.ok) throw AuditFailure("audit failed", report);
            return kOk;
        }

        if (*sta) {
            auto e = enumerate_local_stars(generic_q(), depth, budget);
            out << to_json(e).dump(1) << "\n";
            return kOk;
        }
    } catch (const AuditFailure& e) {
        return fail(kAudit, "audit", e.what());
    } catch (const ValidationError& e) {
        return fail(kValidation, "validation", e.what());
    } catch (const OutOfRhomb& e) {
        return fail(kValidation, "out_of_rhomb", e.what());
    } catch (const DomainError& e) {
        return fail(kValidation, "domain", e.what());
    } catch (const DegenerateTile& e) {
        return fail(kValidation, "degenerate_tile", e.what());
    } catch (const MalformedPatch& e) {
        return fail(kValidation, "malformed_patch", e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(kValidation, "json", e.what());
    } catch (const std::exception& e) {
        return fail(kValidation, "error", e.what());
    }
    return fail(kValidation, "usage", "no subcommand");
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace aperiodic::cli
