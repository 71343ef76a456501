// Acceptance checks; one line per criterion, exit status 1 if any fails.
#include "aperiodic/ammann.hpp"
#include "aperiodic/dynamics.hpp"
#include "aperiodic/spectra.hpp"
#include "aperiodic/stars.hpp"
#include "support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>

using namespace aperiodic;

namespace {

constexpr double kPhi = std::numbers::phi;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::printf("criterion %d %-22s %s  %s\n", id, name.c_str(), ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

void guarded(int id, const std::string& name, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(id, name, false, std::string("exception: ") + e.what());
    }
}

void fixed_point_check() {
    auto t0 = Clock::now();
    auto [r, t] = q_map(1 / kPhi, 0);
    double dt = seconds_since(t0);
    double err = std::max(std::abs(r - 1 / kPhi), std::abs(t));
    report(1, "fixed point", err <= 1e-12 && dt < 1e-3, fmt("err=%.2e (tol 1e-12)  time=%.3f ms (limit 1 ms)", err, dt * 1e3));
}

void conjugacy_check() {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> ux(0, 1), uy(0, 0.6);
    double worst = 0, worst_ratio = 0;
    int n = 0;
    while (n < 1000) {
        double x = ux(rng), y = uy(rng);
        QPoint q;
        try {
            q = QPoint::cartesian(x, y);
            validate_q(q);
        } catch (...) {
            continue;
        }
        ++n;
        auto [r1, t1] = q_map(q.r, q.theta);
        double u = q.x() - 1 / kPhi, v = q.y();
        double u1 = r1 * std::cos(t1) - 1 / kPhi, v1 = r1 * std::sin(t1);
        worst = std::max({worst, std::abs(u1 + u / kPhi), std::abs(v1 - v / kPhi)});
        double n0 = std::hypot(u, v);
        if (n0 > 1e-6) worst_ratio = std::max(worst_ratio, std::abs(std::hypot(u1, v1) / n0 - 1 / kPhi));
    }
    report(2, "linear conjugacy", worst <= 1e-12 && worst_ratio <= 1e-9,
           fmt("points=%d  max chart err=%.2e (tol 1e-12)  ratio err=%.2e (tol 1e-9)", n, worst, worst_ratio));
}

void geometric_consistency_check() {
    auto p = deflate(seed_patch(SeedKind::Sun), 8);
    std::mt19937_64 rng(102);
    auto t0 = Clock::now();
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
        auto q = testing_support::random_generic_q(rng);
        auto e = extract_q(iterate(recompose(p, q)));
        auto [r1, t1] = q_map(q.r, q.theta);
        worst = std::max({worst, std::abs(e.r - r1), std::abs(e.theta - t1)});
    }
    double dt = seconds_since(t0);
    report(3, "geometric consistency", worst <= 1e-9 && dt < 10, fmt("q=20  max err=%.2e (tol 1e-9)  time=%.2f s (limit 10 s)", worst, dt));
}

void atlas_check() {
    auto t0 = Clock::now();
    auto p = deflate(seed_patch(SeedKind::Sun), 10);
    double radius = 0;
    for (const auto& t : p.tiles)
        for (int k = 0; k < 3; ++k) radius = std::max(radius, std::abs(t.vertex(k).embed()));
    auto pstars = audit_vertex_stars(p);
    std::size_t punknown = 0;
    for (const auto& s : pstars) punknown += s.atlas_id == 0;
    auto t = recompose(p, QPoint::polar(0.3, 0.2));
    auto astars = star_atlas_audit(t);
    std::size_t aunknown = 0;
    for (const auto& s : astars) aunknown += s.cls != StarClass::Atlas;
    double dt = seconds_since(t0);
    bool ok = radius >= 15 && punknown == 0 && aunknown == 0 && !pstars.empty() && !astars.empty() && dt < 30;
    report(4, "atlas completeness", ok,
           fmt("radius=%.2f edges  penrose interior=%zu unknown=%zu  ammann interior=%zu unknown=%zu  time=%.2f s (limit 30 s)", radius, pstars.size(),
               punknown, astars.size(), aunknown, dt));
}

void star_enumeration_check() {
    auto g = enumerate_local_stars(QPoint::polar(0.3, 0.2), 3);
    std::set<std::string> rej, expect(rejected_star_list().begin(), rejected_star_list().end());
    int deepest = 0;
    for (const auto& s : g.rejected()) {
        rej.insert(s.signature);
        deepest = std::max(deepest, s.depth);
    }
    std::size_t atlas_ext = 0;
    for (const auto& s : g.extendable()) atlas_ext += s.in_atlas;
    auto ng = enumerate_local_stars(QPoint::polar(0.4, std::numbers::pi / 10), 1);
    bool ok = g.extendable().size() == 14 && atlas_ext == 14 && g.rejected().size() == 10 && rej == expect && g.inconclusive().empty() && deepest <= 3 && ng.extra() > 10;
    report(5, "star enumeration", ok,
           fmt("generic: extendable=%zu rejected=%zu inconclusive=%zu deepest refutation=%d  non-generic extra=%zu (need >10)", g.extendable().size(), g.rejected().size(),
               g.inconclusive().size(), deepest, ng.extra()));
}

void commutation_check() {
    std::mt19937_64 rng(103);
    const std::pair<SeedKind, int> cases[] = {{SeedKind::Sun, 8}, {SeedKind::Sun, 10}, {SeedKind::ThickRhomb, 12}, {SeedKind::ThinRhomb, 14}, {SeedKind::Sun, 12}};
    bool ok = true;
    std::string detail;
    for (auto [seed, steps] : cases) {
        auto q = testing_support::random_generic_q(rng);
        auto p = deflate(seed_patch(seed), steps);
        auto u = underlying_penrose(iterate(recompose(p, q)));
        auto c2 = compose(compose(p));
        std::set<HalfTile> ref(c2.tiles.begin(), c2.tiles.end()), got(u.tiles.begin(), u.tiles.end());
        auto inner_v = interior_vertices(u);
        std::set<CycloPoint> inner(inner_v.begin(), inner_v.end());
        auto inside = [&](const HalfTile& h) { return inner.count(h.a) && inner.count(h.b) && inner.count(h.c); };
        std::size_t stray = 0, missing = 0, shared = 0;
        for (const auto& h : got) stray += !ref.count(h);
        for (const auto& h : ref)
            if (inside(h)) {
                ++shared;
                missing += !got.count(h);
            }
        ok = ok && stray == 0 && missing == 0 && shared > 0;
        detail += fmt("[%d:%zu/%zu]", steps, shared - missing, shared);
    }
    report(6, "commutation", ok, "pairs=5 interior half-tiles matched " + detail);
}

void counting_check() {
    auto seed = seed_patch(SeedKind::ThickRhomb);
    std::size_t thick = 1, thin = 0;
    bool ok = true;
    double worst = 0;
    for (int k = 1; k <= 6; ++k) {
        std::tie(thick, thin) = std::pair{2 * thick + thin, thick + thin};
        auto p = deflate(seed, 2 * k);
        auto c = half_tile_counts(p);
        double area = 0;
        for (const auto& t : p.tiles) {
            auto a = t.a.embed(), b = t.b.embed(), d = t.c.embed();
            area += std::abs((b - a).real() * (d - a).imag() - (b - a).imag() * (d - a).real()) / 2;
        }
        area /= std::sin(std::numbers::pi / 5);
        double oracle = static_cast<double>(c.thin) + kPhi * static_cast<double>(c.thick);
        worst = std::max(worst, std::abs(area - oracle) / oracle);
        ok = ok && c.thick == thick && c.thin == thin;
    }
    auto c10 = half_tile_counts(deflate(seed, 20));
    double ratio = static_cast<double>(c10.thick) / static_cast<double>(c10.thin);
    double rel = std::abs(ratio - kPhi) / kPhi;
    ok = ok && worst < 1e-9 && rel < 0.01;
    report(7, "counting", ok, fmt("M^k counts k=1..6 %s  area oracle err=%.2e  thick:thin at k=10 = %.6f (rel err %.1e, tol 1%%)", ok ? "match" : "mismatch", worst, ratio, rel));
}

void relations_check() {
    std::mt19937_64 rng(104);
    double worst = 0;
    for (int i = 0; i < 100; ++i) worst = std::max(worst, verify_relations(build_prototiles(testing_support::random_generic_q(rng))).max_residual());
    bool exact = true;
    const std::pair<int, int> exact_q[] = {{3, 2}, {5, 1}, {2, 3}};
    for (auto [a, b] : exact_q) {
        auto q = QPoint::exact_point(GoldenRational(mpq_class(a, 10)), GoldenRational(mpq_class(b, 10)));
        auto r = verify_relations(build_prototiles(q));
        exact = exact && r.exact_checked() && r.exact_holds();
    }
    report(8, "relations", worst < 1e-9 && exact, fmt("random q=100 max residual=%.2e (tol 1e-9)  exact q=3 %s", worst, exact ? "exact" : "NOT exact"));
}

void diffraction_check() {
    auto pts = nearest_points(vertex_set(deflate(seed_patch(SeedKind::Sun), 10)), 500);
    double n2 = static_cast<double>(pts.size()) * static_cast<double>(pts.size());
    auto small = diffraction(pts, {-4, 4, 33});
    double origin_err = std::abs(small.at(16, 16) - n2) / n2;

    std::complex<double> a(0.2, -0.4), b(1.1, 0.9);
    auto two = diffraction({a, b}, {-8, 8, 65});
    double fringe = 0;
    for (int iy = 0; iy < 65; ++iy)
        for (int ix = 0; ix < 65; ++ix) {
            double kd = two.k(ix) * (b - a).real() + two.k(iy) * (b - a).imag();
            fringe = std::max(fringe, std::abs(two.at(ix, iy) - (2 + 2 * std::cos(kd))));
        }

    auto t0 = Clock::now();
    auto full = diffraction(pts, {-10, 10, 512});
    double dt = seconds_since(t0);
    double score = symmetry_score(full, 10);
    double score_coarse = symmetry_score(diffraction(pts, {-10, 10, 384}), 10);
    bool ok = pts.size() == 500 && origin_err <= 1e-9 && fringe <= 1e-9 && score < 0.05 && score_coarse < 0.05 && dt < 60;
    report(9, "diffraction", ok,
           fmt("I(0)/N^2-1=%.1e  fringe err=%.1e  score10(512)=%.4f score10(384)=%.4f (tol 0.05)  512^2 grid=%.2f s (limit 60 s, %u threads)", origin_err, fringe,
               score, score_coarse, dt, thread_count()));
}

}  // namespace

int main() {
    guarded(1, "fixed point", fixed_point_check);
    guarded(2, "linear conjugacy", conjugacy_check);
    guarded(3, "geometric consistency", geometric_consistency_check);
    guarded(4, "atlas completeness", atlas_check);
    guarded(5, "star enumeration", star_enumeration_check);
    guarded(6, "commutation", commutation_check);
    guarded(7, "counting", counting_check);
    guarded(8, "relations", relations_check);
    guarded(9, "diffraction", diffraction_check);
    std::printf("%d of 9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
