#include "aperiodic/errors.hpp"
#include "aperiodic/recompose.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>

using namespace aperiodic;
using testing_support::kTheta;

namespace {

double shoelace(const std::vector<std::complex<double>>& v) {
    double s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto a = v[i], b = v[(i + 1) % v.size()];
        s += a.real() * b.imag() - a.imag() * b.real();
    }
    return s / 2;
}

double rhomb_area(const PenrosePatch& p) {
    double s = 0;
    for (const auto& r : pair_rhombs(p))
        for (auto i : {r.plus, r.minus}) {
            const auto& t = p.tiles[i];
            s += std::abs(shoelace({t.a.embed(), t.b.embed(), t.c.embed()}));
        }
    return s;
}

}  // namespace

TEST(ValidateQ, LengthsMatchDirectDistances) {
    auto q = QPoint::polar(0.30, 0.20);
    auto g = validate_q(q);
    auto l = testing_support::chart_lengths(0.30 * std::cos(0.20), 0.30 * std::sin(0.20));
    EXPECT_NEAR(g.aq, l.aq, 1e-14);
    EXPECT_NEAR(g.bq, l.bq, 1e-14);
    EXPECT_NEAR(g.cq, l.cq, 1e-14);
    EXPECT_GT(g.rs, 0);
    EXPECT_TRUE(g.generic());
}

TEST(ValidateQ, SymmetryAxisIsNotGeneric) {
    auto g = validate_q(QPoint::polar(0.4, kTheta / 2));
    EXPECT_FALSE(g.generic());
    ASSERT_EQ(g.coincidences.size(), 1u);
    EXPECT_EQ(g.coincidences[0], "|BQ|=|CQ|");
}

TEST(ValidateQ, LimitPointIsReported) {
    auto g = validate_q(QPoint::polar(1 / std::numbers::phi, 0));
    EXPECT_NEAR(g.aq, 1 / std::numbers::phi, 1e-14);
    EXPECT_NEAR(g.cq, 1 / (std::numbers::phi * std::numbers::phi), 1e-14);
    EXPECT_NEAR(g.bq, 1 / std::numbers::phi, 1e-14);
    EXPECT_FALSE(g.generic());
    EXPECT_NE(std::find(g.coincidences.begin(), g.coincidences.end(), "|AQ|=|BQ|"), g.coincidences.end());
}

TEST(ValidateQ, OutsideTheChartThrows) {
    EXPECT_THROW(validate_q(QPoint::polar(1.2, 0.1)), OutOfRhomb);
    EXPECT_THROW(validate_q(QPoint::polar(0.5, -0.1)), OutOfRhomb);
    EXPECT_THROW(validate_q(QPoint::polar(0.5, kTheta + 0.05)), OutOfRhomb);
    EXPECT_THROW(validate_q(QPoint::cartesian(0.95, 0.3)), OutOfRhomb);
}

TEST(ValidateQ, ExactPointMatchesFloat) {
    auto q = QPoint::exact_point(GoldenRational(mpq_class(3, 10)), GoldenRational(mpq_class(1, 5)));
    auto g = validate_q(q);
    EXPECT_TRUE(g.exact);
    auto z = 0.3 + 0.2 * std::polar(1.0, kTheta);
    auto l = testing_support::chart_lengths(z.real(), z.imag());
    EXPECT_NEAR(g.aq, l.aq, 1e-14);
    EXPECT_NEAR(g.bq, l.bq, 1e-14);
    EXPECT_NEAR(g.cq, l.cq, 1e-14);
}

TEST(Prototiles, CornerCounts) {
    auto t = build_prototiles(QPoint::polar(0.3, 0.2));
    EXPECT_EQ(t[0].kind, TileKind::A);
    EXPECT_EQ(t[0].vertices.size(), 5u);
    EXPECT_EQ(t[1].vertices.size(), 6u);
    EXPECT_EQ(t[2].vertices.size(), 5u);
    for (const auto& p : t) EXPECT_EQ(p.orientation, Orientation::CCW);
    for (const auto& p : t) EXPECT_GT(shoelace(p.vertices), 0);
}

TEST(Prototiles, EpsilonIsTwoTheta) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        auto t = build_prototiles(testing_support::random_generic_q(rng));
        EXPECT_NEAR(t[0].angle(4), 2 * kTheta, 1e-12);
        const auto& e = t[0];
        const auto& b = t[1];
        const auto& c = t[2];
        // a = c = e = f = g = n
        double a = e.edge(0);
        EXPECT_NEAR(e.edge(2), a, 1e-12);
        EXPECT_NEAR(e.edge(4), a, 1e-12);
        EXPECT_NEAR(b.edge(0), a, 1e-12);
        EXPECT_NEAR(b.edge(1), a, 1e-12);
        EXPECT_NEAR(c.edge(2), a, 1e-12);
    }
}

TEST(Prototiles, LabelsFollowTheFigures) {
    EXPECT_EQ(angle_labels(TileKind::A), (std::vector<std::string>{"α", "β", "χ", "δ", "ε"}));
    EXPECT_EQ(angle_labels(TileKind::B), (std::vector<std::string>{"γ", "η", "ι", "κ", "λ", "μ"}));
    EXPECT_EQ(angle_labels(TileKind::C), (std::vector<std::string>{"ν", "ρ", "σ", "τ", "ω"}));
    EXPECT_EQ(edge_labels(TileKind::A), (std::vector<std::string>{"a", "b", "c", "d", "e"}));
    EXPECT_EQ(edge_labels(TileKind::B), (std::vector<std::string>{"f", "g", "h", "i", "j", "k"}));
    EXPECT_EQ(edge_labels(TileKind::C), (std::vector<std::string>{"l", "m", "n", "o", "p"}));
}

TEST(Prototiles, NonGenericNeedsOverride) {
    auto q = QPoint::polar(0.4, kTheta / 2);
    EXPECT_THROW(build_prototiles(q), DomainError);
    EXPECT_NO_THROW(build_prototiles(q, true));
}

TEST(Prototiles, VertexQIsDegenerate) { EXPECT_THROW(build_prototiles(QPoint::polar(1.0, 0.0), true), DegenerateTile); }

TEST(RelationsProperty, HoldForRandomGenericQ) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        auto q = testing_support::random_generic_q(rng);
        auto r = verify_relations(build_prototiles(q));
        EXPECT_EQ(r.angles.size(), 8u);
        EXPECT_EQ(r.edges.size(), 4u);
        EXPECT_LT(r.max_residual(), 1e-9) << q.r << "," << q.theta;
        EXPECT_FALSE(r.exact_checked());
    }
}

TEST(Relations, PerturbationIsDetected) {
    auto t = build_prototiles(QPoint::polar(0.3, 0.2));
    t[0].vertices[1] += std::complex<double>(1e-3, 0);
    EXPECT_GT(verify_relations(t).max_residual(), 1e-4);
}

TEST(Relations, ExactQHoldsExactly) {
    for (auto [a, b] : {std::pair{mpq_class(3, 10), mpq_class(1, 5)}, std::pair{mpq_class(1, 2), mpq_class(1, 7)}, std::pair{mpq_class(1, 4), mpq_class(1, 3)}}) {
        auto q = QPoint::exact_point(GoldenRational(a), GoldenRational(b));
        auto r = verify_relations(build_prototiles(q));
        EXPECT_TRUE(r.exact_checked());
        EXPECT_TRUE(r.exact_holds());
        EXPECT_LT(r.max_residual(), 1e-12);
    }
}

TEST(Recompose, OneATilePerThickRhomb) {
    auto p = deflate(seed_patch(SeedKind::Sun), 8);
    auto t = recompose(p, QPoint::polar(0.3, 0.2));
    auto rc = rhomb_counts(p);
    EXPECT_EQ(t.thick_rhombs, rc.thick);
    EXPECT_EQ(t.thin_rhombs, rc.thin);
    auto rhombs = pair_rhombs(p);
    std::set<std::size_t> rh;
    for (const auto& tile : t.tiles) {
        if (tile.kind != TileKind::A) continue;
        EXPECT_EQ(rhombs.at(tile.rhomb).shape, Shape::Obtuse);
        EXPECT_TRUE(rh.insert(tile.rhomb).second);
    }
    // A tiles reach into neighbouring rhombs, so only rhombs away from the boundary are guaranteed one.
    auto inner_v = interior_vertices(p);
    std::set<CycloPoint> inner(inner_v.begin(), inner_v.end());
    std::size_t deep = 0;
    for (std::size_t i = 0; i < rhombs.size(); ++i) {
        const auto& a = p.tiles[rhombs[i].plus];
        const auto& b = p.tiles[rhombs[i].minus];
        if (rhombs[i].shape != Shape::Obtuse || !inner.count(a.a) || !inner.count(a.b) || !inner.count(a.c) || !inner.count(b.a)) continue;
        ++deep;
        EXPECT_TRUE(rh.count(i)) << i;
    }
    EXPECT_GT(deep, rc.thick / 2);
    EXPECT_LE(t.count(TileKind::A), rc.thick);
}

TEST(Recompose, AreaIsPreserved) {
    std::mt19937_64 rng(13);
    auto p = deflate(seed_patch(SeedKind::Sun), 8);
    double expect = rhomb_area(p);
    for (int i = 0; i < 5; ++i) {
        auto t = recompose(p, testing_support::random_generic_q(rng));
        double s = 0;
        for (const auto& tile : t.tiles) s += tile_area(t, tile);
        for (const auto& f : t.fragments) {
            std::vector<std::complex<double>> v;
            for (auto id : f) v.push_back(t.nodes[id].z);
            s += std::abs(shoelace(v));
        }
        EXPECT_NEAR(s, expect, 1e-9 * expect);
    }
}

TEST(Recompose, TilesAreLabelledCounterClockwise) {
    auto p = deflate(seed_patch(SeedKind::Sun), 6);
    auto t = recompose(p, QPoint::polar(0.3, 0.2));
    EXPECT_EQ(t.orientation, Orientation::CCW);
    for (const auto& tile : t.tiles) EXPECT_GT(tile_area(t, tile), 0);
    auto m = recompose(p, QPoint::polar(0.3, 0.2), 1);
    EXPECT_EQ(m.orientation, Orientation::CW);
}

TEST(Recompose, EveryCTileTouchesAnATile) {
    auto p = deflate(seed_patch(SeedKind::Sun), 8);
    auto t = recompose(p, QPoint::polar(0.3, 0.2));
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> edges;
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        const auto& v = t.tiles[i].v;
        for (std::size_t k = 0; k < v.size(); ++k) edges[std::minmax(v[k], v[(k + 1) % v.size()])].push_back(i);
    }
    double radius = 0;
    for (const auto& n : t.nodes) radius = std::max(radius, std::abs(n.z));
    std::size_t checked = 0;
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        if (t.tiles[i].kind != TileKind::C) continue;
        bool deep = true;
        for (auto id : t.tiles[i].v) deep = deep && std::abs(t.nodes[id].z) < 0.5 * radius;
        if (!deep) continue;
        ++checked;
        bool touches = false;
        const auto& v = t.tiles[i].v;
        for (std::size_t k = 0; k < v.size(); ++k)
            for (auto j : edges[std::minmax(v[k], v[(k + 1) % v.size()])]) touches = touches || t.tiles[j].kind == TileKind::A;
        EXPECT_TRUE(touches) << i;
    }
    EXPECT_GT(checked, 20u);
}

TEST(Recompose, TilesMatchThePrototiles) {
    auto q = QPoint::polar(0.3, 0.2);
    auto p = deflate(seed_patch(SeedKind::Sun), 6);
    auto t = recompose(p, q);
    auto protos = build_prototiles(q);
    for (const auto& tile : t.tiles) {
        auto m = as_prototile(t, tile);
        const auto& ref = protos[static_cast<std::size_t>(tile.kind)];
        for (std::size_t i = 0; i < m.vertices.size(); ++i) {
            EXPECT_NEAR(m.angle(i), ref.angle(i), 1e-9);
            EXPECT_NEAR(m.edge(i), ref.edge(i), 1e-9);
        }
    }
}

TEST(Recompose, OddGenerationIsRejected) {
    EXPECT_THROW(recompose(deflate(seed_patch(SeedKind::Sun), 3), QPoint::polar(0.3, 0.2)), MalformedPatch);
}
