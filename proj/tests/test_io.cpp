#include "aperiodic/ammann.hpp"
#include "aperiodic/io.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace aperiodic;

TEST(Json, GoldenRationalIsFourStrings) {
    auto j = to_json(GoldenRational(mpq_class(-3, 4), mpq_class(5, 1)));
    EXPECT_EQ(j.dump(), R"(["-3","4","5","1"])");
    EXPECT_EQ(golden_from_json(j), GoldenRational(mpq_class(-3, 4), mpq_class(5, 1)));
}

TEST(Json, CycloPointRoundTrip) {
    CycloPoint p(GoldenRational(1, 2), GoldenRational(mpq_class(1, 3)), GoldenRational(0, -1), GoldenRational(mpq_class(7, 2), 1));
    auto j = to_json(p);
    EXPECT_EQ(j.size(), 4u);
    EXPECT_EQ(cyclo_from_json(j), p);
}

TEST(Json, PenrosePatchRoundTrip) {
    auto p = deflate(seed_patch(SeedKind::Sun), 5);
    auto j = to_json(p);
    EXPECT_EQ(j["type"], "penrose");
    EXPECT_EQ(j["tiles"][0]["size"], p.size_of(p.tiles[0]) == Size::Small ? "s" : "l");
    auto back = penrose_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.generation, p.generation);
    EXPECT_EQ(std::set<HalfTile>(back.tiles.begin(), back.tiles.end()), std::set<HalfTile>(p.tiles.begin(), p.tiles.end()));
}

TEST(Json, ShapeFollowsSizeWhenOmitted) {
    auto p = deflate(seed_patch(SeedKind::ThickRhomb), 3);
    auto j = to_json(p);
    for (auto& t : j["tiles"]) t.erase("shape");
    auto back = penrose_from_json(j);
    for (std::size_t i = 0; i < p.tiles.size(); ++i) EXPECT_EQ(back.tiles[i].shape, p.tiles[i].shape);
}

TEST(Json, AmmannPatchRoundTrip) {
    auto t = recompose(deflate(seed_patch(SeedKind::Sun), 6), QPoint::polar(0.3, 0.2));
    auto j = to_json(t);
    auto back = ammann_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.tiles.size(), t.tiles.size());
    EXPECT_EQ(back.fragments, t.fragments);
    EXPECT_EQ(back.orientation, t.orientation);
    EXPECT_EQ(back.q.r, t.q.r);
    EXPECT_EQ(back.q.theta, t.q.theta);
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        EXPECT_EQ(back.nodes[i].z, t.nodes[i].z);
        EXPECT_EQ(back.nodes[i].kind, t.nodes[i].kind);
    }
    EXPECT_EQ(to_json(back).dump(), j.dump());
    EXPECT_EQ(iterate(back).tiles.size(), iterate(t).tiles.size());
}

TEST(Json, ExactQRoundTrip) {
    auto q = QPoint::exact_point(GoldenRational(mpq_class(3, 10)), GoldenRational(mpq_class(1, 5)));
    auto back = qpoint_from_json(to_json(q));
    ASSERT_TRUE(back.exact.has_value());
    EXPECT_EQ(*back.exact, *q.exact);
}

TEST(Json, OutputIsDeterministic) {
    auto a = to_json(recompose(deflate(seed_patch(SeedKind::Sun), 6), QPoint::polar(0.3, 0.2))).dump();
    auto b = to_json(recompose(deflate(seed_patch(SeedKind::Sun), 6), QPoint::polar(0.3, 0.2))).dump();
    EXPECT_EQ(a, b);
}

TEST(Json, BadTileIsRejected) {
    auto j = to_json(recompose(deflate(seed_patch(SeedKind::Sun), 4), QPoint::polar(0.3, 0.2)));
    j["tiles"][0]["v"].erase(0);
    EXPECT_THROW(ammann_from_json(j), std::invalid_argument);
}
