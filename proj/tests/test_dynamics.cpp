#include "aperiodic/dynamics.hpp"
#include "aperiodic/errors.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

using namespace aperiodic;
using testing_support::kPhi;

namespace {

// Independent law of cosines form of the map.
std::pair<double, double> polar_oracle(double r, double t) {
    double d = std::sqrt(r * r + kPhi * kPhi - 2 * r * kPhi * std::cos(t));
    return {d / kPhi, std::acos(std::clamp((kPhi - r * std::cos(t)) / d, -1.0, 1.0))};
}

}  // namespace

TEST(QMap, FixedPoint) {
    auto [r, t] = q_map(1 / kPhi, 0);
    EXPECT_NEAR(r, 1 / kPhi, 1e-14);
    EXPECT_NEAR(t, 0, 1e-14);
}

TEST(QMap, CollinearCase) {
    auto [r, t] = q_map(0.5, 0);
    EXPECT_NEAR(r, (kPhi - 0.5) / kPhi, 1e-15);
    EXPECT_EQ(t, 0);
}

TEST(QMap, PolarAndCartesianAgree) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 1000; ++i) {
        auto q = testing_support::random_generic_q(rng);
        auto [r, t] = q_map(q.r, q.theta);
        auto [x, y] = q_map_cartesian(q.x(), q.y());
        EXPECT_NEAR(r * std::cos(t), x, 1e-12);
        EXPECT_NEAR(r * std::sin(t), y, 1e-12);
        auto [ro, to] = polar_oracle(q.r, q.theta);
        EXPECT_NEAR(r, ro, 1e-12);
        EXPECT_NEAR(t, to, 1e-12);
    }
}

TEST(QMap, PoleThrows) { EXPECT_THROW(q_map(kPhi, 0), DomainError); }

TEST(QMapCartesian, Examples) {
    auto [x0, y0] = q_map_cartesian(1 / kPhi, 0);
    EXPECT_NEAR(x0, 1 / kPhi, 1e-15);
    EXPECT_EQ(y0, 0);
    auto [x1, y1] = q_map_cartesian(0, 0);
    EXPECT_EQ(x1, 1);
    EXPECT_EQ(y1, 0);
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 100; ++i) {
        double x = u(rng), y = 0.5 * u(rng);
        auto [a, b] = q_map_cartesian(x, y);
        auto [c, d] = q_map_cartesian(a, b);
        EXPECT_NEAR(c, 1 - 1 / kPhi + x / (kPhi * kPhi), 1e-14);
        EXPECT_NEAR(d, y / (kPhi * kPhi), 1e-14);
    }
}

TEST(QMapExact, MatchesTheFloatMap) {
    auto q = QPoint::exact_point(GoldenRational(mpq_class(3, 10)), GoldenRational(mpq_class(1, 5)));
    auto m = q_map_exact(q);
    ASSERT_TRUE(m.exact.has_value());
    auto [x, y] = q_map_cartesian(q.x(), q.y());
    EXPECT_NEAR(m.x(), x, 1e-14);
    EXPECT_NEAR(m.y(), y, 1e-14);
    auto f = QPoint::exact_point(GoldenRational::inv_phi(), GoldenRational(0));
    EXPECT_EQ(*q_map_exact(f).exact, *f.exact);
}

TEST(Conjugacy, LinearInTheUVChart) {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 1000; ++i) {
        auto q = testing_support::random_generic_q(rng);
        auto [r, t] = q_map(q.r, q.theta);
        double u = q.x() - 1 / kPhi, v = q.y();
        EXPECT_NEAR(r * std::cos(t) - 1 / kPhi, -u / kPhi, 1e-12);
        EXPECT_NEAR(r * std::sin(t), v / kPhi, 1e-12);
    }
}

TEST(Orbit, ContractsByOneOverPhi) {
    auto states = orbit(QPoint::polar(0.3, 0.2), 30);
    ASSERT_EQ(states.size(), 31u);
    for (std::size_t k = 0; k + 1 < states.size(); ++k) {
        EXPECT_NEAR(states[k + 1].u / states[k].u, -1 / kPhi, 1e-9);
        EXPECT_NEAR(states[k + 1].norm_uv() / states[k].norm_uv(), 1 / kPhi, 1e-9);
        EXPECT_NEAR(states[k].x, states[k].r * std::cos(states[k].theta), 1e-12);
        EXPECT_NEAR(states[k].v, states[k].y, 0);
    }
    EXPECT_NEAR(states[30].norm_uv(), std::pow(kPhi, -30) * states[0].norm_uv(), 1e-9 * states[30].norm_uv());
    EXPECT_LT(states[30].norm_uv(), 1e-6 * states[0].norm_uv());
}

TEST(Orbit, AgreesWithTheMapItself) {
    auto states = orbit(QPoint::polar(0.3, 0.2), 6);
    double r = 0.3, t = 0.2;
    for (int k = 1; k <= 6; ++k) {
        std::tie(r, t) = q_map(r, t);
        EXPECT_NEAR(states[static_cast<std::size_t>(k)].r, r, 1e-9);
        EXPECT_NEAR(states[static_cast<std::size_t>(k)].theta, t, 1e-9);
    }
}

TEST(Orbit, FixedPointIsConstant) {
    auto states = orbit(QPoint::polar(1 / kPhi, 0), 10);
    for (const auto& s : states) {
        EXPECT_NEAR(s.r, 1 / kPhi, 1e-14);
        EXPECT_NEAR(s.theta, 0, 1e-14);
    }
}

TEST(FixedPoint, GoldenDivision) {
    auto f = fixed_point();
    EXPECT_EQ(f.state.theta, 0);
    EXPECT_NEAR(f.state.r + f.state.r * f.state.r, 1, 1e-15);
    EXPECT_NEAR(f.long_part, 1 / kPhi, 1e-15);
    EXPECT_NEAR(f.short_part, 1 / (kPhi * kPhi), 1e-15);
    auto [r, t] = q_map(f.state.r, f.state.theta);
    EXPECT_NEAR(r, f.state.r, 1e-14);
    EXPECT_NEAR(t, f.state.theta, 1e-14);
}

TEST(FixedPoint, EigenvaluesAreAttracting) {
    auto ev = eigenvalues_fd(0.5, 0.2);
    std::array<double, 2> mags{std::abs(ev[0]), std::abs(ev[1])};
    std::sort(mags.begin(), mags.end());
    EXPECT_NEAR(mags[0], 1 / kPhi, 1e-6);
    EXPECT_NEAR(mags[1], 1 / kPhi, 1e-6);
    auto j = jacobian_fd(0.5, 0.2);
    EXPECT_NEAR(j[0][0], -1 / kPhi, 1e-6);
    EXPECT_NEAR(j[0][1], 0, 1e-6);
    EXPECT_NEAR(j[1][0], 0, 1e-6);
    EXPECT_NEAR(j[1][1], 1 / kPhi, 1e-6);
}
