#pragma once

#include "aperiodic/recompose.hpp"

#include <ostream>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace testing_support {

inline const double kPhi = std::numbers::phi;
inline const double kTheta = std::numbers::pi / 5;

// Chart distances from first principles: A = 0, C = 1, B = e^{i pi/5}.
struct Lengths {
    double aq, bq, cq;
};
inline Lengths chart_lengths(double x, double y) {
    std::complex<double> q(x, y), b = std::polar(1.0, kTheta);
    return {std::abs(q), std::abs(q - b), std::abs(q - 1.0)};
}

// Uniform points of the open chart triangle, kept away from the edges and
// from the loci where two of |AQ|, |BQ|, |CQ| agree.
inline aperiodic::QPoint random_generic_q(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> r(0.08, 0.95), t(0.02, kTheta - 0.02);
    for (;;) {
        auto q = aperiodic::QPoint::polar(r(rng), t(rng));
        auto b = std::polar(1.0, kTheta);
        // Edge BC: stay on the A side with a margin.
        auto z = q.w();
        double side = ((b - 1.0).real() * (z - 1.0).imag() - (b - 1.0).imag() * (z - 1.0).real()) / std::abs(b - 1.0);
        if (side < 0.02) continue;
        auto [aq, bq, cq] = chart_lengths(q.x(), q.y());
        if (std::min({std::abs(aq - bq), std::abs(aq - cq), std::abs(bq - cq)}) < 1e-3) continue;
        try {
            if (!aperiodic::validate_q(q).generic()) continue;
        } catch (...) {
            continue;
        }
        return q;
    }
}

}  // namespace testing_support

namespace aperiodic {

inline void PrintTo(const CycloPoint& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const HalfTile& t, std::ostream* os) {
    *os << (t.shape == Shape::Acute ? "acute(" : "obtuse(") << t.a.to_string() << "; " << t.b.to_string() << "; " << t.c.to_string() << ")";
}

}  // namespace aperiodic
