#include "aperiodic/dynamics.hpp"

#include "aperiodic/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace aperiodic {

namespace {

constexpr double kPhi = std::numbers::phi;

}  // namespace

double QState::norm_uv() const { return std::hypot(u, v); }

QState make_state(int n, double r, double theta) {
    QState s;
    s.n = n;
    s.r = r;
    s.theta = theta;
    s.x = r * std::cos(theta);
    s.y = r * std::sin(theta);
    s.u = s.x - 1 / kPhi;
    s.v = s.y;
    return s;
}

std::pair<double, double> q_map(double r, double theta) {
    double d2 = r * r + kPhi * kPhi - 2 * r * kPhi * std::cos(theta);
    double d = std::sqrt(std::max(d2, 0.0));
    if (d == 0) throw DomainError("q_map: r' = 0");
    double c = (kPhi - r * std::cos(theta)) / d;
    if (c > 1 + 1e-12 || c < -1 - 1e-12) throw DomainError("q_map: arccos argument out of range");
    c = std::clamp(c, -1.0, 1.0);
    return {d / kPhi, std::acos(c)};
}

std::pair<double, double> q_map_cartesian(double x, double y) { return {1 - x / kPhi, y / kPhi}; }

QPoint q_map_exact(const QPoint& q) {
    if (!q.exact) {
        auto [r, t] = q_map(q.r, q.theta);
        return QPoint::polar(r, t);
    }
    // x' = 1 - x / phi, y' = y / phi with x = p0 + p1 phi / 2, y = p1 sin(pi/5)
    const GoldenRational inv = GoldenRational::inv_phi();
    const auto& [p0, p1] = *q.exact;
    return QPoint::exact_point(GoldenRational(1) - p0 * inv - p1, p1 * inv);
}

std::vector<QState> orbit(const QPoint& q0, int n) {
    std::vector<QState> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    out.push_back(make_state(0, q0.r, q0.theta));
    double u = out.back().u, v = out.back().v;
    for (int k = 1; k <= n; ++k) {
        u = -u / kPhi;
        v = v / kPhi;
        QState s;
        s.n = k;
        s.u = u;
        s.v = v;
        s.x = u + 1 / kPhi;
        s.y = v;
        s.r = std::hypot(s.x, s.y);
        s.theta = std::atan2(s.y, s.x);
        out.push_back(s);
    }
    return out;
}

FixedPoint fixed_point() {
    FixedPoint f;
    f.state = make_state(0, 1 / kPhi, 0);
    f.long_part = 1 / kPhi;
    f.short_part = 1 / (kPhi * kPhi);
    return f;
}

std::array<std::array<double, 2>, 2> jacobian_fd(double x, double y, double h) {
    auto f = [](double px, double py) {
        auto [r, t] = q_map(std::hypot(px, py), std::atan2(py, px));
        return std::array<double, 2>{r * std::cos(t), r * std::sin(t)};
    };
    auto fx1 = f(x + h, y), fx0 = f(x - h, y), fy1 = f(x, y + h), fy0 = f(x, y - h);
    std::array<std::array<double, 2>, 2> j{};
    for (int i = 0; i < 2; ++i) {
        j[i][0] = (fx1[i] - fx0[i]) / (2 * h);
        j[i][1] = (fy1[i] - fy0[i]) / (2 * h);
    }
    return j;
}

std::array<double, 2> eigenvalues_fd(double x, double y, double h) {
    auto j = jacobian_fd(x, y, h);
    double tr = j[0][0] + j[1][1];
    double det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
    double disc = std::sqrt(std::max(tr * tr / 4 - det, 0.0));
    return {tr / 2 - disc, tr / 2 + disc};
}

}  // namespace aperiodic
