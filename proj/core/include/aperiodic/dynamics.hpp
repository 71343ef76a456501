#pragma once

#include "aperiodic/recompose.hpp"

#include <array>
#include <utility>
#include <vector>

namespace aperiodic {

// Position of Q along an orbit in polar, cartesian and linearising charts.
struct QState {
    int n = 0;
    double r = 0, theta = 0;
    double x = 0, y = 0;
    double u = 0, v = 0;  // u = x - 1/phi, v = y
    double norm_uv() const;
};

QState make_state(int n, double r, double theta);

// Throws DomainError when r' vanishes or the arccos argument leaves
// [-1, 1] by more than 1e-12.
std::pair<double, double> q_map(double r, double theta);
std::pair<double, double> q_map_cartesian(double x, double y);
// Same map on exact chart points w = p0 + p1 z.
QPoint q_map_exact(const QPoint& q);

// Stepped in the (u, v) chart; iterating q_map itself loses about half the
// digits of theta near the fixed point through the arccos.
std::vector<QState> orbit(const QPoint& q0, int n);

struct FixedPoint {
    QState state;
    double long_part = 0;   // r = 1/phi
    double short_part = 0;  // 1 - r = 1/phi^2
};
FixedPoint fixed_point();

// Jacobian of q_map in (x, y) by central differences, and its eigenvalues.
std::array<std::array<double, 2>, 2> jacobian_fd(double x, double y, double h = 1e-6);
std::array<double, 2> eigenvalues_fd(double x, double y, double h = 1e-6);

}  // namespace aperiodic
