#include "aperiodic/faces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace aperiodic {

FaceGraph trace_faces(const std::vector<std::complex<double>>& pos, const std::vector<Segment>& segments) {
    std::vector<std::vector<std::size_t>> adj(pos.size());
    for (auto [a, b] : segments) {
        if (a == b) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (std::size_t v = 0; v < adj.size(); ++v) {
        auto& l = adj[v];
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        std::sort(l.begin(), l.end(), [&](std::size_t x, std::size_t y) {
            return std::arg(pos[x] - pos[v]) < std::arg(pos[y] - pos[v]);
        });
    }

    FaceGraph g;
    for (std::size_t a = 0; a < adj.size(); ++a) {
        for (std::size_t b : adj[a]) {
            if (g.face_of.count({a, b})) continue;
            std::vector<std::size_t> face;
            const std::size_t id = g.faces.size();
            std::size_t u = a, v = b;
            while (!g.face_of.count({u, v})) {
                g.face_of[{u, v}] = id;
                face.push_back(u);
                const auto& l = adj[v];
                auto it = std::find(l.begin(), l.end(), u);
                std::size_t i = static_cast<std::size_t>(it - l.begin());
                std::size_t w = l[(i + l.size() - 1) % l.size()];
                u = v;
                v = w;
            }
            g.faces.push_back(std::move(face));
        }
    }
    return g;
}

double signed_area(const std::vector<std::complex<double>>& pos, const std::vector<std::size_t>& face) {
    double s = 0;
    for (std::size_t i = 0; i < face.size(); ++i) {
        const auto& p = pos[face[i]];
        const auto& q = pos[face[(i + 1) % face.size()]];
        s += p.real() * q.imag() - p.imag() * q.real();
    }
    return s / 2;
}

double interior_angle(const std::vector<std::complex<double>>& pos, const std::vector<std::size_t>& face,
                      std::size_t i) {
    const std::size_t n = face.size();
    std::complex<double> z = pos[face[i]];
    std::complex<double> prev = pos[face[(i + n - 1) % n]] - z;
    std::complex<double> next = pos[face[(i + 1) % n]] - z;
    double a = std::arg(prev / next);
    return a < 0 ? a + 2 * std::numbers::pi : a;
}

}  // namespace aperiodic
