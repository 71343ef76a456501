#include "aperiodic/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace aperiodic {

namespace {

struct Box {
    double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
    void add(std::complex<double> z) {
        x0 = std::min(x0, z.real());
        y0 = std::min(y0, z.imag());
        x1 = std::max(x1, z.real());
        y1 = std::max(y1, z.imag());
    }
};

void header(std::ostream& out, const Box& b) {
    const double pad = 0.5;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.6f %.6f %.6f %.6f\" width=\"800\" height=\"800\">\n",
                  b.x0 - pad, -b.y1 - pad, b.x1 - b.x0 + 2 * pad, b.y1 - b.y0 + 2 * pad);
    out << buf;
}

void polygon(std::ostream& out, const std::vector<std::complex<double>>& pts, const char* fill, const char* stroke) {
    out << "<polygon points=\"";
    char buf[64];
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%s%.6f,%.6f", i ? " " : "", pts[i].real(), -pts[i].imag());
        out << buf;
    }
    out << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"0.03\" stroke-linejoin=\"round\"/>\n";
}

}  // namespace

void write_svg(const PenrosePatch& patch, std::ostream& out) {
    Box b;
    for (const auto& t : patch.tiles)
        for (int r = 0; r < 3; ++r) b.add(t.vertex(r).embed());
    header(out, b);
    for (const auto& t : patch.tiles) {
        const char* fill = patch.size_of(t) == Size::Small ? "#f2d492" : "#3c6e8f";
        polygon(out, {t.a.embed(), t.b.embed(), t.c.embed()}, fill, fill);
    }
    // Legs only: the base of every half-tile is a rhomb diagonal at rhomb stages.
    out << "<g stroke=\"#222\" stroke-width=\"0.03\">\n";
    char buf[160];
    for (const auto& t : patch.tiles) {
        for (const auto* e : {&t.b, &t.c}) {
            auto p = t.a.embed(), q = e->embed();
            std::snprintf(buf, sizeof buf, "<line x1=\"%.6f\" y1=\"%.6f\" x2=\"%.6f\" y2=\"%.6f\"/>\n", p.real(), -p.imag(), q.real(), -q.imag());
            out << buf;
        }
    }
    out << "</g>\n</svg>\n";
}

void write_svg(const AmmannPatch& patch, std::ostream& out) {
    Box b;
    for (const auto& n : patch.nodes) b.add(n.z);
    header(out, b);
    auto pts = [&](const std::vector<std::size_t>& ids) {
        std::vector<std::complex<double>> p;
        for (std::size_t id : ids) p.push_back(patch.nodes[id].z);
        return p;
    };
    for (const auto& f : patch.fragments) polygon(out, pts(f), "#dddddd", "#222");
    for (const auto& t : patch.tiles) {
        const char* fill = t.kind == TileKind::A ? "#d95f02" : (t.kind == TileKind::B ? "#1b9e77" : "#7570b3");
        polygon(out, pts(t.v), fill, "#222");
    }
    out << "</svg>\n";
}

}  // namespace aperiodic
