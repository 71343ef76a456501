#include "aperiodic/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <map>
#include <numbers>
#include <ostream>
#include <thread>

namespace aperiodic {

Points dedupe_points(const Points& pts, double tol) {
    std::map<std::pair<long long, long long>, std::vector<std::size_t>> grid;
    Points out;
    auto cell = [&](std::complex<double> z) {
        return std::pair<long long, long long>{static_cast<long long>(std::floor(z.real())), static_cast<long long>(std::floor(z.imag()))};
    };
    for (const auto& p : pts) {
        auto [cx, cy] = cell(p);
        bool dup = false;
        for (long long dx = -1; dx <= 1 && !dup; ++dx) {
            for (long long dy = -1; dy <= 1 && !dup; ++dy) {
                auto it = grid.find({cx + dx, cy + dy});
                if (it == grid.end()) continue;
                for (std::size_t i : it->second)
                    if (std::abs(out[i] - p) <= tol) dup = true;
            }
        }
        if (dup) continue;
        grid[{cx, cy}].push_back(out.size());
        out.push_back(p);
    }
    return out;
}

Points vertex_set(const PenrosePatch& patch) {
    Points pts;
    for (const auto& t : patch.tiles)
        for (int r = 0; r < 3; ++r) pts.push_back(t.vertex(r).embed());
    return dedupe_points(pts);
}

Points vertex_set(const AmmannPatch& patch) { return dedupe_points(patch.positions()); }

Points nearest_points(Points pts, std::size_t n) {
    std::sort(pts.begin(), pts.end(), [](auto a, auto b) {
        double da = std::abs(a), db = std::abs(b);
        if (std::abs(da - db) > 1e-9) return da < db;
        return std::arg(a) < std::arg(b);
    });
    if (pts.size() > n) pts.resize(n);
    return pts;
}

double IntensityGrid::k(int i) const {
    if (resolution < 2) return kmin;
    return kmin + (kmax - kmin) * i / (resolution - 1);
}

double IntensityGrid::max() const { return values.empty() ? 0 : *std::max_element(values.begin(), values.end()); }

unsigned thread_count() {
    if (const char* env = std::getenv("APERIODIC_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

IntensityGrid diffraction(const Points& pts, const GridSpec& spec, unsigned threads) {
    IntensityGrid g;
    g.kmin = spec.kmin;
    g.kmax = spec.kmax;
    g.resolution = spec.resolution;
    const std::size_t res = static_cast<std::size_t>(spec.resolution);
    g.values.assign(res * res, 0.0);
    if (threads == 0) threads = thread_count();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(res)));

    std::vector<double> ks(res);
    for (std::size_t i = 0; i < res; ++i) ks[i] = g.k(static_cast<int>(i));

    auto rows = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t iy = lo; iy < hi; ++iy) {
            for (std::size_t ix = 0; ix < res; ++ix) {
                double re = 0, im = 0;
                for (const auto& p : pts) {
                    double ph = ks[ix] * p.real() + ks[iy] * p.imag();
                    re += std::cos(ph);
                    im -= std::sin(ph);
                }
                g.values[iy * res + ix] = re * re + im * im;
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t chunk = (res + threads - 1) / threads;
    for (std::size_t lo = 0; lo < res; lo += chunk) pool.emplace_back(rows, lo, std::min(res, lo + chunk));
    for (auto& t : pool) t.join();
    return g;
}

namespace {

double bilinear(const IntensityGrid& g, double kx, double ky) {
    const double step = (g.kmax - g.kmin) / (g.resolution - 1);
    double fx = (kx - g.kmin) / step, fy = (ky - g.kmin) / step;
    int ix = std::clamp(static_cast<int>(std::floor(fx)), 0, g.resolution - 2);
    int iy = std::clamp(static_cast<int>(std::floor(fy)), 0, g.resolution - 2);
    double tx = fx - ix, ty = fy - iy;
    return (1 - tx) * (1 - ty) * g.at(ix, iy) + tx * (1 - ty) * g.at(ix + 1, iy) + (1 - tx) * ty * g.at(ix, iy + 1) +
           tx * ty * g.at(ix + 1, iy + 1);
}

}  // namespace

double symmetry_score(const IntensityGrid& grid, int order) {
    if (order <= 1 || grid.resolution < 2) return 0;
    const double a = 2 * std::numbers::pi / order;
    const double c = std::cos(a), s = std::sin(a);
    const double centre = (grid.kmin + grid.kmax) / 2;
    const double radius = (grid.kmax - grid.kmin) / 2;
    double num = 0, den = 0;
    for (int iy = 0; iy < grid.resolution; ++iy) {
        for (int ix = 0; ix < grid.resolution; ++ix) {
            double x = grid.k(ix) - centre, y = grid.k(iy) - centre;
            if (std::hypot(x, y) > radius) continue;
            double v = grid.at(ix, iy);
            double w = bilinear(grid, centre + c * x - s * y, centre + s * x + c * y);
            num += (v - w) * (v - w);
            den += v * v;
        }
    }
    return den > 0 ? std::sqrt(num / den) : 0;
}

double peak_ratio(const IntensityGrid& grid, double exclude_radius) {
    double best = 0, origin = 0;
    for (int iy = 0; iy < grid.resolution; ++iy) {
        for (int ix = 0; ix < grid.resolution; ++ix) {
            double r = std::hypot(grid.k(ix), grid.k(iy));
            if (r <= exclude_radius)
                origin = std::max(origin, grid.at(ix, iy));
            else
                best = std::max(best, grid.at(ix, iy));
        }
    }
    return origin > 0 ? best / origin : 0;
}

void write_pgm(const IntensityGrid& grid, std::ostream& out, bool invert) {
    const double m = grid.max();
    out << "P5\n" << grid.resolution << " " << grid.resolution << "\n255\n";
    // Top row is the largest ky.
    for (int iy = grid.resolution - 1; iy >= 0; --iy) {
        for (int ix = 0; ix < grid.resolution; ++ix) {
            double v = m > 0 ? std::sqrt(grid.at(ix, iy) / m) : 0;
            int b = static_cast<int>(std::lround(255 * std::clamp(v, 0.0, 1.0)));
            if (invert) b = 255 - b;
            out.put(static_cast<char>(b));
        }
    }
}

void write_csv(const IntensityGrid& grid, std::ostream& out) {
    out << "kx,ky,intensity\n";
    char buf[96];
    for (int iy = 0; iy < grid.resolution; ++iy) {
        for (int ix = 0; ix < grid.resolution; ++ix) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", grid.k(ix), grid.k(iy), grid.at(ix, iy));
            out << buf;
        }
    }
}

}  // namespace aperiodic
