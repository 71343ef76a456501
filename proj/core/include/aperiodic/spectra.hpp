#pragma once

#include "aperiodic/penrose.hpp"
#include "aperiodic/recompose.hpp"

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

namespace aperiodic {

using Points = std::vector<std::complex<double>>;

// Distinct vertices, merged at distance 1e-9, in first-seen order.
Points dedupe_points(const Points& pts, double tol = 1e-9);
Points vertex_set(const PenrosePatch& patch);
Points vertex_set(const AmmannPatch& patch);
// The n points closest to the origin; ties broken by angle.
Points nearest_points(Points pts, std::size_t n);

struct GridSpec {
    double kmin = -10;
    double kmax = 10;
    int resolution = 256;
};

// values[iy * resolution + ix] = |sum exp(-i k.x)|^2 at k = (k(ix), k(iy)).
struct IntensityGrid {
    double kmin = 0, kmax = 0;
    int resolution = 0;
    std::vector<double> values;

    double k(int i) const;
    double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * static_cast<std::size_t>(resolution) + static_cast<std::size_t>(ix)]; }
    double max() const;
};

// APERIODIC_THREADS when set to a positive integer, else the hardware count.
unsigned thread_count();

IntensityGrid diffraction(const Points& pts, const GridSpec& spec, unsigned threads = 0);

// Relative L2 difference between the grid and its rotation by 2 pi / order,
// over the disc inscribed in the grid. Bilinear resampling.
double symmetry_score(const IntensityGrid& grid, int order);

// Peak value away from the origin, relative to N^2.
double peak_ratio(const IntensityGrid& grid, double exclude_radius);

// Binary PGM, normalised to the maximum with gamma 0.5.
void write_pgm(const IntensityGrid& grid, std::ostream& out, bool invert = false);
void write_csv(const IntensityGrid& grid, std::ostream& out);

}  // namespace aperiodic
