#pragma once

#include "aperiodic/penrose.hpp"

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aperiodic {

// Position of Q in the chart of the lower half of a thin rhomb: A = 0,
// C = 1, B = z, and w = r exp(i theta) with theta measured from AC toward B.
struct QPoint {
    double r = 0;
    double theta = 0;
    // Exact chart point w = p0 + p1 z.
    std::optional<std::pair<GoldenRational, GoldenRational>> exact;

    static QPoint polar(double r, double theta);
    static QPoint cartesian(double x, double y);
    static QPoint exact_point(GoldenRational p0, GoldenRational p1);

    std::complex<double> w() const;
    std::optional<CycloPoint> w_exact() const;
    double x() const;
    double y() const;
};

// The four lengths whose pairwise distinctness makes q generic.
struct GenericityReport {
    double aq = 0, bq = 0, cq = 0, rs = 0;
    bool exact = false;
    std::vector<std::string> coincidences;  // e.g. "|BQ|=|CQ|"
    bool generic() const { return coincidences.empty(); }
};

// Throws OutOfRhomb when q is outside the closed chart triangle.
GenericityReport validate_q(const QPoint& q);

enum class TileKind : unsigned char { A, B, C };
enum class Orientation : unsigned char { CCW, CW };

char kind_char(TileKind k);
std::size_t corner_count(TileKind k);
// Angle and edge labels in label order. Edge i joins corners i - 1 and i.
const std::vector<std::string>& angle_labels(TileKind k);
const std::vector<std::string>& edge_labels(TileKind k);

struct AmmannPrototile {
    TileKind kind = TileKind::A;
    std::vector<std::complex<double>> vertices;  // label order
    std::vector<CycloPoint> exact;               // empty unless q is exact
    Orientation orientation = Orientation::CCW;

    double angle(std::size_t i) const;
    double edge(std::size_t i) const;
};

using PrototileSet = std::array<AmmannPrototile, 3>;

// Throws DegenerateTile when q sits on a rhomb vertex and DomainError when q
// is not generic, unless allow_nongeneric is set.
PrototileSet build_prototiles(const QPoint& q, bool allow_nongeneric = false);

enum class NodeKind : unsigned char { Penrose, Q, R, S };

struct AmmannNode {
    std::complex<double> z;
    NodeKind kind = NodeKind::Penrose;
    std::size_t rhomb = 0;  // source rhomb for Q, R, S
    std::optional<CycloPoint> exact;
};

struct AmmannTile {
    TileKind kind = TileKind::A;
    std::vector<std::size_t> v;  // node ids in label order
    std::size_t rhomb = 0;       // thick rhomb for A and C, thin rhomb for B
};

struct AmmannPatch {
    std::vector<AmmannNode> nodes;
    std::vector<AmmannTile> tiles;
    // Regions at the patch boundary that are not whole tiles.
    std::vector<std::vector<std::size_t>> fragments;
    QPoint q;
    Orientation orientation = Orientation::CCW;
    int penrose_generation = 0;  // generation of the underlying Penrose patch
    std::size_t thick_rhombs = 0;
    std::size_t thin_rhombs = 0;
    std::size_t dropped = 0;

    std::vector<std::complex<double>> positions() const;
    std::size_t count(TileKind k) const;
};

// Ammann vertices are placed in every rhomb with s = -1, which labels the
// resulting tiles counter-clockwise; s = +1 gives the mirrored labelling.
AmmannPatch recompose(const PenrosePatch& patch, const QPoint& q, int s = -1);

double tile_area(const AmmannPatch& patch, const AmmannTile& t);
AmmannPrototile as_prototile(const AmmannPatch& patch, const AmmannTile& t);

struct Residual {
    std::string relation;
    double residual = 0;
    std::optional<bool> exact;  // set when every tile carries exact vertices
};

struct RelationReport {
    std::vector<Residual> angles;  // the eight angle relations
    std::vector<Residual> edges;   // the four edge classes
    double max_residual() const;
    bool exact_checked() const;
    bool exact_holds() const;
};

RelationReport verify_relations(const PrototileSet& t);

}  // namespace aperiodic
