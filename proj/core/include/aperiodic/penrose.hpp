#pragma once

#include "aperiodic/cyclo.hpp"

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace aperiodic {

// Robinson half-tiles. An acute triangle has its 36 degree apex at a, an
// obtuse one its 108 degree apex at a; ab and ac are the legs. The roles
// a, b, c carry the arrow markings, so no separate mark storage is needed.
enum class Shape : unsigned char { Acute, Obtuse };
enum class Size : unsigned char { Small, Large };

struct HalfTile {
    Shape shape = Shape::Acute;
    CycloPoint a, b, c;

    // Sign of cross(b - a, c - a).
    int chirality() const;
    const CycloPoint& vertex(int role) const { return role == 0 ? a : (role == 1 ? b : c); }
    friend bool operator==(const HalfTile& x, const HalfTile& y) {
        return x.shape == y.shape && x.a == y.a && x.b == y.b && x.c == y.c;
    }
    friend bool operator<(const HalfTile& x, const HalfTile& y);
};

// Arrow kinds on the edges of a half-tile. Legs ac carry a single arrow
// a -> c. Legs ab carry a double arrow, a -> b on obtuse and b -> a on acute
// triangles. The base bc is the rhomb diagonal.
enum class MarkKind : unsigned char { Single, Double, ThinDiagonal, ThickDiagonal };
struct EdgeMark {
    MarkKind kind;
    int from_role;
    int to_role;
};
EdgeMark edge_mark(Shape shape, int edge);  // edge 0 = ab, 1 = ac, 2 = bc

struct PenrosePatch {
    std::vector<HalfTile> tiles;
    // Number of half-steps of substitution applied since the rhomb-stage
    // seed; even generations are rhomb stages with unit edges.
    int generation = 0;
    // Tiles dropped at the boundary by the operation that produced this patch.
    std::size_t dropped = 0;

    bool rhomb_stage() const { return ((generation % 2) + 2) % 2 == 0; }
    Size size_of(const HalfTile& t) const;
};

enum class SeedKind { ThickRhomb, ThinRhomb, Sun };

PenrosePatch seed_patch(SeedKind kind);
PenrosePatch deflate(const PenrosePatch& patch, int steps);
// Inverse of one substitution half-step. Coordinates are not rescaled, so two
// compositions of a rhomb-stage patch give rhombs with edge phi.
PenrosePatch compose(const PenrosePatch& patch);
PenrosePatch scaled(const PenrosePatch& patch, const GoldenRational& factor);

struct Rhomb {
    Shape shape;
    std::size_t plus;   // index of the half with chirality +1
    std::size_t minus;  // index of the half with chirality -1
};
// Mirrored half-tile pairs sharing their base; unpaired halves are skipped.
std::vector<Rhomb> pair_rhombs(const PenrosePatch& patch);

struct RhombCounts {
    std::size_t thick = 0;
    std::size_t thin = 0;
};
RhombCounts rhomb_counts(const PenrosePatch& patch);
// Half-tiles counted by shape, halved: (obtuse / 2, acute / 2).
RhombCounts half_tile_counts(const PenrosePatch& patch);

// Total area divided by sin(pi/5), exact.
GoldenRational area_units(const PenrosePatch& patch);

// s/l itinerary of p under repeated composition; symbol k describes the
// tile containing p after k compositions.
std::string index_sequence(const PenrosePatch& patch, std::complex<double> p, int n);

// Vertex stars at rhomb stages.
struct VertexStar {
    CycloPoint vertex;
    std::string signature;  // canonical corner sequence
    int atlas_id = 0;       // 1..8, or 0 when not in the atlas
};
constexpr int kPenroseAtlasSize = 8;
const std::vector<std::string>& penrose_star_atlas();
const std::vector<std::string>& penrose_star_names();

// Classifies the star at v. Returns atlas_id 0 (Unknown) for stars outside
// the atlas; throws OutOfPatch when v is not surrounded.
VertexStar vertex_star(const PenrosePatch& patch, const CycloPoint& v);
// All surrounded vertices of the patch.
std::vector<VertexStar> audit_vertex_stars(const PenrosePatch& patch);
std::vector<CycloPoint> interior_vertices(const PenrosePatch& patch);

// Shared edges whose two marks disagree (rhomb stages only).
std::size_t marking_violations(const PenrosePatch& patch);

}  // namespace aperiodic
