#pragma once

#include "aperiodic/recompose.hpp"

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace aperiodic {

// Edge neighbours of an A tile, one per edge a..e.
struct CoronaRecord {
    std::size_t center = 0;
    std::vector<std::size_t> ring;
    std::vector<std::string> signature;  // neighbour kind + shared edge label
    bool complete = false;               // every edge has a neighbour
    int corona_class = 0;                // 1..5, 0 = Unknown
};

constexpr int kCoronaClasses = 5;
const std::vector<std::string>& corona_class_signature(int cls);

CoronaRecord classify_corona(const AmmannPatch& patch, std::size_t a_tile);
// All A tiles, in tile order.
std::vector<CoronaRecord> classify_coronas(const AmmannPatch& patch);

// One new tile per classified A corona: A' from class 1, B' from 2 and 3,
// C' from 4 and 5. The labels of the new tiles run the other way round.
// Throws MalformedPatch when a complete corona is Unknown.
AmmannPatch iterate(const AmmannPatch& patch, bool rescale = false);

// Cuts every tile along the Penrose edges it contains and pairs the
// resulting rhombs into half-tiles. Requires exact Penrose vertices.
PenrosePatch underlying_penrose(const AmmannPatch& patch);

// Measures Q in the thin rhombs of the underlying Penrose patch. The result
// is exact when the patch coordinates are. Throws MalformedPatch when the
// measured charts disagree.
QPoint extract_q(const AmmannPatch& patch);

// Vertex stars. Corner tokens are the tile kind followed by the angle label,
// listed in the label orientation and rotated to the least sequence.
constexpr int kAmmannAtlasSize = 14;
constexpr int kRejectedStars = 10;
const std::vector<std::string>& ammann_star_atlas();
const std::vector<std::string>& rejected_star_list();

enum class StarClass : unsigned char { Atlas, Rejected, Unknown };

struct VertexStarRecord {
    std::size_t node = 0;
    std::complex<double> z;
    std::vector<std::pair<std::size_t, std::size_t>> incident;  // (tile, corner)
    std::string signature;
    StarClass cls = StarClass::Unknown;
    int id = 0;  // 1-based index into the atlas or the rejected list
    double angle_sum = 0;
};

// Every vertex whose corner angles close up to a full turn.
std::vector<VertexStarRecord> star_atlas_audit(const AmmannPatch& patch);

std::string star_numbers(const std::string& signature);

}  // namespace aperiodic
