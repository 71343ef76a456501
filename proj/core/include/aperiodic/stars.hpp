#pragma once

#include "aperiodic/ammann.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace aperiodic {

// Extendable means not refuted up to the requested depth.
enum class StarStatus : unsigned char { Extendable, Rejected, Inconclusive };

struct LocalStar {
    std::vector<std::string> corners;  // tokens such as "Aα", canonical rotation
    std::string signature;
    std::string numbers;  // corners numbered 1..16
    bool in_atlas = false;
    StarStatus status = StarStatus::Inconclusive;
    int depth = 0;  // refuting depth, or the depth survived
};

struct StarEnumeration {
    int max_depth = 0;
    std::size_t angle_candidates = 0;  // cycles closing by angle and edge class
    std::vector<LocalStar> candidates;  // those consistent with the angle relations

    std::vector<LocalStar> extendable() const;
    std::vector<LocalStar> rejected() const;
    std::vector<LocalStar> inconclusive() const;
    std::size_t extra() const;  // candidates outside the atlas
};

// Corner cycles around a vertex built from the prototiles of q, checked
// against the angle relations and then extended ring by ring. Depth 1 asks
// every vertex of the star to admit some candidate cycle; each further depth
// completes every open vertex of the previous ring without overlaps.
// `budget` caps the number of placements tried per candidate.
StarEnumeration enumerate_local_stars(const QPoint& q, int max_extension_depth = 3, std::size_t budget = 2000000);

// The tiles of one vertex star placed around the origin.
AmmannPatch star_patch(const QPoint& q, const std::string& signature);

}  // namespace aperiodic
