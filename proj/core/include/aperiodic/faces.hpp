#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace aperiodic {

using Segment = std::pair<std::size_t, std::size_t>;

// Faces of a straight-line planar graph. Bounded faces come out
// counter-clockwise with positive area; the outer face has negative area.
struct FaceGraph {
    std::vector<std::vector<std::size_t>> faces;
    std::map<Segment, std::size_t> face_of;  // directed edge -> face on its left
};

FaceGraph trace_faces(const std::vector<std::complex<double>>& pos, const std::vector<Segment>& segments);

double signed_area(const std::vector<std::complex<double>>& pos, const std::vector<std::size_t>& face);

// Interior angle at corner i of a polygon listed counter-clockwise.
double interior_angle(const std::vector<std::complex<double>>& pos, const std::vector<std::size_t>& face,
                      std::size_t i);

}  // namespace aperiodic
