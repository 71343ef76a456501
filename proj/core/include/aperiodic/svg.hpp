#pragma once

#include "aperiodic/penrose.hpp"
#include "aperiodic/recompose.hpp"

#include <iosfwd>

namespace aperiodic {

// Small half-tiles light, large ones dark; rhomb diagonals are not drawn.
void write_svg(const PenrosePatch& patch, std::ostream& out);
// A, B and C tiles in three colours; boundary fragments in grey.
void write_svg(const AmmannPatch& patch, std::ostream& out);

}  // namespace aperiodic
