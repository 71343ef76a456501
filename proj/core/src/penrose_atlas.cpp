#include "aperiodic/penrose.hpp"

namespace aperiodic {

// Corner tokens: shape (a acute, o obtuse), role (A, B, C), chirality sign.
// Cyclic order by angle, minimised over rotation and reflection.
const std::vector<std::string>& penrose_star_atlas() {
    static const std::vector<std::string> atlas = {
        "oC+ oC- oC+ oC- oC+ oC- oC+ oC- oC+ oC-",
        "oB+ oB- oB+ oB- oB+ oB- oB+ oB- oB+ oB-",
        "aA+ aA- oB- oB+ oB- oB+ oB- oB+ oB- oB+",
        "aA+ aA- oB- oB+ aA+ aA- oB- oB+ oB- oB+",
        "aA+ oA- oA+ aA- oB- oB+",
        "aB+ oA+ oA- aB-",
        "aC+ aC- aC+ aC- oC+ oC-",
        "aC+ aC- oC+ oC- oC+ oC- oC+ oC-",
    };
    return atlas;
}

// Rhomb corners: T72/T108 thick, t36/t144 thin.
const std::vector<std::string>& penrose_star_names() {
    static const std::vector<std::string> names = {
        "sun 5T72",         "star 5T72",      "2t36+4T72",        "4t36+3T72",
        "2t36+2T108+T72",   "t144+2T108",     "2t144+T72",        "t144+3T72",
    };
    return names;
}

}  // namespace aperiodic
