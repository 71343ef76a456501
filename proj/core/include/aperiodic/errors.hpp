#pragma once

#include <stdexcept>
#include <string>

namespace aperiodic {

struct MalformedPatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutOfPatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OnBoundary : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutOfRhomb : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateTile : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace aperiodic
