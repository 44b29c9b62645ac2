#pragma once

#include <stdexcept>
#include <string>

namespace graphnil {

/// Thrown for invalid inputs and violated preconditions throughout the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace graphnil
