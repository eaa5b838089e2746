#pragma once

#include <stdexcept>
#include <string>

namespace fop {

/// Malformed user input or a violated precondition.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An enumeration or table would exceed a configured size cap.
struct size_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A pipeline step's mathematical assertion failed: the scenario does not
/// admit the requested construction. The message names the violated step.
struct construction_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Internal invariant violation. Seeing this means a bug in the library,
/// not in the caller's data.
struct engine_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace fop
