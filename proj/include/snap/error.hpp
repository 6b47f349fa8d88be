#pragma once

#include <stdexcept>
#include <string>

namespace snap {

// Argument errors use std::invalid_argument; the rest derive from Error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : Error {
  using Error::Error;
};

// Corrupt, truncated or version-mismatched persisted data.
struct FormatError : Error {
  using Error::Error;
};

// Operation not permitted in the current session state.
struct StateError : Error {
  using Error::Error;
};

}  // namespace snap
