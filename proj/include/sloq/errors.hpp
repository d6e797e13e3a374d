#pragma once

#include <stdexcept>
#include <string>

namespace sloq {

/// Configuration rejected before any computation ran.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A computed quantity violated one of the model invariants.
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sloq
