#pragma once

#include <stdexcept>
#include <string>

namespace matos {

/// Raised when an operation is asked to exceed its supported instance size.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace matos
