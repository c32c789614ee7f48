#pragma once

#include <stdexcept>

namespace balo {

/// Malformed or unreadable dataset input.
struct DatasetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid experiment configuration, manifest, or run log.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace balo
