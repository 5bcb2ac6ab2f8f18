#pragma once

#include <stdexcept>

namespace hankelmu {

/// A singular integral failed to converge under panel refinement.
struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The absolute-integrability precondition of an integral operator failed.
struct IntegrabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An experiment hypothesis was violated; the run is refused outright.
struct RefusalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or incomplete experiment configuration.
struct ConfigError : RefusalError {
  using RefusalError::RefusalError;
};

}  // namespace hankelmu
