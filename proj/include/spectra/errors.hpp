#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (digraph files, family specifiers).
struct ParseError : Error {
  using Error::Error;
};

/// A documented operation precondition was violated (invalid order or
/// parameters, digraph not strongly connected, acyclic input, ...).
struct PreconditionError : Error {
  using Error::Error;
};

/// Input exceeds a configured exhaustive-computation cap.
struct CapExceededError : Error {
  using Error::Error;
};

/// A certified comparison could not be decided at maximum refinement depth.
struct UnresolvedError : Error {
  using Error::Error;
};

}  // namespace spectra
