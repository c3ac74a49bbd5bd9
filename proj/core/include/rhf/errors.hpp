#pragma once

#include <stdexcept>
#include <string>

namespace rhf {

// Bad user input: malformed braid words, unreadable diagram files.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cell data that does not describe a closed surface.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed (determinant mismatch, non-integral index, ...).
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sign computations need an orientable quotient.
struct UnsupportedDiagram : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rhf
