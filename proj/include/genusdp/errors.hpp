#pragma once

#include <stdexcept>

namespace genusdp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed user-facing input (files, CLI arguments). The CLI maps this to exit code 2.
struct InputError : Error {
  using Error::Error;
};

// Structurally invalid rotation system or signature data.
struct EmbeddingError : Error {
  using Error::Error;
};

// Invalid noose description: alternation, incidence or crossing violations.
struct NooseError : Error {
  using Error::Error;
};

// Decomposition tree that fails its structural contract.
struct DecompositionError : Error {
  using Error::Error;
};

// Broken internal invariant. Always a bug in this library, never bad input.
struct InternalError : Error {
  using Error::Error;
};

inline void ensure(bool condition, const char* what) {
  if (!condition) throw InternalError(what);
}

}  // namespace genusdp
