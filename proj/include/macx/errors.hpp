#pragma once

#include <stdexcept>
#include <string>

namespace macx {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ground-set size or enumeration cap exceeded.
struct SizeError : Error {
  using Error::Error;
};

/// Malformed or inconsistent input (files, dimensions, element ranges).
struct InputError : Error {
  using Error::Error;
};

/// A function whose support is not downward closed was passed where a
/// simplicial-complex indicator was required.
struct NicenessError : Error {
  using Error::Error;
};

/// A chain complex whose consecutive boundaries do not compose to zero.
struct MalformedComplexError : Error {
  using Error::Error;
};

}  // namespace macx
