#pragma once

#include <stdexcept>
#include <string>

namespace mfields {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad tuples, ragged matrices, unparsable text.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Mathematically invalid request, e.g. asking for the weight of an
/// incoherent matching field or a weight matrix that produces ties.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured budget (pair limit, enumeration budget, degree cap) ran out.
class ResourceError : public Error {
 public:
  using Error::Error;
};

inline constexpr const char* kNotCoherentMessage = "expected a coherent matching field";

}  // namespace mfields
