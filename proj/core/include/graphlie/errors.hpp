#ifndef GRAPHLIE_ERRORS_HPP
#define GRAPHLIE_ERRORS_HPP

#include <stdexcept>

namespace graphlie {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoopEdgeError : Error {
  using Error::Error;
};

struct VertexOutOfRangeError : Error {
  using Error::Error;
};

struct MalformedGraph6Error : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct OutOfBoundsError : Error {
  using Error::Error;
};

struct AlgebraMismatchError : Error {
  using Error::Error;
};

struct UnknownBasisLabelError : Error {
  using Error::Error;
};

struct InvalidGraphIsoError : Error {
  using Error::Error;
};

}  // namespace graphlie

#endif
