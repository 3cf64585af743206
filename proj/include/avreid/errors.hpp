#pragma once

#include <stdexcept>
#include <string>

namespace avreid {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A zero embedding row means a dead network upstream; it is never clamped.
struct ZeroVectorError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct ShapeMismatchError : Error {
  using Error::Error;
};

struct ShapeError : Error {
  using Error::Error;
};

struct InsufficientIdentitiesError : Error {
  using Error::Error;
};

struct DegenerateBatchError : Error {
  using Error::Error;
};

struct LabelOutOfRangeError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct MissingAnnotationError : Error {
  using Error::Error;
};

struct LayoutError : Error {
  using Error::Error;
};

struct NoValidGalleryError : Error {
  using Error::Error;
};

}  // namespace avreid
