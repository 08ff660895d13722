#pragma once

#include <stdexcept>
#include <string>

namespace nh {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller violated a precondition (bad dimensions, bad ranges, ...).
struct InvalidArgumentError : Error {
  using Error::Error;
};

// A file or stream could not be read or written.
struct IoError : Error {
  using Error::Error;
};

// Malformed input data (config files, checkpoints, point clouds).
struct ParseError : Error {
  using Error::Error;
};

// Something numeric went off the rails (non-finite loss, bad state).
struct NumericError : Error {
  using Error::Error;
};

// The spatial gradient vanished where a normal/curvature was needed.
struct DegenerateGradientError : Error {
  using Error::Error;
};

}  // namespace nh
