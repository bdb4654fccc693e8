#pragma once

#include <stdexcept>
#include <string>

namespace hartree {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A field sample is NaN or infinite.
class InvalidFieldError : public Error {
 public:
  using Error::Error;
};

// Two operands live on different grids.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Operation not defined for the given kernel class.
class UnsupportedKernelError : public Error {
 public:
  using Error::Error;
};

// Malformed HWF1 payload (bad magic, truncation, inconsistent header).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure.
class IoError : public Error {
 public:
  using Error::Error;
};

// Invalid run configuration; the message names the offending key.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace hartree
