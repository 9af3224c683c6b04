#pragma once

#include <stdexcept>
#include <string>

namespace oortlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation would have to enumerate more than enum_cap() elements.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NonMember : public Error {
 public:
  using Error::Error;
};

class NonSubgroup : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class NotPGroup : public Error {
 public:
  using Error::Error;
};

class NotPrimePower : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace oortlab
