#pragma once

#include <stdexcept>
#include <string>

namespace fermat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

/// span(image generators) is not contained in span(kernel generators).
class ContainmentViolation : public Error {
 public:
  using Error::Error;
};

class UnsupportedExponent : public Error {
 public:
  using Error::Error;
};

/// A linear map does not preserve the subspace it is being restricted to.
class NotInvariant : public Error {
 public:
  using Error::Error;
};

/// Group action matrices fail to commute, are singular, or have the wrong order.
class InvalidAction : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fermat
