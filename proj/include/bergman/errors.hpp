#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

// Base class for every error raised by the library. The CLI maps the
// concrete subclasses onto exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class WrongArity : public Error {
public:
  using Error::Error;
};

class NumericalDegeneracy : public Error {
public:
  using Error::Error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

class BasisError : public Error {
public:
  using Error::Error;
};

class OutsideDomain : public Error {
public:
  using Error::Error;
};

class VolumeUnknown : public Error {
public:
  using Error::Error;
};

} // namespace bergman
