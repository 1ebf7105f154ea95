#pragma once

#include <stdexcept>
#include <string>

namespace natbundle {

/// Base of every error raised by the library. The CLI maps each subclass to
/// a stable exit code (see tools/natbundle_cli.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Transition matrix whose determinant is not a unit of the Laurent ring.
class NotABundleError : public Error {
 public:
  using Error::Error;
};

/// An h0 profile that no splitting type of the stated rank/degree produces.
class ProfileError : public Error {
 public:
  using Error::Error;
};

class IntegralityError : public Error {
 public:
  using Error::Error;
};

class InvalidRequest : public Error {
 public:
  using Error::Error;
};

/// alpha and beta both integral: outside the constructive range.
class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

class GenericityExhausted : public Error {
 public:
  using Error::Error;
};

class VerificationFailed : public Error {
 public:
  using Error::Error;
};

/// The Cech oracle could not confirm that its truncation was large enough.
class OracleInconclusive : public Error {
 public:
  using Error::Error;
};

}  // namespace natbundle
