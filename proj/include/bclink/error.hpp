#pragma once

#include <stdexcept>
#include <string>

namespace bclink {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the documented domain (angle range, degree cap, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The invariant is undefined: the angles sit on the Alexander root locus.
class NotDefined : public Error {
 public:
  using Error::Error;
};

/// Linking number zero; the Alexander polynomial vanishes identically.
class ZeroLinking : public Error {
 public:
  using Error::Error;
};

/// phi at a pillowcase edge (0 or pi) where the plane degenerates.
class DegeneratePhi : public Error {
 public:
  using Error::Error;
};

class FitFailure : public Error {
 public:
  using Error::Error;
};

class TransversalityFailure : public Error {
 public:
  using Error::Error;
};

/// Some omega_i equals 1, where the signature is not defined.
class OmegaOne : public Error {
 public:
  using Error::Error;
};

/// A Seifert system violates A^{-e} = (A^e)^T or has missing/misshapen matrices.
class BadSystem : public Error {
 public:
  using Error::Error;
};

/// Operation is only defined for positive linking number.
class PositiveOnly : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownColor : public Error {
 public:
  using Error::Error;
};

/// Malformed braid word or coloring (index out of range, closure not well-colored).
class InvalidBraid : public Error {
 public:
  using Error::Error;
};

/// Input data (JSON) is syntactically or structurally invalid.
class DataFormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace bclink
