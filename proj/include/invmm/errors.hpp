#pragma once

#include <stdexcept>
#include <string>

namespace invmm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

/// Malformed polynomial, group element, tensor or system text.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Wrong number of parameters for a catalog family.
class ArityError : public Error {
public:
  using Error::Error;
};

/// Computed data disagrees with the reference tables it is validated against.
class IntegrityError : public Error {
public:
  using Error::Error;
};

/// A polynomial identity required by an elimination step did not hold.
class ProofStepFailure : public Error {
public:
  using Error::Error;
};

/// Direct orbit summation disagrees with the l * p(w) formula.
class OrbitSumMismatch : public Error {
public:
  using Error::Error;
};

/// Argument outside an operation's domain (rank < 1, empty multiset, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Unreadable or unwritable file.
class IoError : public Error {
public:
  using Error::Error;
};

class MissingVariable : public Error {
public:
  using Error::Error;
};

class UnknownFormat : public Error {
public:
  using Error::Error;
};

} // namespace invmm
