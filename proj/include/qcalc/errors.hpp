#pragma once

#include <stdexcept>
#include <string>

namespace qcalc {

/// Base class for all engine errors. Undefinedness of partial operations is
/// NOT an error (it is a value, see PartialResult); these exceptions cover
/// genuinely exceptional conditions: malformed inputs, operations the axioms
/// leave undefined on purpose (inverse of a zero), missing roots, etc.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inverse of a zero quantity (the axioms quantify inverses over non-zeros).
struct ZeroInverseError : Error {
  using Error::Error;
};

/// A required exact scalar root does not exist in the active carrier.
struct NoRootError : Error {
  using Error::Error;
};

/// Unit system has no unit for the requested dimension and cannot generate
/// one.
struct MissingUnitError : Error {
  using Error::Error;
};

/// recompose() was handed a value that is not dimensionless.
struct NotDimensionlessError : Error {
  using Error::Error;
};

/// Identifier not present in the unit registry.
struct UnknownUnitError : Error {
  using Error::Error;
};

/// Numeric literal that the active scalar carrier cannot represent.
struct InvalidNumberError : Error {
  using Error::Error;
};

/// Finite-model table file is structurally invalid (ragged tables, out of
/// range entries, duplicate labels, size cap exceeded, ...).
struct MalformedModelError : Error {
  using Error::Error;
};

/// File could not be read or written.
struct IoError : Error {
  using Error::Error;
};

/// Operation requires a model that passes the PAF axiom check.
struct NotAPafError : Error {
  using Error::Error;
};

/// Operation requires a model that passes the fieldoid axiom check.
struct NotAFieldoidError : Error {
  using Error::Error;
};

/// Extension-model construction inputs violate the group-extension
/// preconditions.
struct BadExtensionError : Error {
  using Error::Error;
};

/// Expression or definition-file syntax error with source position.
struct SyntaxError : Error {
  SyntaxError(const std::string& msg, int line_, int col_)
      : Error(msg), line(line_), col(col_) {}
  int line;
  int col;
};

}  // namespace qcalc
