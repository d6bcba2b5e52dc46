#pragma once

#include <string>

#include "qcalc/expr.hpp"
#include "qcalc/quantity.hpp"
#include "qcalc/registry.hpp"

namespace qcalc {

/// Every evaluation lands in exactly one of these. Undefined is the
/// engine's 𝔲: a value with a diagnostic, not an error.
struct EvalOutcome {
  enum class Status { Defined, Undefined, Error };
  Status status = Status::Error;

  Quantity quantity;       // Defined
  std::string rendered;    // Defined
  std::string diagnostic;  // Undefined, e.g. "incompatible dimensions: m vs s"
  std::string error_kind;  // Error: ZeroInverse, NoRoot, UnknownUnit,
                           //        InvalidNumber, Error
  std::string message;     // Error

  bool defined() const { return status == Status::Defined; }
};

/// Bottom-up evaluation against the registry's carrier. In the complex
/// carrier the identifier `i` is the imaginary unit and shadows any unit of
/// that name. Never throws for value-level failures; SyntaxError from
/// parsing is thrown by evaluate_text.
EvalOutcome evaluate(const Expr& e, const UnitRegistry& reg);
EvalOutcome evaluate_text(const std::string& input, const UnitRegistry& reg);

/// Renders a quantity against the registry's base-unit system: decomposed
/// value in canonical scalar form, base symbols sorted, `^(p/q)` exponents.
std::string render_quantity(const Quantity& q, const UnitRegistry& reg);

/// Throwing core used by both evaluate() and the .qdef loader.
PartialResult evaluate_partial(const Expr& e, const UnitRegistry& reg);

}  // namespace qcalc
