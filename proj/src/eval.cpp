#include "qcalc/eval.hpp"

#include "qcalc/errors.hpp"
#include "qcalc/units.hpp"

namespace qcalc {

namespace {

Scalar number_literal(const std::string& text, const ScalarField& f) {
  auto bad = [&] {
    return InvalidNumberError("cannot read '" + text + "' as a " + f.name() +
                              " value");
  };
  size_t slash = text.find('/');
  if (slash == std::string::npos) {
    auto v = f.parse(text);
    if (!v) throw bad();
    return *v;
  }
  auto num = f.parse(text.substr(0, slash));
  auto den = f.parse(text.substr(slash + 1));
  if (!num || !den) throw bad();
  if (f.is_zero(*den))
    throw ZeroInverseError("zero denominator in '" + text + "'");
  return f.div(*num, *den);
}

}  // namespace

PartialResult evaluate_partial(const Expr& e, const UnitRegistry& reg) {
  const Paf& paf = reg.paf();
  switch (e.kind) {
    case Expr::Kind::Number:
      return Quantity{number_literal(e.text, paf.field()), Dimension{}};
    case Expr::Kind::Unit:
      if (paf.field().kind() == ScalarKind::ComplexRational && e.text == "i")
        return Quantity{Scalar{ComplexRational{Rational(0), Rational(1)}},
                        Dimension{}};
      return reg.unit(e.text);
    case Expr::Kind::Neg: {
      PartialResult v = evaluate_partial(*e.lhs, reg);
      if (!v.defined()) return v;
      return paf.neg(v.get());
    }
    case Expr::Kind::Add:
      return paf.add(evaluate_partial(*e.lhs, reg),
                     evaluate_partial(*e.rhs, reg));
    case Expr::Kind::Sub:
      return paf.sub(evaluate_partial(*e.lhs, reg),
                     evaluate_partial(*e.rhs, reg));
    case Expr::Kind::Mul:
      return paf.mul(evaluate_partial(*e.lhs, reg),
                     evaluate_partial(*e.rhs, reg));
    case Expr::Kind::Div:
      return paf.div(evaluate_partial(*e.lhs, reg),
                     evaluate_partial(*e.rhs, reg));
    case Expr::Kind::Pow: {
      PartialResult v = evaluate_partial(*e.lhs, reg);
      if (!v.defined()) return v;
      return paf.pow(v.get(), e.exponent);
    }
  }
  throw Error("unreachable expression kind");
}

std::string render_quantity(const Quantity& q, const UnitRegistry& reg) {
  Decomposition d = reg.base_system().decompose(q);
  return reg.paf().to_string(
      reg.paf().mul(d.value, d.unit).get());
}

EvalOutcome evaluate(const Expr& e, const UnitRegistry& reg) {
  EvalOutcome out;
  auto error = [&](const char* kind, const std::string& msg) {
    out.status = EvalOutcome::Status::Error;
    out.error_kind = kind;
    out.message = msg;
    return out;
  };
  try {
    PartialResult r = evaluate_partial(e, reg);
    if (!r.defined()) {
      out.status = EvalOutcome::Status::Undefined;
      out.diagnostic = r.why().message();
      return out;
    }
    out.status = EvalOutcome::Status::Defined;
    out.quantity = r.get();
    out.rendered = render_quantity(out.quantity, reg);
    return out;
  } catch (const ZeroInverseError& ex) {
    return error("ZeroInverse", ex.what());
  } catch (const NoRootError& ex) {
    return error("NoRoot", ex.what());
  } catch (const UnknownUnitError& ex) {
    return error("UnknownUnit", ex.what());
  } catch (const InvalidNumberError& ex) {
    return error("InvalidNumber", ex.what());
  } catch (const SyntaxError&) {
    throw;
  } catch (const Error& ex) {
    return error("Error", ex.what());
  }
}

EvalOutcome evaluate_text(const std::string& input, const UnitRegistry& reg) {
  ExprPtr e = parse_expression(input);
  return evaluate(*e, reg);
}

}  // namespace qcalc
