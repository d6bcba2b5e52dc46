#include "qcalc/quantity.hpp"

#include "qcalc/errors.hpp"

namespace qcalc {

PartialResult Paf::add(const PartialResult& a, const PartialResult& b) const {
  if (!a.defined()) return a;
  if (!b.defined()) return b;
  const Quantity& x = a.get();
  const Quantity& y = b.get();
  if (x.dim != y.dim)
    return PartialResult::undefined(UndefInfo{"+", x.dim, y.dim});
  return Quantity{field_.add(x.value, y.value), x.dim};
}

PartialResult Paf::sub(const PartialResult& a, const PartialResult& b) const {
  if (!a.defined()) return a;
  if (!b.defined()) return b;
  const Quantity& x = a.get();
  const Quantity& y = b.get();
  if (x.dim != y.dim)
    return PartialResult::undefined(UndefInfo{"-", x.dim, y.dim});
  return Quantity{field_.sub(x.value, y.value), x.dim};
}

PartialResult Paf::mul(const PartialResult& a, const PartialResult& b) const {
  if (!a.defined()) return a;
  if (!b.defined()) return b;
  const Quantity& x = a.get();
  const Quantity& y = b.get();
  return Quantity{field_.mul(x.value, y.value), x.dim * y.dim};
}

PartialResult Paf::div(const PartialResult& a, const PartialResult& b) const {
  if (!a.defined()) return a;
  if (!b.defined()) return b;
  return mul(a, PartialResult(invert(b.get())));
}

Quantity Paf::pow(const Quantity& a, const Rational& e) const {
  if (is_zero(a)) {
    if (e.sign() <= 0)
      throw ZeroInverseError("zero quantity raised to a non-positive power");
    return Quantity{field_.zero(), a.dim.pow(e)};
  }
  if (!e.den().fits_uint_p()) throw NoRootError("root index too large");
  unsigned q = static_cast<unsigned>(e.den().get_ui());
  auto root = field_.nth_root(a.value, q);
  if (!root)
    throw NoRootError("no exact root of index " + std::to_string(q) + " of " +
                      field_.to_string(a.value) + " in " + field_.name());
  if (!e.num().fits_slong_p()) throw NoRootError("exponent too large");
  Scalar value = field_.pow_int(*root, e.num().get_si());
  return Quantity{std::move(value), a.dim.pow(e)};
}

std::string Paf::to_string(const Quantity& a) const {
  std::string v = field_.to_string(a.value);
  if (a.dim.is_dimensionless()) return v;
  // A trailing "+2i" would re-parse as a sum of quantities, so complex
  // values with an imaginary part are parenthesized next to a unit.
  if (const auto* c = std::get_if<ComplexRational>(&a.value);
      c && !c->im.is_zero())
    v = "(" + v + ")";
  return v + " " + a.dim.to_string();
}

}  // namespace qcalc
