#include "qcalc/units.hpp"

#include "qcalc/errors.hpp"

namespace qcalc {

UnitSystem UnitSystem::from_entries(const Paf& paf,
                                    const std::vector<Quantity>& units) {
  UnitSystem sys(paf);
  for (const Quantity& u : units) {
    if (paf.is_zero(u))
      throw Error("unit for dimension " + u.dim.to_string() +
                  " must be nonzero");
    if (!sys.entries_.emplace(u.dim, u).second)
      throw Error("duplicate unit for dimension " + u.dim.to_string());
  }
  return sys;
}

UnitSystem UnitSystem::coherent_from_base_units(
    const Paf& paf, const std::map<std::string, Quantity>& base) {
  UnitSystem sys(paf);
  sys.generated_ = true;
  for (const auto& [sym, u] : base) {
    if (paf.is_zero(u))
      throw Error("base unit '" + sym + "' must be nonzero");
    if (u.dim != Dimension::base(sym))
      throw Error("base unit '" + sym + "' must have dimension " + sym +
                  ", got " + u.dim.to_string());
    sys.base_.emplace(sym, u);
  }
  return sys;
}

Quantity UnitSystem::unit_for(const Dimension& d) const {
  if (!generated_) {
    auto it = entries_.find(d);
    if (it == entries_.end())
      throw MissingUnitError("no unit for dimension " + d.to_string());
    return it->second;
  }
  Quantity out = paf_.one();
  for (const auto& [sym, e] : d.exponents()) {
    auto it = base_.find(sym);
    if (it == base_.end())
      throw MissingUnitError("no base unit for symbol '" + sym + "'");
    out = paf_.mul(out, paf_.pow(it->second, e)).get();
  }
  return out;
}

std::optional<Quantity> UnitSystem::try_unit(const Dimension& d) const {
  try {
    return unit_for(d);
  } catch (const MissingUnitError&) {
    return std::nullopt;
  }
}

Decomposition UnitSystem::decompose(const Quantity& q) const {
  Quantity u = unit_for(q.dim);
  Quantity value = paf_.mul(q, paf_.invert(u)).get();
  return Decomposition{value, u};
}

Quantity UnitSystem::recompose(const Quantity& value,
                               const Quantity& unit) const {
  if (!value.dim.is_dimensionless())
    throw NotDimensionlessError("value has dimension " +
                                value.dim.to_string());
  if (paf_.is_zero(unit)) throw Error("unit must be nonzero");
  return paf_.mul(value, unit).get();
}

CoherenceResult UnitSystem::is_coherent(
    const std::vector<Dimension>& probe) const {
  CoherenceResult res;
  auto fail = [&](const Dimension& a, const Dimension& b, std::string det) {
    res.coherent = false;
    res.witness = std::make_pair(a, b);
    res.detail = std::move(det);
  };

  Dimension none;
  if (auto u = try_unit(none); u && !paf_.eq(*u, paf_.one())) {
    fail(none, none,
         "unit of the empty dimension is " + paf_.to_string(*u) +
             ", expected 1");
    return res;
  }

  std::vector<Quantity> units;
  units.reserve(probe.size());
  for (const Dimension& d : probe) units.push_back(unit_for(d));

  for (size_t i = 0; i < probe.size(); ++i)
    for (size_t j = 0; j < probe.size(); ++j) {
      Dimension dp = probe[i] * probe[j];
      auto w = try_unit(dp);
      if (!w) continue;
      Quantity lhs = paf_.mul(units[i], units[j]).get();
      if (!paf_.eq(lhs, *w)) {
        fail(probe[i], probe[j],
             "unit(" + probe[i].to_string() + ")*unit(" +
                 probe[j].to_string() + ") = " + paf_.to_string(lhs) +
                 ", unit(" + dp.to_string() + ") = " + paf_.to_string(*w));
        return res;
      }
    }

  for (size_t i = 0; i < probe.size(); ++i) {
    Dimension di = probe[i].inverse();
    auto w = try_unit(di);
    if (!w) continue;
    Quantity lhs = paf_.invert(units[i]);
    if (!paf_.eq(lhs, *w)) {
      fail(probe[i], di,
           "unit(" + probe[i].to_string() + ")^-1 = " + paf_.to_string(lhs) +
               ", unit(" + di.to_string() + ") = " + paf_.to_string(*w));
      return res;
    }
  }
  return res;
}

}  // namespace qcalc
