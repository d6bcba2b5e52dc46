#include "qcalc/registry.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "qcalc/errors.hpp"
#include "qcalc/eval.hpp"

namespace qcalc {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

void UnitRegistry::declare_base(const std::string& symbol) {
  if (symbol.empty() || !ident_start(symbol[0]))
    throw Error("invalid base symbol '" + symbol + "'");
  for (char c : symbol)
    if (!ident_char(c)) throw Error("invalid base symbol '" + symbol + "'");
  if (units_.count(symbol))
    throw Error("unit '" + symbol + "' already defined");
  base_.push_back(symbol);
  units_.emplace(symbol,
                 Quantity{paf_.field().one(), Dimension::base(symbol)});
}

void UnitRegistry::define_unit(const std::string& name, const Quantity& q) {
  if (units_.count(name)) throw Error("unit '" + name + "' already defined");
  if (paf_.is_zero(q)) throw Error("unit '" + name + "' must be nonzero");
  units_.emplace(name, q);
}

bool UnitRegistry::has_unit(const std::string& name) const {
  return units_.count(name) != 0;
}

Quantity UnitRegistry::unit(const std::string& name) const {
  auto it = units_.find(name);
  if (it == units_.end())
    throw UnknownUnitError("unknown unit '" + name + "'");
  return it->second;
}

UnitSystem UnitRegistry::base_system() const {
  std::map<std::string, Quantity> base;
  for (const std::string& s : base_)
    base.emplace(s, Quantity{paf_.field().one(), Dimension::base(s)});
  return UnitSystem::coherent_from_base_units(paf_, base);
}

void UnitRegistry::load_text(const std::string& text,
                             const std::string& where) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    size_t i = 0;
    auto skip_ws = [&] {
      while (i < line.size() &&
             std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
    };
    auto read_ident = [&] {
      size_t start = i;
      if (i < line.size() && ident_start(line[i])) {
        ++i;
        while (i < line.size() && ident_char(line[i])) ++i;
      }
      return line.substr(start, i - start);
    };

    skip_ws();
    if (i >= line.size()) continue;
    int kw_col = static_cast<int>(i) + 1;
    std::string keyword = read_ident();
    if (keyword != "base" && keyword != "unit")
      throw SyntaxError("expected 'base' or 'unit'", lineno, kw_col);

    skip_ws();
    int name_col = static_cast<int>(i) + 1;
    std::string name = read_ident();
    if (name.empty())
      throw SyntaxError("expected a unit name", lineno, name_col);
    if (has_unit(name))
      throw SyntaxError("unit '" + name + "' already defined", lineno,
                        name_col);

    if (keyword == "base") {
      skip_ws();
      if (i < line.size())
        throw SyntaxError("unexpected text after base declaration", lineno,
                          static_cast<int>(i) + 1);
      declare_base(name);
      continue;
    }

    skip_ws();
    if (i >= line.size() || line[i] != '=')
      throw SyntaxError("expected '=' after unit name", lineno,
                        static_cast<int>(i) + 1);
    ++i;
    std::string body = line.substr(i);
    int body_col = static_cast<int>(i) + 1;
    std::string prefix = where + ":" + std::to_string(lineno) + ": ";
    try {
      ExprPtr e = parse_expression(body);
      PartialResult r = evaluate_partial(*e, *this);
      if (!r.defined())
        throw Error(prefix + "definition of '" + name +
                    "' is undefined: " + r.why().message());
      define_unit(name, r.get());
    } catch (const SyntaxError& ex) {
      throw SyntaxError(ex.what(), lineno, body_col - 1 + ex.col);
    } catch (const NoRootError& ex) {
      throw NoRootError(prefix + ex.what());
    } catch (const UnknownUnitError& ex) {
      throw UnknownUnitError(prefix + ex.what());
    } catch (const ZeroInverseError& ex) {
      throw ZeroInverseError(prefix + ex.what());
    } catch (const InvalidNumberError& ex) {
      throw InvalidNumberError(prefix + ex.what());
    }
  }
}

UnitRegistry UnitRegistry::load_file(const std::string& path,
                                     const Paf& paf) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  UnitRegistry reg(paf);
  reg.load_text(buf.str(), path);
  return reg;
}

}  // namespace qcalc
