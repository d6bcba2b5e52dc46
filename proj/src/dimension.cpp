#include "qcalc/dimension.hpp"

#include <cctype>
#include <sstream>

namespace qcalc {

Dimension Dimension::base(const std::string& symbol) {
  Dimension d;
  d.exps_[symbol] = Rational(1);
  return d;
}

Dimension Dimension::from_exponents(std::map<std::string, Rational> exps) {
  Dimension d;
  for (auto& [sym, e] : exps)
    if (!e.is_zero()) d.exps_.emplace(sym, e);
  return d;
}

Rational Dimension::exponent_of(const std::string& symbol) const {
  auto it = exps_.find(symbol);
  return it == exps_.end() ? Rational(0) : it->second;
}

Dimension Dimension::operator*(const Dimension& o) const {
  Dimension d = *this;
  for (const auto& [sym, e] : o.exps_) {
    auto it = d.exps_.find(sym);
    if (it == d.exps_.end()) {
      d.exps_.emplace(sym, e);
    } else {
      it->second = it->second + e;
      if (it->second.is_zero()) d.exps_.erase(it);
    }
  }
  return d;
}

Dimension Dimension::inverse() const {
  Dimension d;
  for (const auto& [sym, e] : exps_) d.exps_.emplace(sym, -e);
  return d;
}

Dimension Dimension::pow(const Rational& e) const {
  Dimension d;
  if (e.is_zero()) return d;
  for (const auto& [sym, x] : exps_) d.exps_.emplace(sym, x * e);
  return d;
}

std::string Dimension::to_string() const {
  if (exps_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [sym, e] : exps_) {
    if (!first) os << "*";
    first = false;
    os << sym;
    if (!e.is_one()) os << "^(" << e.to_string() << ")";
  }
  return os.str();
}

namespace {

bool valid_symbol(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

std::optional<Dimension> Dimension::parse(const std::string& text) {
  if (text == "1") return Dimension();
  std::map<std::string, Rational> exps;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t star = text.find('*', pos);
    std::string factor = text.substr(
        pos, star == std::string::npos ? std::string::npos : star - pos);
    std::string sym = factor;
    Rational e(1);
    auto caret = factor.find('^');
    if (caret != std::string::npos) {
      sym = factor.substr(0, caret);
      std::string exp = factor.substr(caret + 1);
      if (exp.size() < 3 || exp.front() != '(' || exp.back() != ')')
        return std::nullopt;
      auto parsed = Rational::parse(exp.substr(1, exp.size() - 2));
      if (!parsed || parsed->is_zero()) return std::nullopt;
      e = *parsed;
    }
    if (!valid_symbol(sym) || exps.count(sym)) return std::nullopt;
    exps.emplace(sym, e);
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  if (exps.empty()) return std::nullopt;
  // Reject non-canonical symbol order so parse is a strict inverse of
  // to_string.
  Dimension d;
  d.exps_ = std::move(exps);
  if (d.to_string() != text) return std::nullopt;
  return d;
}

}  // namespace qcalc
