#include "qcalc/rational.hpp"

#include <cctype>

#include "qcalc/errors.hpp"

namespace qcalc {

namespace {

void require_nonzero_den(const mpz_class& den) {
  if (sgn(den) == 0) throw Error("rational with zero denominator");
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
  require_nonzero_den(mpz_class(den));
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  require_nonzero_den(den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
  require_nonzero_den(q_.get_den());
  q_.canonicalize();
}

std::optional<Rational> Rational::parse(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::string body = text;
  bool neg = false;
  if (body[0] == '-' || body[0] == '+') {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  auto slash = body.find('/');
  auto dot = body.find('.');
  if (slash != std::string::npos && dot != std::string::npos)
    return std::nullopt;
  Rational r;
  if (slash != std::string::npos) {
    std::string n = body.substr(0, slash), d = body.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) return std::nullopt;
    mpz_class den(d);
    if (sgn(den) == 0) return std::nullopt;
    r = Rational(mpz_class(n), den);
  } else if (dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (!all_digits(ip) || !all_digits(fp)) return std::nullopt;
    mpz_class scale = 1;
    for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
    r = Rational(mpz_class(ip) * scale + mpz_class(fp), scale);
  } else {
    if (!all_digits(body)) return std::nullopt;
    r = Rational(mpz_class(body), mpz_class(1));
  }
  return neg ? -r : r;
}

Rational Rational::operator/(const Rational& o) const {
  return *this * o.inverse();
}

Rational Rational::inverse() const {
  if (is_zero()) throw ZeroInverseError("inverse of zero");
  return Rational(mpq_class(1 / q_));
}

std::string Rational::to_string() const {
  return is_integer() ? num().get_str()
                      : num().get_str() + "/" + den().get_str();
}

std::optional<mpz_class> exact_int_root(const mpz_class& z, unsigned n) {
  if (n == 0) throw Error("0th root");
  if (n == 1) return z;
  if (sgn(z) < 0 && n % 2 == 0) return std::nullopt;
  mpz_class r;
  int exact = mpz_root(r.get_mpz_t(), z.get_mpz_t(), n);
  if (!exact) return std::nullopt;
  return r;
}

std::optional<Rational> rational_nth_root(const Rational& x, unsigned n) {
  if (n == 0) throw Error("0th root");
  if (n == 1) return x;
  if (x.sign() < 0 && n % 2 == 0) return std::nullopt;
  auto rn = exact_int_root(x.num(), n);
  if (!rn) return std::nullopt;
  auto rd = exact_int_root(x.den(), n);
  if (!rd) return std::nullopt;
  return Rational(*rn, *rd);
}

}  // namespace qcalc
