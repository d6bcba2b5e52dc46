#include "qcalc/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <random>

#include "qcalc/errors.hpp"

namespace qcalc {

namespace {

bool is_small_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1u) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1u;
  }
  return static_cast<std::uint32_t>(acc);
}

const Rational& as_rat(const Scalar& s) {
  if (const auto* r = std::get_if<Rational>(&s)) return *r;
  throw Error("scalar is not a rational");
}

const ComplexRational& as_cpx(const Scalar& s) {
  if (const auto* c = std::get_if<ComplexRational>(&s)) return *c;
  throw Error("scalar is not a complex rational");
}

PrimeElem as_pf(const Scalar& s) {
  if (const auto* e = std::get_if<PrimeElem>(&s)) return *e;
  throw Error("scalar is not a prime-field element");
}

double as_f64(const Scalar& s) {
  if (const auto* d = std::get_if<double>(&s)) return *d;
  throw Error("scalar is not a float64");
}

std::string double_to_string(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw Error("float formatting failed");
  return std::string(buf, end);
}

std::optional<double> double_nth_root(double x, unsigned n) {
  if (n == 1) return x;
  if (x == 0.0) return 0.0;
  if (x < 0.0 && n % 2 == 0) return std::nullopt;
  double r;
  if (n == 2) {
    r = std::sqrt(x);
  } else if (n == 3) {
    r = std::cbrt(x);
  } else {
    r = std::copysign(std::pow(std::fabs(x), 1.0 / n), x);
    // One Newton step tightens the libm estimate toward round-trip accuracy.
    double rn1 = std::pow(r, static_cast<double>(n - 1));
    double f = rn1 * r - x;
    double df = n * rn1;
    if (std::isfinite(f) && df != 0.0) r -= f / df;
  }
  return r;
}

}  // namespace

ScalarField ScalarField::prime_field(std::uint32_t p) {
  if (p >= (1u << 16) || !is_small_prime(p))
    throw Error("prime_field needs a prime below 2^16, got " +
                std::to_string(p));
  return ScalarField(ScalarKind::PrimeField, p);
}

std::string ScalarField::name() const {
  switch (kind_) {
    case ScalarKind::ExactRational:
      return "rational";
    case ScalarKind::ComplexRational:
      return "complex";
    case ScalarKind::PrimeField:
      return "gf(" + std::to_string(p_) + ")";
    case ScalarKind::Float64:
      return "float64";
  }
  throw Error("bad scalar kind");
}

Scalar ScalarField::zero() const { return from_int(0); }
Scalar ScalarField::one() const { return from_int(1); }

Scalar ScalarField::from_int(long n) const {
  switch (kind_) {
    case ScalarKind::ExactRational:
      return Rational(n);
    case ScalarKind::ComplexRational:
      return ComplexRational{Rational(n), Rational(0)};
    case ScalarKind::PrimeField: {
      long r = n % static_cast<long>(p_);
      if (r < 0) r += p_;
      return PrimeElem{static_cast<std::uint32_t>(r)};
    }
    case ScalarKind::Float64:
      return static_cast<double>(n);
  }
  throw Error("bad scalar kind");
}

Scalar ScalarField::add(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case ScalarKind::ExactRational:
      return as_rat(a) + as_rat(b);
    case ScalarKind::ComplexRational:
      return as_cpx(a) + as_cpx(b);
    case ScalarKind::PrimeField:
      return PrimeElem{static_cast<std::uint32_t>(
          (static_cast<std::uint64_t>(as_pf(a).v) + as_pf(b).v) % p_)};
    case ScalarKind::Float64:
      return as_f64(a) + as_f64(b);
  }
  throw Error("bad scalar kind");
}

Scalar ScalarField::sub(const Scalar& a, const Scalar& b) const {
  return add(a, neg(b));
}

Scalar ScalarField::mul(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case ScalarKind::ExactRational:
      return as_rat(a) * as_rat(b);
    case ScalarKind::ComplexRational:
      return as_cpx(a) * as_cpx(b);
    case ScalarKind::PrimeField:
      return PrimeElem{static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(as_pf(a).v) * as_pf(b).v % p_)};
    case ScalarKind::Float64:
      return as_f64(a) * as_f64(b);
  }
  throw Error("bad scalar kind");
}

Scalar ScalarField::neg(const Scalar& a) const {
  switch (kind_) {
    case ScalarKind::ExactRational:
      return -as_rat(a);
    case ScalarKind::ComplexRational:
      return -as_cpx(a);
    case ScalarKind::PrimeField:
      return PrimeElem{as_pf(a).v == 0 ? 0 : p_ - as_pf(a).v};
    case ScalarKind::Float64:
      return -as_f64(a);
  }
  throw Error("bad scalar kind");
}

Scalar ScalarField::invert(const Scalar& a) const {
  if (is_zero(a)) throw ZeroInverseError("inverse of zero");
  switch (kind_) {
    case ScalarKind::ExactRational:
      return as_rat(a).inverse();
    case ScalarKind::ComplexRational:
      return as_cpx(a).inverse();
    case ScalarKind::PrimeField:
      return PrimeElem{pow_mod(as_pf(a).v, p_ - 2, p_)};
    case ScalarKind::Float64:
      return 1.0 / as_f64(a);
  }
  throw Error("bad scalar kind");
}

Scalar ScalarField::div(const Scalar& a, const Scalar& b) const {
  return mul(a, invert(b));
}

Scalar ScalarField::pow_int(const Scalar& a, long k) const {
  if (k < 0) {
    // Negate via unsigned to stay defined at LONG_MIN.
    unsigned long mag = static_cast<unsigned long>(-(k + 1)) + 1u;
    Scalar inv = invert(a);
    Scalar acc = one(), base = inv;
    while (mag > 0) {
      if (mag & 1u) acc = mul(acc, base);
      base = mul(base, base);
      mag >>= 1u;
    }
    return acc;
  }
  unsigned long mag = static_cast<unsigned long>(k);
  Scalar acc = one(), base = a;
  while (mag > 0) {
    if (mag & 1u) acc = mul(acc, base);
    base = mul(base, base);
    mag >>= 1u;
  }
  return acc;
}

bool ScalarField::equal(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case ScalarKind::ExactRational:
      return as_rat(a) == as_rat(b);
    case ScalarKind::ComplexRational:
      return as_cpx(a) == as_cpx(b);
    case ScalarKind::PrimeField:
      return as_pf(a).v == as_pf(b).v;
    case ScalarKind::Float64:
      return as_f64(a) == as_f64(b);
  }
  throw Error("bad scalar kind");
}

bool ScalarField::approx_equal(const Scalar& a, const Scalar& b,
                               double tol) const {
  if (kind_ != ScalarKind::Float64) return equal(a, b);
  double x = as_f64(a), y = as_f64(b);
  if (x == y) return true;
  double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
  return std::fabs(x - y) <= tol * scale;
}

std::optional<Scalar> ScalarField::nth_root(const Scalar& a,
                                            unsigned n) const {
  if (n == 0) throw Error("0th root");
  switch (kind_) {
    case ScalarKind::ExactRational: {
      auto r = rational_nth_root(as_rat(a), n);
      if (!r) return std::nullopt;
      return Scalar(*r);
    }
    case ScalarKind::ComplexRational: {
      auto r = complex_nth_root(as_cpx(a), n);
      if (!r) return std::nullopt;
      return Scalar(*r);
    }
    case ScalarKind::PrimeField: {
      std::uint32_t target = as_pf(a).v;
      for (std::uint32_t r = 0; r < p_; ++r)
        if (pow_mod(r, n, p_) == target) return Scalar(PrimeElem{r});
      return std::nullopt;
    }
    case ScalarKind::Float64: {
      auto r = double_nth_root(as_f64(a), n);
      if (!r) return std::nullopt;
      return Scalar(*r);
    }
  }
  throw Error("bad scalar kind");
}

std::string ScalarField::to_string(const Scalar& a) const {
  switch (kind_) {
    case ScalarKind::ExactRational:
      return as_rat(a).to_string();
    case ScalarKind::ComplexRational:
      return as_cpx(a).to_string();
    case ScalarKind::PrimeField:
      return std::to_string(as_pf(a).v);
    case ScalarKind::Float64:
      return double_to_string(as_f64(a));
  }
  throw Error("bad scalar kind");
}

std::optional<Scalar> ScalarField::parse(const std::string& text) const {
  if (text.empty()) return std::nullopt;
  switch (kind_) {
    case ScalarKind::ExactRational: {
      auto r = Rational::parse(text);
      if (!r) return std::nullopt;
      return Scalar(*r);
    }
    case ScalarKind::ComplexRational: {
      if (text.back() != 'i') {
        auto re = Rational::parse(text);
        if (!re) return std::nullopt;
        return Scalar(ComplexRational{*re, Rational(0)});
      }
      // Split an optional real part from the trailing imaginary term at the
      // last interior sign character.
      std::string body = text.substr(0, text.size() - 1);
      size_t split = std::string::npos;
      for (size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '/' &&
            body[i - 1] != '+' && body[i - 1] != '-') {
          split = i;
          break;
        }
      }
      std::string re_text, im_text;
      if (split == std::string::npos) {
        re_text = "0";
        im_text = body;
      } else {
        re_text = body.substr(0, split);
        im_text = body.substr(split);  // keeps the sign
      }
      if (im_text.empty() || im_text == "+") im_text = "1";
      if (im_text == "-") im_text = "-1";
      auto re = Rational::parse(re_text);
      auto im = Rational::parse(im_text);
      if (!re || !im) return std::nullopt;
      return Scalar(ComplexRational{*re, *im});
    }
    case ScalarKind::PrimeField: {
      auto r = Rational::parse(text);
      if (!r || !r->is_integer()) return std::nullopt;
      mpz_class rem = r->num() % p_;
      if (sgn(rem) < 0) rem += p_;
      return Scalar(PrimeElem{static_cast<std::uint32_t>(rem.get_ui())});
    }
    case ScalarKind::Float64: {
      const char* begin = text.c_str();
      char* end = nullptr;
      double v = std::strtod(begin, &end);
      if (end != begin + text.size() || !std::isfinite(v))
        return std::nullopt;
      return Scalar(v);
    }
  }
  throw Error("bad scalar kind");
}

CheckReport ScalarField::self_check(int samples, std::uint64_t seed) const {
  CheckReport report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num_dist(-1000, 1000);
  std::uniform_int_distribution<long> den_dist(1, 60);
  std::uniform_int_distribution<std::uint32_t> pf_dist(0, p_ ? p_ - 1 : 0);

  auto draw = [&]() -> Scalar {
    switch (kind_) {
      case ScalarKind::ExactRational:
        return Rational(num_dist(rng), den_dist(rng));
      case ScalarKind::ComplexRational:
        return ComplexRational{Rational(num_dist(rng), den_dist(rng)),
                               Rational(num_dist(rng), den_dist(rng))};
      case ScalarKind::PrimeField:
        return PrimeElem{pf_dist(rng)};
      case ScalarKind::Float64:
        return static_cast<double>(num_dist(rng)) / den_dist(rng);
    }
    throw Error("bad scalar kind");
  };

  const double tol = 1e-12;
  auto eq = [&](const Scalar& a, const Scalar& b) {
    return approx_equal(a, b, tol);
  };
  auto witness = [&](std::initializer_list<Scalar> vals) {
    std::vector<std::string> out;
    for (const auto& v : vals) out.push_back(to_string(v));
    return out;
  };
  auto expect = [&](bool okay, const char* law,
                    std::initializer_list<Scalar> vals, const char* detail) {
    ++report.cases_checked;
    if (!okay) report.add(law, witness(vals), detail);
  };

  if (equal(zero(), one()))
    report.add("non-triviality", {}, "0 and 1 coincide");
  ++report.cases_checked;

  for (int s = 0; s < samples; ++s) {
    Scalar a = draw(), b = draw(), c = draw();
    expect(eq(add(a, b), add(b, a)), "add-commutativity", {a, b},
           "a+b != b+a");
    expect(eq(add(add(a, b), c), add(a, add(b, c))), "add-associativity",
           {a, b, c}, "(a+b)+c != a+(b+c)");
    expect(eq(mul(a, b), mul(b, a)), "mul-commutativity", {a, b},
           "a*b != b*a");
    expect(eq(mul(mul(a, b), c), mul(a, mul(b, c))), "mul-associativity",
           {a, b, c}, "(a*b)*c != a*(b*c)");
    expect(eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c))), "distributivity",
           {a, b, c}, "a*(b+c) != a*b+a*c");
    expect(eq(add(a, zero()), a), "additive-identity", {a}, "a+0 != a");
    expect(eq(mul(a, one()), a), "multiplicative-identity", {a}, "a*1 != a");
    expect(eq(add(a, neg(a)), zero()), "additive-inverse", {a},
           "a+(-a) != 0");
    if (!is_zero(a))
      expect(eq(mul(a, invert(a)), one()), "multiplicative-inverse", {a},
             "a*a^-1 != 1");
  }
  return report;
}

}  // namespace qcalc
