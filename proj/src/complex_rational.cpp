#include "qcalc/complex_rational.hpp"

#include <utility>
#include <vector>

#include "qcalc/errors.hpp"

namespace qcalc {

ComplexRational ComplexRational::inverse() const {
  if (is_zero()) throw ZeroInverseError("inverse of zero");
  Rational n = norm();
  return {re / n, -im / n};
}

std::string ComplexRational::to_string() const {
  if (im.is_zero()) return re.to_string();
  std::string imag;
  Rational mag = im.abs();
  imag = mag.is_one() ? "i" : mag.to_string() + "i";
  if (re.is_zero()) return (im.sign() < 0 ? "-" : "") + imag;
  return re.to_string() + (im.sign() < 0 ? "-" : "+") + imag;
}

namespace {

using ZPair = std::pair<mpz_class, mpz_class>;  // x + y*i over Z

ZPair zmul(const ZPair& a, const ZPair& b) {
  return {a.first * b.first - a.second * b.second,
          a.first * b.second + a.second * b.first};
}

ZPair zpow(ZPair base, unsigned n) {
  ZPair acc{1, 0};
  while (n > 0) {
    if (n & 1u) acc = zmul(acc, base);
    base = zmul(base, base);
    n >>= 1u;
  }
  return acc;
}

bool lex_less(const ComplexRational& a, const ComplexRational& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

std::optional<ComplexRational> pick_canonical(
    const std::vector<ComplexRational>& roots) {
  if (roots.empty()) return std::nullopt;
  ComplexRational best = roots[0];
  for (const auto& r : roots)
    if (lex_less(best, r)) best = r;
  return best;
}

// Roots of w when w lies on the real or imaginary axis. Any root z then
// satisfies (z/conj(z))^(2n) == 1, and the only roots of unity in Q(i) are
// {1, -1, i, -i}, so z is a rational multiple of one of the four directions
// 1, i, 1+i, 1-i. Solving c^n * u^n == w for rational c along each direction
// u enumerates every root.
std::optional<ComplexRational> axis_nth_root(const ComplexRational& w,
                                             unsigned n) {
  static const ZPair kDirections[] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  std::vector<ComplexRational> roots;
  for (const auto& u : kDirections) {
    ZPair un = zpow(u, n);
    ComplexRational ucn{Rational(un.first, mpz_class(1)),
                        Rational(un.second, mpz_class(1))};
    ComplexRational q = w / ucn;
    if (!q.im.is_zero()) continue;
    auto c = rational_nth_root(q.re, n);
    if (!c) continue;
    ComplexRational dir{Rational(u.first, mpz_class(1)),
                        Rational(u.second, mpz_class(1))};
    ComplexRational z{*c * dir.re, *c * dir.im};
    roots.push_back(z);
    if (n % 2 == 0 && !z.is_zero()) roots.push_back(-z);
  }
  return pick_canonical(roots);
}

// Square root of w with both components nonzero. (c+di)^2 = a+bi forces
// s = sqrt(a^2+b^2) and c^2 = (a+s)/2 rational, d = b/(2c); the conjugate
// branch (a-s)/2 is negative, so this is the only family.
std::optional<ComplexRational> general_sqrt(const ComplexRational& w) {
  auto s = rational_nth_root(w.norm(), 2);
  if (!s) return std::nullopt;
  Rational half(1, 2);
  auto c = rational_nth_root((w.re + *s) * half, 2);
  if (!c || c->is_zero()) return std::nullopt;
  Rational d = w.im / (Rational(2) * *c);
  // Roots are +/-(c+di); c > 0 makes this one the lex-greater.
  return ComplexRational{*c, d};
}

// General case, n >= 3, both components nonzero. Clear denominators: with
// C a common denominator of w, any root z gives (z*C)^n = w*C^n =: V in
// Z[i], and z*C is integral over Z[i], hence in Z[i]. Candidates G have
// norm(G) equal to the exact integer nth root of norm(V); enumerate the
// lattice points of that circle and keep those with G^n == V.
std::optional<ComplexRational> general_nth_root(const ComplexRational& w,
                                                unsigned n) {
  mpz_class c_den;
  mpz_lcm(c_den.get_mpz_t(), w.re.den().get_mpz_t(), w.im.den().get_mpz_t());
  mpz_class a_num = w.re.num() * (c_den / w.re.den());
  mpz_class b_num = w.im.num() * (c_den / w.im.den());
  mpz_class cn1;
  mpz_pow_ui(cn1.get_mpz_t(), c_den.get_mpz_t(), n - 1);
  ZPair v{a_num * cn1, b_num * cn1};
  mpz_class v_norm = v.first * v.first + v.second * v.second;
  auto t = exact_int_root(v_norm, n);
  if (!t) return std::nullopt;

  std::vector<ComplexRational> roots;
  mpz_class x_max;
  mpz_sqrt(x_max.get_mpz_t(), t->get_mpz_t());
  for (mpz_class x = 0; x <= x_max; ++x) {
    mpz_class y2 = *t - x * x;
    if (mpz_perfect_square_p(y2.get_mpz_t()) == 0) continue;
    mpz_class y;
    mpz_sqrt(y.get_mpz_t(), y2.get_mpz_t());
    std::vector<ZPair> candidates{{x, y}};
    if (sgn(y) != 0) candidates.push_back({x, -y});
    if (sgn(x) != 0) {
      candidates.push_back({-x, y});
      if (sgn(y) != 0) candidates.push_back({-x, -y});
    }
    for (const auto& g : candidates) {
      if (zpow(g, n) != v) continue;
      roots.push_back(ComplexRational{Rational(g.first, c_den),
                                      Rational(g.second, c_den)});
    }
  }
  return pick_canonical(roots);
}

}  // namespace

std::optional<ComplexRational> complex_nth_root(const ComplexRational& w,
                                                unsigned n) {
  if (n == 0) throw Error("0th root");
  if (n == 1) return w;
  if (w.is_zero()) return ComplexRational{};
  if (w.re.is_zero() || w.im.is_zero()) return axis_nth_root(w, n);
  if (n == 2) return general_sqrt(w);
  return general_nth_root(w, n);
}

}  // namespace qcalc
