#pragma once

// Dense univariate polynomials over Z and Q, with the exact operations the
// counting formulas rely on: pseudo-division, subresultant resultants,
// reduction of x^n modulo a fixed polynomial, and Chebyshev polynomials.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bforest/numeric.hpp"

namespace bforest {

/// Coefficients are stored lowest degree first. The zero polynomial has no
/// coefficients and degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }

  static Polynomial monomial(const T& v, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = v;
    return Polynomial(std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const T& lead() const { return c_.back(); }
  const std::vector<T>& coeffs() const noexcept { return c_; }

  /// Coefficient of x^i; zero past the degree.
  T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

  template <class U>
  U eval(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  /// x^deg * p(1/x) with deg the current degree.
  Polynomial reversed() const {
    std::vector<T> r(c_.rbegin(), c_.rend());
    return Polynomial(std::move(r));
  }

  /// p(scale * x).
  Polynomial scaled_argument(const T& scale) const {
    std::vector<T> r(c_);
    T f(1);
    for (auto& v : r) {
      v *= f;
      f *= scale;
    }
    return Polynomial(std::move(r));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Human-readable form in the variable `var`, highest degree first.
  std::string to_string(const char* var = "z") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const T& v = c_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      T mag = v < 0 ? T(-v) : v;
      if (!first) os << (v < 0 ? " - " : " + ");
      else if (v < 0) os << "-";
      if (mag != 1 || i == 0) os << mag;
      if (i >= 1) os << var;
      if (i > 1) os << "^" << i;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

/// Clears denominators: returns (P, d) with p = P / d, d > 0 minimal.
inline std::pair<IntPoly, Integer> clear_denominators(const RatPoly& p) {
  Integer d = 1;
  for (const auto& v : p.coeffs()) d = lcm_int(d, v.get_den());
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(v.get_num() * (d / v.get_den()));
  return {IntPoly(std::move(c)), d};
}

/// Integer polynomial when every coefficient is integral.
inline bool to_integer(const RatPoly& p, IntPoly& out) {
  std::vector<Integer> c;
  for (const auto& v : p.coeffs()) {
    if (!is_integral(v)) return false;
    c.push_back(v.get_num());
  }
  out = IntPoly(std::move(c));
  return true;
}

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rational> rem(a.coeffs());
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const Rational& lb = b.lead();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / lb;
    quo[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

inline RatPoly mod(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

/// Monic gcd over Q (zero when both inputs are zero).
inline RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * Rational(1 / a.lead());
}

inline Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& v : p.coeffs()) g = gcd_int(g, v);
  return g;
}

/// p / content(p), sign chosen so the leading coefficient is positive.
inline IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.lead() < 0) g = -g;
  std::vector<Integer> c;
  for (const auto& v : p.coeffs()) c.push_back(exact_quotient(v, g));
  return IntPoly(std::move(c));
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed over Z.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(Errc::ZeroPolynomial, "pseudo-division by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r(a.coeffs());
  const auto db = static_cast<std::size_t>(b.degree());
  const Integer& lb = b.lead();
  // One multiplication by lb per eliminated position, deg a - deg b + 1 in total.
  for (std::size_t i = r.size(); i-- > db;) {
    Integer f = r[i];
    for (std::size_t j = 0; j <= i; ++j) r[j] *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return IntPoly(std::move(r));
}

/// Quotient f / g; throws InexactDivision unless g divides f over Z.
inline IntPoly exact_divide(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw Error(Errc::ZeroPolynomial, "exact_divide by the zero polynomial");
  auto [q, r] = divmod(to_rational(f), to_rational(g));
  IntPoly out;
  if (!r.is_zero() || !to_integer(q, out))
    throw Error(Errc::InexactDivision, "(" + f.to_string() + ") / (" + g.to_string() + ")");
  return out;
}

/// 1 + z + ... + z^(n-1).
inline IntPoly cyclotomic_quotient(unsigned long n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "cyclotomic_quotient needs n >= 1");
  return IntPoly(std::vector<Integer>(n, Integer(1)));
}

/// Resultant by the subresultant pseudo-remainder sequence.
///
/// Convention: Res(f, g) = lc(f)^deg g * prod over roots x of f of g(x), which
/// is the determinant of the Sylvester matrix with f's rows first.
inline Integer resultant(IntPoly a, IntPoly b) {
  if (a.is_zero() || b.is_zero()) throw Error(Errc::ZeroPolynomial, "resultant of a zero polynomial");
  if (a.degree() == 0) return pow_int(a.lead(), static_cast<unsigned long>(b.degree()));
  if (b.degree() == 0) return pow_int(b.lead(), static_cast<unsigned long>(a.degree()));

  const Integer ca = content(a);
  const Integer cb = content(b);
  Integer t = pow_int(ca, static_cast<unsigned long>(b.degree())) *
              pow_int(cb, static_cast<unsigned long>(a.degree()));
  {
    std::vector<Integer> c;
    for (const auto& v : a.coeffs()) c.push_back(exact_quotient(v, ca));
    a = IntPoly(std::move(c));
    c.clear();
    for (const auto& v : b.coeffs()) c.push_back(exact_quotient(v, cb));
    b = IntPoly(std::move(c));
  }

  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
  }

  Integer g = 1;
  Integer h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    Integer divisor = g * pow_int(h, static_cast<unsigned long>(delta));
    {
      std::vector<Integer> c;
      for (const auto& v : r.coeffs()) c.push_back(exact_quotient(v, divisor));
      b = IntPoly(std::move(c));
    }
    g = a.lead();
    // h <- g^delta / h^(delta - 1); unchanged when delta == 0
    if (delta > 0)
      h = exact_quotient(pow_int(g, static_cast<unsigned long>(delta)),
                         pow_int(h, static_cast<unsigned long>(delta - 1)));
    if (b.degree() == 0) break;
  }
  // h <- lc(b)^deg a / h^(deg a - 1)
  const auto da = static_cast<unsigned long>(a.degree());
  h = exact_quotient(pow_int(b.lead(), da), pow_int(h, da - 1));
  return Integer(s) * t * h;
}

/// x^e mod m over Q by square-and-multiply; m must have positive degree.
inline RatPoly power_of_x_mod(unsigned long e, const RatPoly& m) {
  if (m.degree() < 1) throw Error(Errc::InvalidArgument, "modulus must have positive degree");
  RatPoly result = mod(RatPoly::constant(Rational(1)), m);
  RatPoly base = mod(RatPoly::monomial(Rational(1), 1), m);
  while (e > 0) {
    if (e & 1UL) result = mod(result * base, m);
    e >>= 1;
    if (e > 0) base = mod(base * base, m);
  }
  return result;
}

/// Res(g, z^n - c), computed by reducing z^n modulo g first so the cost
/// grows with log n rather than with the size of a Sylvester matrix.
inline Integer resultant_with_binomial(const IntPoly& g, unsigned long n, const Integer& c) {
  if (g.is_zero()) throw Error(Errc::ZeroPolynomial, "resultant of a zero polynomial");
  if (n == 0) throw Error(Errc::InvalidArgument, "binomial degree must be positive");
  if (g.degree() == 0) return pow_int(g.lead(), n);
  const RatPoly gq = to_rational(g);
  RatPoly r = power_of_x_mod(n, gq) - RatPoly::constant(Rational(c));
  if (r.is_zero()) return 0;
  auto [big_r, d] = clear_denominators(r);
  // Res(g, f) = lc(g)^(deg f - deg r) Res(g, r) and Res(g, R) = d^deg g Res(g, r).
  const Integer rg = resultant(g, big_r);
  const auto gap = static_cast<unsigned long>(static_cast<long>(n) - big_r.degree());
  Rational out(pow_int(g.lead(), gap) * rg, pow_int(d, static_cast<unsigned long>(g.degree())));
  out.canonicalize();
  if (!is_integral(out)) throw Error(Errc::NonIntegralResult, "binomial resultant is not an integer");
  return out.get_num();
}

/// Res(g, 1 + z + ... + z^(n-1)) via Res(g, z^n - 1) / Res(g, z - 1).
inline Integer resultant_with_cyclotomic_quotient(const IntPoly& g, unsigned long n) {
  if (g.is_zero()) throw Error(Errc::ZeroPolynomial, "resultant of a zero polynomial");
  if (n == 1) return 1;
  const Integer at_one = resultant(g, IntPoly{Integer(-1), Integer(1)});
  if (at_one == 0) return resultant(g, cyclotomic_quotient(n));
  return exact_quotient(resultant_with_binomial(g, n, 1), at_one, Errc::NonIntegralResult);
}

/// T_n(x) by powering [[2x, -1], [1, 0]] applied to (T_1, T_0) = (x, 1).
template <class T>
T chebyshev_T(unsigned long n, const T& x) {
  if (n == 0) return T(1);
  // M^(n-1) * (x, 1)^T gives (T_n, T_{n-1}).
  T m00 = 2 * x, m01 = T(-1), m10 = T(1), m11 = T(0);
  T r00 = T(1), r01 = T(0), r10 = T(0), r11 = T(1);
  unsigned long e = n - 1;
  while (e > 0) {
    if (e & 1UL) {
      T a = r00 * m00 + r01 * m10, b = r00 * m01 + r01 * m11;
      T c = r10 * m00 + r11 * m10, d = r10 * m01 + r11 * m11;
      r00 = a, r01 = b, r10 = c, r11 = d;
    }
    e >>= 1;
    if (e > 0) {
      T a = m00 * m00 + m01 * m10, b = m00 * m01 + m01 * m11;
      T c = m10 * m00 + m11 * m10, d = m10 * m01 + m11 * m11;
      m00 = a, m01 = b, m10 = c, m11 = d;
    }
  }
  return r00 * x + r01;
}

/// T_n as an integer polynomial in w.
inline IntPoly chebyshev_polynomial(unsigned long n) {
  IntPoly prev{Integer(1)};
  if (n == 0) return prev;
  IntPoly cur{Integer(0), Integer(1)};
  const IntPoly two_w{Integer(0), Integer(2)};
  for (unsigned long i = 1; i < n; ++i) {
    IntPoly next = two_w * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// True when coefficients read the same backwards (self-reciprocal), or the
/// same up to a global sign (anti-reciprocal).
inline bool is_reciprocal(const IntPoly& p) {
  if (p.is_zero()) return true;
  const IntPoly r = p.reversed();
  return r == p || r == -p;
}

}  // namespace bforest
