#pragma once

// Scalar types shared by every module: exact integers and rationals backed by
// GMP, and fixed-precision binary floats for the numeric cross-checks.

#include <gmpxx.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>

#include "bforest/errors.hpp"

namespace bforest {

using Integer = mpz_class;
using Rational = mpq_class;

template <unsigned Digits>
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>,
                                           boost::multiprecision::et_off>;

template <unsigned Digits>
using Complex = boost::multiprecision::cpp_complex<Digits>;

/// Working precisions (decimal digits) available to the numeric paths.
/// Requests are rounded up to the next tier.
inline constexpr unsigned kPrecisionTiers[] = {64, 128, 256};
inline constexpr unsigned kMinPrecision = 32;
inline constexpr unsigned kMaxPrecision = 256;

inline unsigned precision_tier(unsigned digits) {
  if (digits < kMinPrecision || digits > kMaxPrecision)
    throw Error(Errc::InvalidArgument,
                "precision must be in [32, 256] digits, got " + std::to_string(digits));
  for (unsigned t : kPrecisionTiers)
    if (digits <= t) return t;
  return kMaxPrecision;
}

/// Invoke `fn(std::integral_constant<unsigned, D>{})` with D the tier for `digits`.
template <class Fn>
decltype(auto) with_precision(unsigned digits, Fn&& fn) {
  switch (precision_tier(digits)) {
    case 64: return fn(std::integral_constant<unsigned, 64>{});
    case 128: return fn(std::integral_constant<unsigned, 128>{});
    default: return fn(std::integral_constant<unsigned, 256>{});
  }
}

template <unsigned D>
Real<D> to_real(const Integer& z) {
  if (z.fits_slong_p()) return Real<D>(z.get_si());
  return Real<D>(z.get_str());
}

template <unsigned D>
Real<D> to_real(const Rational& q) {
  return to_real<D>(q.get_num()) / to_real<D>(q.get_den());
}

inline Integer abs_int(const Integer& z) { return z < 0 ? Integer(-z) : z; }

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Rational pow_rat(const Rational& base, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

inline bool divides(const Integer& d, const Integer& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// n / d, throwing `code` when d does not divide n.
inline Integer exact_quotient(const Integer& n, const Integer& d, Errc code = Errc::InexactDivision) {
  if (d == 0 || !divides(d, n))
    throw Error(code, n.get_str() + " is not divisible by " + d.get_str());
  Integer q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// Floor of the square root by Newton iteration.
inline Integer isqrt(const Integer& u) {
  if (u < 0) throw Error(Errc::InvalidArgument, "isqrt of a negative integer");
  if (u < 2) return u;
  // Start above the root: 2^ceil(bits/2) > sqrt(u).
  Integer x = Integer(1) << static_cast<mp_bitcnt_t>((mpz_sizeinbase(u.get_mpz_t(), 2) + 1) / 2);
  for (;;) {
    Integer y = (x + u / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

/// Returns the root when u is a perfect square.
inline bool exact_isqrt(const Integer& u, Integer& root) {
  if (u < 0) return false;
  root = isqrt(u);
  return root * root == u;
}

/// The unique square-free v with u = v * r^2.
inline Integer squarefree_part(const Integer& u) {
  if (u < 1) throw Error(Errc::InvalidArgument, "squarefree_part needs u >= 1, got " + u.get_str());
  Integer rest = u;
  Integer v = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    unsigned mult = 0;
    while (divides(p, rest)) {
      rest /= p;
      ++mult;
    }
    if (mult % 2 == 1) v *= p;
  }
  return v * rest;
}

inline Integer gcd_int(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm_int(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace bforest
