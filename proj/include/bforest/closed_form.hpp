#pragma once

// Spectral polynomials of a bicirculant graph and the exact tree count built
// from integer resultants, plus a floating evaluation of the product formula
// over the roots of the Chebyshev transforms as an independent cross-check.

#include <sstream>
#include <string>
#include <vector>

#include "bforest/laurent.hpp"
#include "bforest/model.hpp"
#include "bforest/polynomial.hpp"
#include "bforest/roots.hpp"

namespace bforest {

struct SpectralSystem {
  Family family = Family::One;
  long s = 0;
  SymmetricLaurentPoly A;           // 2r + s - sum (z^a + z^-a)
  SymmetricLaurentPoly B;           // 2t + s - sum (z^b + z^-b)
  IntPoly spoke;                    // C(z) = sum z^g
  SymmetricLaurentPoly spoke_norm;  // C(1/z) C(z)
  SymmetricLaurentPoly P1;
  SymmetricLaurentPoly Pj;  // equals P1 for family 1
  int k = 0;                // degree of P1
  int kj = 0;               // degree of Pj
  Integer a_k;              // leading coefficient of P1
  Integer lead_j;           // leading coefficient of Pj (b_k, c_k or d_k)
  Integer q;                // s sum a^2 + s sum b^2 + sum_{j<i} (g_j - g_i)^2
};

namespace detail {

inline SymmetricLaurentPoly vertex_factor(long count, long s, const std::vector<long>& steps) {
  SymmetricLaurentPoly p = SymmetricLaurentPoly::constant(Integer(2 * count + s));
  for (long a : steps) p = p - SymmetricLaurentPoly::cosine(static_cast<std::size_t>(a));
  return p;
}

}  // namespace detail

inline SpectralSystem spectral_system(const ConnectionSpec& spec) {
  SpectralSystem sys;
  sys.family = classify_family(spec);
  sys.s = spec.s();
  sys.A = detail::vertex_factor(spec.r(), spec.s(), spec.alphas());
  sys.B = detail::vertex_factor(spec.t(), spec.s(), spec.betas());

  const auto& gs = spec.gammas();
  std::vector<Integer> sc(gs.empty() ? 0 : static_cast<std::size_t>(gs.back()) + 1, Integer(0));
  for (long g : gs) sc[static_cast<std::size_t>(g)] += 1;
  sys.spoke = IntPoly(std::move(sc));

  // eta_d counts ordered spoke pairs at distance d
  std::vector<Integer> eta(gs.empty() ? 0 : static_cast<std::size_t>(gs.back() - gs.front()) + 1, Integer(0));
  if (!eta.empty()) eta[0] = Integer(spec.s());
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) eta[static_cast<std::size_t>(gs[j] - gs[i])] += 1;
  sys.spoke_norm = SymmetricLaurentPoly(std::move(eta));

  const auto two = SymmetricLaurentPoly::constant(2);
  sys.P1 = sys.A * sys.B - sys.spoke_norm;
  switch (sys.family) {
    case Family::One: sys.Pj = sys.P1; break;
    case Family::Two: sys.Pj = (sys.A + two) * sys.B - sys.spoke_norm; break;
    case Family::Three: sys.Pj = sys.A * (sys.B + two) - sys.spoke_norm; break;
    case Family::Four: sys.Pj = (sys.A + two) * (sys.B + two) - sys.spoke_norm; break;
  }
  sys.k = sys.P1.degree();
  sys.kj = sys.Pj.degree();
  sys.a_k = sys.P1.is_zero() ? Integer(0) : sys.P1.lead();
  sys.lead_j = sys.Pj.is_zero() ? Integer(0) : sys.Pj.lead();

  Integer q = 0;
  for (long a : spec.alphas()) q += Integer(spec.s()) * Integer(a) * Integer(a);
  for (long b : spec.betas()) q += Integer(spec.s()) * Integer(b) * Integer(b);
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) q += Integer(gs[j] - gs[i]) * Integer(gs[j] - gs[i]);
  sys.q = q;
  return sys;
}

struct DegeneracyReport {
  Integer p1_at_1;
  Integer dp1_at_1;
  Integer ddp1_at_1;
  Integer q;
};

/// P1(1), P1'(1), P1''(1) and q; throws DegenerateSystem unless P1''(1) = -2q < 0.
inline DegeneracyReport degeneracy_report(const SpectralSystem& sys) {
  DegeneracyReport r{sys.P1.value_at_one(), sys.P1.first_derivative_at_one(),
                     sys.P1.second_derivative_at_one(), sys.q};
  if (r.p1_at_1 != 0 || r.ddp1_at_1 != -2 * sys.q || sys.q <= 0)
    throw Error(Errc::DegenerateSystem, "P1 = " + sys.P1.to_string() + " lacks the double root at z = 1 with P1''(1) = -2q");
  return r;
}

enum class CountMethod { ResultantExact, ChebyshevFloat, Oracle };

inline const char* to_string(CountMethod m) noexcept {
  switch (m) {
    case CountMethod::ResultantExact: return "resultant-exact";
    case CountMethod::ChebyshevFloat: return "chebyshev-float";
    case CountMethod::Oracle: return "oracle";
  }
  return "?";
}

struct TreeCount {
  Integer tau;
  CountMethod method = CountMethod::ResultantExact;
  std::vector<Integer> parts;  // the resultant magnitudes entering tau
};

/// z^k P1 / (z - 1)^2, the part of P1 left after removing its double root at 1.
inline IntPoly reduced_p1(const SpectralSystem& sys) {
  if (sys.P1.is_zero()) throw Error(Errc::DegenerateSystem, "P1 vanishes identically");
  return exact_divide(sys.P1.shifted(), IntPoly{Integer(1), Integer(-2), Integer(1)});
}

/// The closed formula at group order n, without any connectivity check.
///
/// Defined for every n >= 1 in family 1 and every even n in families 2-4, so
/// it also yields the formal small-n terms of the tau sequence.
inline TreeCount closed_form_tau(const SpectralSystem& sys, long n) {
  if (n < 1) throw Error(Errc::OutOfRange, "n must be positive");
  TreeCount out;
  const Integer ns = Integer(n) * Integer(sys.s);
  if (sys.family == Family::One) {
    Integer r1 = 1;
    if (n > 1) r1 = abs_int(resultant_with_cyclotomic_quotient(reduced_p1(sys), static_cast<unsigned long>(n)));
    out.parts = {r1};
    out.tau = ns * r1;
    return out;
  }
  if (n % 2 != 0) throw Error(Errc::HalfWithoutEvenN, "families 2-4 need even n, got " + std::to_string(n));
  const auto m = static_cast<unsigned long>(n / 2);
  // Res(z^m + 1, z^kj Pj) up to sign, through Res(z^kj Pj, z^m - (-1)).
  const Integer rj = abs_int(resultant_with_binomial(sys.Pj.shifted(), m, Integer(-1)));
  Integer r1 = 1;
  if (m > 1) r1 = abs_int(resultant_with_cyclotomic_quotient(reduced_p1(sys), m));
  out.parts = {rj, r1};
  out.tau = exact_quotient(ns * rj * r1, 4, Errc::NonIntegralResult);
  return out;
}

/// Exact tau through integer resultants; the input must describe a connected graph.
inline TreeCount tree_count_closed(const ConnectionSpec& spec) {
  if (spec.s() == 0 || !is_connected(spec))
    throw Error(Errc::NotConnected, "the realization is disconnected");
  TreeCount out = closed_form_tau(spectral_system(spec), spec.n());
  if (out.tau < 1) throw Error(Errc::NonIntegralResult, "closed form gave tau = 0 on a connected graph");
  return out;
}

/// Floating value of tau with a first-order relative error bound.
struct FloatCount {
  std::string value;  // decimal, scientific notation
  long double approx = 0;
  long double relative_error_bound = 0;
  unsigned digits = 0;
};

namespace detail {

// One factor z^m + z^-m + shift (= 2 T_m(w) + shift) with w = (z + 1/z) / 2,
// together with an estimate of |d log(factor) / dw|.
template <unsigned D>
void chebyshev_factor(const Complex<D>& w, unsigned long m, int shift, Real<D>& modulus, Real<D>& log_slope) {
  Complex<D> root = sqrt(w * w - Complex<D>(1));
  Complex<D> z = w + root;
  if (abs(z) < 1) z = w - root;
  const Complex<D> lz = log(z);
  const Complex<D> zm = exp(lz * Complex<D>(static_cast<long>(m)));
  const Complex<D> zmi = Complex<D>(1) / zm;
  const Complex<D> f = zm + zmi + Complex<D>(shift);
  modulus = abs(f);
  const Complex<D> gap = z - Complex<D>(1) / z;
  const Real<D> gm = abs(gap);
  // 2 T_m'(w) = 2m (z^m - z^-m) / (z - 1/z); near w = +-1 use |T_m'| <= m^2.
  Real<D> slope = gm > 0 ? Real<D>(2 * static_cast<long>(m)) * abs(zm - zmi) / gm
                         : Real<D>(2) * Real<D>(static_cast<long>(m)) * Real<D>(static_cast<long>(m));
  log_slope = modulus > 0 ? slope / modulus : Real<D>(1);
}

template <unsigned D>
FloatCount chebyshev_count(const SpectralSystem& sys, long n) {
  using std::abs;
  const Real<D> eps = pow(Real<D>(10), -Real<D>(static_cast<long>(D) - 4));
  Real<D> value = to_real<D>(Integer(Integer(n) * Integer(sys.s))) / to_real<D>(sys.q);
  Real<D> err = 0;
  std::size_t factors = 0;

  auto apply = [&](const IntPoly& k_poly, unsigned long m, int shift) {
    if (k_poly.degree() < 1) return;
    for (const auto& r : aberth_roots<D>(k_poly)) {
      Real<D> mod, slope;
      chebyshev_factor<D>(r.value, m, shift, mod, slope);
      value *= mod;
      err += slope * r.radius + eps * Real<D>(static_cast<long>(m)) * (1 + abs(r.value));
      ++factors;
    }
  };

  const IntPoly k1 = exact_divide(chebyshev_transform(sys.P1), IntPoly{Integer(-1), Integer(1)});
  if (sys.family == Family::One) {
    value *= pow(abs(to_real<D>(sys.a_k)), Real<D>(n));
    apply(k1, static_cast<unsigned long>(n), -2);
  } else {
    const auto m = static_cast<unsigned long>(n / 2);
    value /= 4;
    value *= pow(abs(to_real<D>(sys.a_k)) * abs(to_real<D>(sys.lead_j)), Real<D>(static_cast<long>(m)));
    apply(chebyshev_transform(sys.Pj), m, 2);
    apply(k1, m, -2);
  }
  err += eps * Real<D>(static_cast<long>(factors + 4));

  FloatCount out;
  std::ostringstream os;
  os.precision(static_cast<std::streamsize>(D - 8));
  os << std::scientific << value;
  out.value = os.str();
  out.approx = static_cast<long double>(value);
  out.relative_error_bound = static_cast<long double>(err);
  out.digits = D;
  return out;
}

}  // namespace detail

/// Product formula over the roots of the Chebyshev transforms of P1 and Pj,
/// at `digits` decimal digits (rounded up to a tier).
inline FloatCount tree_count_chebyshev(const ConnectionSpec& spec, unsigned digits = 64) {
  if (spec.s() == 0 || !is_connected(spec))
    throw Error(Errc::NotConnected, "the realization is disconnected");
  const SpectralSystem sys = spectral_system(spec);
  if (sys.P1.is_zero()) {
    // No alphas, betas or extra spokes: K2, or n = 2 with halves. The count is
    // tiny, take it exactly.
    const Integer tau = closed_form_tau(sys, spec.n()).tau;
    FloatCount out;
    out.value = tau.get_str();
    out.approx = static_cast<long double>(tau.get_d());
    out.digits = precision_tier(digits);
    return out;
  }
  return with_precision(digits, [&](auto tag) {
    constexpr unsigned P = decltype(tag)::value;
    return detail::chebyshev_count<P>(sys, spec.n());
  });
}

/// |estimate - tau| / tau evaluated at 256 digits.
inline long double relative_deviation(const FloatCount& est, const Integer& tau) {
  const Real<256> v(est.value);
  const Real<256> t = to_real<256>(tau);
  return static_cast<long double>(abs(v - t) / t);
}

}  // namespace bforest
