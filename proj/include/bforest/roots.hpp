#pragma once

// Simultaneous root finding (Aberth-Ehrlich) at fixed binary precision, with
// a posteriori inclusion radii from the Weierstrass corrections.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "bforest/polynomial.hpp"

namespace bforest {

enum class CircleLocation { Inside, Outside, OnCircle };

inline const char* to_string(CircleLocation c) noexcept {
  switch (c) {
    case CircleLocation::Inside: return "inside";
    case CircleLocation::Outside: return "outside";
    case CircleLocation::OnCircle: return "on-circle";
  }
  return "?";
}

template <unsigned D>
struct Root {
  Complex<D> value;
  Real<D> radius;  // disc of this radius around `value` holds a true root
  CircleLocation location = CircleLocation::OnCircle;
};

namespace detail {

template <unsigned D>
CircleLocation classify(const Complex<D>& z, const Real<D>& radius) {
  const Real<D> m = abs(z);
  if (m - radius > 1) return CircleLocation::Outside;
  if (m + radius < 1) return CircleLocation::Inside;
  return CircleLocation::OnCircle;
}

template <unsigned D>
void horner(const std::vector<Real<D>>& c, const Complex<D>& z, Complex<D>& p, Complex<D>& dp) {
  p = Complex<D>(0);
  dp = Complex<D>(0);
  for (std::size_t i = c.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + Complex<D>(c[i]);
  }
}

}  // namespace detail

/// All complex roots of f (with multiplicity), each with an inclusion radius.
///
/// Multiple roots converge only to about half the working precision; their
/// radii reflect that, so a double root on the unit circle is reported as
/// OnCircle rather than misclassified.
template <unsigned D>
std::vector<Root<D>> aberth_roots(const IntPoly& f, unsigned max_iterations = 4000) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<Root<D>> out;
  std::size_t low = 0;
  while (f.coeffs()[low] == 0) ++low;
  for (std::size_t i = 0; i < low; ++i) out.push_back({Complex<D>(0), Real<D>(0), CircleLocation::Inside});

  std::vector<Real<D>> c;
  for (std::size_t i = low; i < f.coeffs().size(); ++i) c.push_back(to_real<D>(f.coeffs()[i]));
  const std::size_t d = c.size() - 1;
  if (d == 0) return out;

  using std::abs;
  using std::pow;
  const Real<D> pi = boost::math::constants::pi<Real<D>>();
  const Real<D> rho = pow(abs(c[0] / c[d]), Real<D>(1) / Real<D>(static_cast<long>(d)));
  std::vector<Complex<D>> z(d);
  for (std::size_t j = 0; j < d; ++j) {
    const Real<D> angle = 2 * pi * Real<D>(static_cast<long>(j)) / Real<D>(static_cast<long>(d)) + Real<D>(0.4);
    // Slightly uneven radii break symmetric stalls on self-reciprocal inputs.
    const Real<D> r = rho * (1 + Real<D>(static_cast<long>(j)) / Real<D>(static_cast<long>(7 * d)));
    z[j] = Complex<D>(r * cos(angle), r * sin(angle));
  }

  const Real<D> tol = pow(Real<D>(10), -Real<D>(static_cast<long>(D) - 6));
  Real<D> best = -1;
  unsigned stall = 0;
  for (unsigned it = 0; it < max_iterations; ++it) {
    Real<D> worst = 0;
    for (std::size_t i = 0; i < d; ++i) {
      Complex<D> p, dp;
      detail::horner<D>(c, z[i], p, dp);
      if (p == Complex<D>(0)) continue;
      Complex<D> sum(0);
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) sum += Complex<D>(1) / (z[i] - z[j]);
      const Complex<D> newton = p / dp;
      const Complex<D> w = newton / (Complex<D>(1) - newton * sum);
      z[i] -= w;
      const Real<D> scale = abs(z[i]) > 1 ? abs(z[i]) : Real<D>(1);
      const Real<D> step = abs(w) / scale;
      if (step > worst) worst = step;
    }
    if (worst <= tol) break;
    if (best < 0 || worst < best / 2) {
      best = worst;
      stall = 0;
    } else if (++stall > 40) {
      break;  // clustered roots: corrections have hit the noise floor
    }
  }

  // Residual-based radii: the union of discs |x - z_i| <= d |W_i| holds all
  // roots, where W_i is the Weierstrass correction; rounding of p(z_i) is
  // folded into the residual.
  const Real<D> unit_roundoff = pow(Real<D>(10), -Real<D>(static_cast<long>(D) - 2));
  for (std::size_t i = 0; i < d; ++i) {
    Complex<D> p, dp;
    detail::horner<D>(c, z[i], p, dp);
    Real<D> magnitude_sum = 0;
    Real<D> zp = 1;
    const Real<D> az = abs(z[i]);
    for (std::size_t j = 0; j <= d; ++j) {
      magnitude_sum += abs(c[j]) * zp;
      zp *= az;
    }
    const Real<D> residual = abs(p) + Real<D>(static_cast<long>(2 * d + 2)) * unit_roundoff * magnitude_sum;
    Real<D> denom = abs(c[d]);
    for (std::size_t j = 0; j < d; ++j)
      if (j != i) denom *= abs(z[i] - z[j]);
    Real<D> radius = denom == 0 ? Real<D>(1) : Real<D>(static_cast<long>(d)) * residual / denom;
    out.push_back({z[i], radius, detail::classify<D>(z[i], radius)});
  }
  return out;
}

/// Low-precision view of a root for reporting.
struct NumericRoot {
  std::complex<long double> value;
  long double radius = 0;
  CircleLocation location = CircleLocation::OnCircle;
};

template <unsigned D>
NumericRoot to_numeric(const Root<D>& r) {
  return {std::complex<long double>(static_cast<long double>(r.value.real()),
                                    static_cast<long double>(r.value.imag())),
          static_cast<long double>(r.radius), r.location};
}

/// Roots of f at the requested precision (digits, rounded up to a tier).
/// With `require_classification`, roots whose disc meets the unit circle
/// trigger a retry at doubled precision, up to 256 digits, and then
/// UnitCircleAmbiguity.
inline std::vector<NumericRoot> roots_numeric(const IntPoly& f, unsigned digits = 64,
                                              bool require_classification = false) {
  for (unsigned tier = precision_tier(digits);; tier *= 2) {
    std::vector<NumericRoot> out;
    bool ambiguous = false;
    with_precision(tier, [&](auto tag) {
      constexpr unsigned P = decltype(tag)::value;
      for (const auto& r : aberth_roots<P>(f)) {
        out.push_back(to_numeric<P>(r));
        if (r.location == CircleLocation::OnCircle) ambiguous = true;
      }
    });
    if (!require_classification || !ambiguous) return out;
    if (tier >= kMaxPrecision)
      throw Error(Errc::UnitCircleAmbiguity,
                  "a root of " + f.to_string() + " cannot be separated from |z| = 1 at 256 digits");
  }
}

}  // namespace bforest
