#pragma once

// Mahler measures by root products and by quadrature of log|P| on the unit
// circle, and the exponential growth law of tau built on them.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "bforest/closed_form.hpp"
#include "bforest/laurent.hpp"
#include "bforest/model.hpp"
#include "bforest/roots.hpp"

namespace bforest {

enum class MahlerMethod { RootProduct, Quadrature };

inline const char* to_string(MahlerMethod m) noexcept {
  return m == MahlerMethod::RootProduct ? "root-product" : "quadrature";
}

struct MahlerEstimate {
  long double value = 0;
  long double error_bound = 0;  // absolute
  MahlerMethod method = MahlerMethod::RootProduct;
  std::string polynomial;
  std::string digits_value;  // full working precision, root-product only
};

namespace detail {

inline IntPoly strip_low_zeros(const IntPoly& p) {
  std::size_t low = 0;
  while (low < p.coeffs().size() && p.coeffs()[low] == 0) ++low;
  return IntPoly(std::vector<Integer>(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end()));
}

template <unsigned D>
struct RealMeasure {
  Real<D> value;
  Real<D> error;  // absolute
  bool ambiguous = false;
};

// |lc| * prod |outside roots|; roots whose disc meets the circle count as 1
// when `circle_ok`, otherwise they mark the result ambiguous.
template <unsigned D>
RealMeasure<D> outside_product(const IntPoly& p, bool circle_ok) {
  RealMeasure<D> out{abs(to_real<D>(p.lead())), Real<D>(0), false};
  if (p.degree() < 1) return out;
  Real<D> rel = 0;
  for (const auto& r : aberth_roots<D>(p)) {
    const Real<D> m = abs(r.value);
    switch (r.location) {
      case CircleLocation::Outside:
        out.value *= m;
        rel += r.radius / m;
        break;
      case CircleLocation::Inside:
        break;
      case CircleLocation::OnCircle:
        if (!circle_ok) out.ambiguous = true;
        rel += r.radius;
        break;
    }
  }
  out.error = out.value * rel;
  return out;
}

// Self-reciprocal part g = gcd(p, reversed p) and the rest h = p / g. Every
// unit-circle root of an integer polynomial lies in g, where roots come in
// pairs (x, 1/x), so a root of g that cannot be separated from the circle
// contributes a factor within its radius of 1.
template <unsigned D>
RealMeasure<D> root_product_real(const IntPoly& input) {
  const IntPoly p = strip_low_zeros(input);
  IntPoly g = IntPoly::constant(1);
  if (p.degree() >= 1) {
    const auto [gi, unused] = clear_denominators(gcd(to_rational(p), to_rational(p.reversed())));
    (void)unused;
    g = primitive_part(gi);
  }
  const IntPoly h = exact_divide(p, g);
  RealMeasure<D> mg = outside_product<D>(g, true);
  RealMeasure<D> mh = outside_product<D>(h, false);
  RealMeasure<D> out{mg.value * mh.value, mg.error * mh.value + mh.error * mg.value, mh.ambiguous};
  return out;
}

template <unsigned D>
std::string to_decimal(const Real<D>& v, unsigned digits) {
  std::ostringstream os;
  os.precision(static_cast<std::streamsize>(digits));
  os << v;
  return os.str();
}

}  // namespace detail

/// M(p) = |lc| * prod_{|x| > 1} |x| over the roots of p, at `digits` digits
/// with escalation to 256 before giving up with UnitCircleAmbiguity.
inline MahlerEstimate mahler_root_product(const IntPoly& p, unsigned digits = 64) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "Mahler measure of the zero polynomial");
  for (unsigned tier = precision_tier(digits);; tier *= 2) {
    MahlerEstimate out;
    bool ambiguous = false;
    with_precision(tier, [&](auto tag) {
      constexpr unsigned P = decltype(tag)::value;
      const auto m = detail::root_product_real<P>(p);
      ambiguous = m.ambiguous;
      out.value = static_cast<long double>(m.value);
      out.error_bound = static_cast<long double>(m.error);
      out.digits_value = detail::to_decimal<P>(m.value, P - 8);
    });
    if (!ambiguous) {
      out.method = MahlerMethod::RootProduct;
      out.polynomial = p.to_string();
      return out;
    }
    if (tier >= kMaxPrecision)
      throw Error(Errc::UnitCircleAmbiguity,
                  "a root of " + p.to_string() + " off the reciprocal part sits on |z| = 1 at 256 digits");
  }
}

/// Laurent input: z^k P has the same measure as P.
inline MahlerEstimate mahler_root_product(const SymmetricLaurentPoly& p, unsigned digits = 64) {
  MahlerEstimate out = mahler_root_product(p.shifted(), digits);
  out.polynomial = p.to_string();
  return out;
}

/// Phi_d for d >= 1.
inline IntPoly cyclotomic_polynomial(unsigned long d) {
  IntPoly out = IntPoly::monomial(Integer(1), d) - IntPoly::constant(1);
  for (unsigned long e = 1; e < d; ++e)
    if (d % e == 0) out = exact_divide(out, cyclotomic_polynomial(e));
  return out;
}

namespace detail {

// Removes every cyclotomic factor of p (their measure is 1); these carry the
// log singularities that would otherwise slow the quadrature down.
inline IntPoly deflate_cyclotomic(IntPoly p) {
  if (p.degree() < 1) return p;
  const auto bound = static_cast<unsigned long>(2 * p.degree() * p.degree() + 2);
  for (unsigned long d = 1; d <= bound && p.degree() >= 1; ++d) {
    const IntPoly phi = cyclotomic_polynomial(d);
    if (phi.degree() > p.degree()) continue;
    for (;;) {
      auto [q, r] = divmod(to_rational(p), to_rational(phi));
      IntPoly qi;
      if (!r.is_zero() || !to_integer(q, qi)) break;
      p = qi;
      if (p.degree() < phi.degree()) break;
    }
  }
  return p;
}

// Midpoint rule for (1/2pi) * integral of log|p(e^{i theta})|, fixed order.
inline long double log_mean(const std::vector<long double>& c, unsigned long points) {
  const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
  long double sum = 0;
  for (unsigned long j = 0; j < points; ++j) {
    const long double theta = two_pi * (static_cast<long double>(j) + 0.5L) / static_cast<long double>(points);
    const std::complex<long double> z(std::cos(theta), std::sin(theta));
    std::complex<long double> acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    sum += std::log(std::abs(acc));
  }
  return sum / static_cast<long double>(points);
}

}  // namespace detail

inline constexpr unsigned long kQuadratureCap = 1UL << 24;

/// exp of the mean of log|p| over the unit circle by the midpoint rule,
/// doubling the point count from `subdivisions` until successive values agree
/// within `tolerance` (in log scale). With `deflate`, cyclotomic factors are
/// divided out exactly first.
inline MahlerEstimate mahler_quadrature(const IntPoly& p, unsigned long subdivisions = 64,
                                        long double tolerance = 1e-12L, bool deflate = true) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "Mahler measure of the zero polynomial");
  if (subdivisions < 1) throw Error(Errc::InvalidArgument, "need at least one subdivision");
  IntPoly work = detail::strip_low_zeros(p);
  if (deflate) work = detail::deflate_cyclotomic(work);
  MahlerEstimate out;
  out.method = MahlerMethod::Quadrature;
  out.polynomial = p.to_string();
  if (work.degree() < 1) {
    out.value = std::fabs(static_cast<long double>(work.lead().get_d()));
    return out;
  }
  std::vector<long double> c;
  for (const auto& v : work.coeffs()) c.push_back(static_cast<long double>(v.get_d()));
  unsigned long points = subdivisions;
  long double prev = detail::log_mean(c, points);
  while (points < kQuadratureCap) {
    points *= 2;
    const long double cur = detail::log_mean(c, points);
    const long double diff = std::fabs(cur - prev);
    if (diff < tolerance) {
      out.value = std::exp(cur);
      out.error_bound = out.value * (diff + tolerance);
      return out;
    }
    prev = cur;
  }
  throw Error(Errc::NonConvergence, "quadrature for " + p.to_string() + " did not settle by 2^24 points");
}

inline MahlerEstimate mahler_quadrature(const SymmetricLaurentPoly& p, unsigned long subdivisions = 64,
                                        long double tolerance = 1e-12L, bool deflate = true) {
  MahlerEstimate out = mahler_quadrature(p.shifted(), subdivisions, tolerance, deflate);
  out.polynomial = p.to_string();
  return out;
}

/// Growth data of tau: family 1 uses A = M(P1) with exponent n; families 2-4
/// use M(Pj P1) with exponent n/2.
struct GrowthLaw {
  Family family = Family::One;
  Integer s;
  Integer q;
  MahlerEstimate base;
  std::string base_polynomial;
};

inline GrowthLaw growth_law(const ConnectionSpec& spec, unsigned digits = 64) {
  const SpectralSystem sys = spectral_system(spec);
  if (sys.P1.is_zero() || sys.q <= 0) throw Error(Errc::DegenerateSystem, "P1 vanishes identically");
  GrowthLaw law;
  law.family = sys.family;
  law.s = sys.s;
  law.q = sys.q;
  const SymmetricLaurentPoly poly = sys.family == Family::One ? sys.P1 : sys.Pj * sys.P1;
  law.base = mahler_root_product(poly, digits);
  law.base_polynomial = poly.to_string();
  return law;
}

struct Prediction {
  std::string value;  // decimal, may exceed long double range
  long double log_value = 0;
};

struct ConvergenceRow {
  long n = 0;
  Integer tau;
  Prediction prediction;
  long double ratio = 0;      // tau / prediction
  long double deviation = 0;  // |ratio - 1|
};

namespace detail {

template <unsigned D>
Real<D> prediction_real(const GrowthLaw& law, long n) {
  const Real<D> base(law.base.digits_value);
  const Real<D> ns = Real<D>(n) * to_real<D>(law.s);
  if (law.family == Family::One) return ns / to_real<D>(law.q) * pow(base, Real<D>(n));
  return ns / (4 * to_real<D>(law.q)) * pow(base, Real<D>(n / 2));
}

}  // namespace detail

/// (n s / q) A^n for family 1 and (n s / 4q) M(Pj P1)^(n/2) for families 2-4.
inline Prediction asymptotic_prediction(const GrowthLaw& law, long n) {
  if (law.family != Family::One && n % 2 != 0)
    throw Error(Errc::HalfWithoutEvenN, "families 2-4 need even n");
  const Real<64> v = detail::prediction_real<64>(law, n);
  return {detail::to_decimal<64>(v, 40), static_cast<long double>(log(v))};
}

inline Prediction asymptotic_prediction(const ConnectionSpec& spec, long n) {
  return asymptotic_prediction(growth_law(spec), n);
}

struct ConvergenceReport {
  GrowthLaw law;
  std::vector<ConvergenceRow> rows;
  bool deviation_decreasing = true;
};

/// tau, prediction and ratio at one group order; `at` must be connected.
inline ConvergenceRow convergence_row(const GrowthLaw& law, const ConnectionSpec& at) {
  ConvergenceRow row;
  row.n = at.n();
  row.tau = tree_count_closed(at).tau;
  row.prediction = asymptotic_prediction(law, at.n());
  const Real<64> ratio = to_real<64>(row.tau) / detail::prediction_real<64>(law, at.n());
  row.ratio = static_cast<long double>(ratio);
  row.deviation = static_cast<long double>(abs(ratio - 1));
  return row;
}

inline bool deviation_decreasing(const std::vector<ConvergenceRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].deviation < rows[i - 1].deviation)) return false;
  return true;
}

/// tau, prediction and their ratio for each n; every n must give a valid,
/// connected spec.
inline ConvergenceReport convergence_report(const ConnectionSpec& spec, const std::vector<long>& ns) {
  ConvergenceReport rep;
  rep.law = growth_law(spec);
  for (long n : ns) rep.rows.push_back(convergence_row(rep.law, with_order(spec, n)));
  rep.deviation_decreasing = deviation_decreasing(rep.rows);
  return rep;
}

}  // namespace bforest
