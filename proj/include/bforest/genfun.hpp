#pragma once

// Rational generating functions of tau sequences, recovered by exact
// Berlekamp-Massey over Q on closed-form terms.

#include <string>
#include <vector>

#include <json.hpp>

#include "bforest/closed_form.hpp"
#include "bforest/polynomial.hpp"

namespace bforest {

/// Terms a(1), a(2), ...: tau at group order i for family 1 and at 2i for
/// families 2-4. Small indices are formal values of the closed formula.
struct TauSequence {
  Family family = Family::One;
  std::vector<Integer> values;

  long parameter(std::size_t index) const {
    const long i = static_cast<long>(index) + 1;
    return family == Family::One ? i : 2 * i;
  }
};

inline TauSequence tau_sequence(const SpectralSystem& sys, std::size_t count) {
  if (count < 1) throw Error(Errc::InvalidArgument, "need at least one term");
  TauSequence seq;
  seq.family = sys.family;
  for (std::size_t i = 0; i < count; ++i) seq.values.push_back(closed_form_tau(sys, seq.parameter(i)).tau);
  return seq;
}

inline TauSequence tau_sequence(const ConnectionSpec& spec, std::size_t count) {
  return tau_sequence(spectral_system(spec), count);
}

/// Minimal recurrence sum_{i=0..L} c_i a(n - i) = 0 with integer c_i,
/// c_0 > 0 and gcd(c) = 1.
struct Recurrence {
  std::vector<Integer> connection;
  int order() const noexcept { return static_cast<int>(connection.size()) - 1; }
};

inline constexpr int kDefaultMaxOrder = 128;

/// Exact Berlekamp-Massey over Q. Needs at least 2 * max_order + 2 terms so
/// that any recurrence within the bound is determined and checked by the data.
inline Recurrence find_recurrence(const std::vector<Integer>& terms, int max_order = kDefaultMaxOrder) {
  if (max_order < 0) throw Error(Errc::InvalidArgument, "max_order must be nonnegative");
  const std::size_t need = 2 * static_cast<std::size_t>(max_order) + 2;
  if (terms.size() < need)
    throw Error(Errc::InsufficientTerms, "need " + std::to_string(need) + " terms, got " + std::to_string(terms.size()));

  std::vector<Rational> c{Rational(1)}, b{Rational(1)};
  std::size_t len = 0, shift = 1;
  Rational last = 1;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    Rational d = terms[n];
    for (std::size_t i = 1; i <= len && i < c.size(); ++i) d += c[i] * terms[n - i];
    if (d == 0) {
      ++shift;
      continue;
    }
    const Rational factor = d / last;
    std::vector<Rational> next = c;
    if (next.size() < b.size() + shift) next.resize(b.size() + shift, Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) next[i + shift] -= factor * b[i];
    if (2 * len <= n) {
      b = std::move(c);
      len = n + 1 - len;
      last = d;
      shift = 1;
    } else {
      ++shift;
    }
    c = std::move(next);
  }
  if (len > static_cast<std::size_t>(max_order))
    throw Error(Errc::OrderExceeded, "minimal recurrence has order " + std::to_string(len) + " > " +
                                         std::to_string(max_order));
  c.resize(len + 1, Rational(0));
  auto [ci, unused] = clear_denominators(RatPoly(c));
  (void)unused;
  std::vector<Integer> coeffs = ci.coeffs();
  coeffs.resize(len + 1, Integer(0));
  const Integer g = content(ci);
  for (auto& v : coeffs) v = exact_quotient(v, g);
  if (coeffs[0] < 0)
    for (auto& v : coeffs) v = -v;
  return {coeffs};
}

inline Recurrence find_recurrence(const TauSequence& seq, int max_order = kDefaultMaxOrder) {
  return find_recurrence(seq.values, max_order);
}

/// F(x) = sum_{n >= 1} a(n) x^n = numerator / denominator with denominator(0) = 1.
struct RationalGF {
  IntPoly numerator;
  IntPoly denominator;
  Recurrence recurrence;
  int order() const noexcept { return recurrence.order(); }
};

/// Builds N / Q from a recurrence valid for a(1), a(2), ... Since the
/// recurrence need not extend back to a(0) = 0, the series is handled as
/// x * sum a(n + 1) x^n.
inline RationalGF genfun(const std::vector<Integer>& terms, const Recurrence& rec) {
  const auto len = static_cast<std::size_t>(rec.order());
  if (terms.size() < len) throw Error(Errc::InsufficientTerms, "fewer terms than the recurrence order");
  const Integer c0 = rec.connection.at(0);
  std::vector<Rational> qc;
  for (const auto& v : rec.connection) qc.emplace_back(v, c0);
  for (auto& v : qc) v.canonicalize();
  RatPoly q(qc);
  std::vector<Rational> head(terms.begin(), terms.begin() + static_cast<long>(len));
  RatPoly g = RatPoly(head) * q;
  std::vector<Rational> low(g.coeffs().begin(), g.coeffs().begin() + std::min<long>(static_cast<long>(len), g.degree() + 1));
  RatPoly num = RatPoly::monomial(Rational(1), 1) * RatPoly(low);

  const RatPoly common = gcd(num, q);
  if (common.degree() > 0) {
    num = divmod(num, common).first;
    q = divmod(q, common).first;
    const Rational q0 = q[0];
    num = num * (Rational(1) / q0);
    q = q * (Rational(1) / q0);
  }
  RationalGF gf;
  gf.recurrence = rec;
  if (!to_integer(num, gf.numerator) || !to_integer(q, gf.denominator))
    throw Error(Errc::NonIntegralResult, "generating function has non-integer coefficients");
  return gf;
}

inline RationalGF genfun(const TauSequence& seq, const Recurrence& rec) { return genfun(seq.values, rec); }

/// The first `count` coefficients a(1), a(2), ... of the series.
inline std::vector<Integer> series_terms(const RationalGF& gf, std::size_t count) {
  std::vector<Integer> f(count + 1, Integer(0));
  const auto& q = gf.denominator.coeffs();
  for (std::size_t n = 0; n <= count; ++n) {
    Integer acc = gf.numerator[n];
    for (std::size_t i = 1; i < q.size() && i <= n; ++i) acc -= q[i] * f[n - i];
    f[n] = acc;  // q[0] == 1
  }
  return {f.begin() + 1, f.end()};
}

inline long double evaluate(const RationalGF& gf, long double x) {
  auto ev = [x](const IntPoly& p) {
    long double acc = 0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + static_cast<long double>(p.coeffs()[i].get_d());
    return acc;
  };
  return ev(gf.numerator) / ev(gf.denominator);
}

/// Scale for the symmetry of the family's generating function: a_k for
/// family 1, a_k times the leading coefficient of Pj otherwise.
inline Integer symmetry_scale(const SpectralSystem& sys) {
  return sys.family == Family::One ? sys.a_k : Integer(sys.a_k * sys.lead_j);
}

/// Whether H(x) = F(x / scale) satisfies H(x) = H(1/x), checked by exact
/// cross-multiplication after clearing powers of x and of the scale.
inline bool verify_symmetry(const RationalGF& gf, const Integer& scale) {
  if (scale == 0) throw Error(Errc::InvalidArgument, "scale must be nonzero");
  const int d = std::max(gf.numerator.degree(), gf.denominator.degree());
  if (d < 0) return true;
  auto scaled = [&](const IntPoly& p) {
    std::vector<Integer> c(static_cast<std::size_t>(d) + 1, Integer(0));
    for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)] * pow_int(scale, static_cast<unsigned long>(d - i));
    return c;
  };
  auto poly = [](std::vector<Integer> c, bool rev) {
    if (rev) std::reverse(c.begin(), c.end());
    return IntPoly(std::move(c));
  };
  const auto ns = scaled(gf.numerator);
  const auto qs = scaled(gf.denominator);
  return poly(ns, false) * poly(qs, true) == poly(ns, true) * poly(qs, false);
}

inline nlohmann::json to_json_integers(const IntPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : p.coeffs()) {
    if (v.fits_slong_p()) out.push_back(v.get_si());
    else out.push_back(v.get_str());
  }
  return out;
}

/// {"numerator": [...], "denominator": [...], "order": L}, lowest degree first.
inline nlohmann::json to_json(const RationalGF& gf) {
  return nlohmann::json{{"numerator", to_json_integers(gf.numerator)},
                        {"denominator", to_json_integers(gf.denominator)},
                        {"order", gf.order()}};
}

}  // namespace bforest
