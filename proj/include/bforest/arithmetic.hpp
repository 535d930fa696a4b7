#pragma once

// Perfect-square structure of tau: tau = cofactor * witness^2 with a cofactor
// fixed by the parities of n (or n/2) and of the connection elements.

#include <optional>
#include <string>

#include "bforest/closed_form.hpp"
#include "bforest/model.hpp"

namespace bforest {

struct ArithmeticProfile {
  Family family = Family::One;
  long k1 = 0, k2 = 0;  // odd / even alphas
  long m1 = 0, m2 = 0;  // odd / even betas
  long h1 = 0, h2 = 0;  // odd / even gammas
  long s = 0;
  Integer raw_even;  // before taking the square-free part
  Integer raw_odd;
  // Square-free constants for the two branches; empty when the raw value is
  // not positive (rejected only if the branch is actually used).
  std::optional<Integer> q_even;
  std::optional<Integer> q_odd;
};

inline ArithmeticProfile arithmetic_profile(const ConnectionSpec& spec) {
  ArithmeticProfile p;
  p.family = classify_family(spec);
  p.s = spec.s();
  for (long a : spec.alphas()) (a % 2 ? p.k1 : p.k2) += 1;
  for (long b : spec.betas()) (b % 2 ? p.m1 : p.m2) += 1;
  for (long g : spec.gammas()) (g % 2 ? p.h1 : p.h2) += 1;

  const long d = p.h2 - p.h1;
  auto raw = [&](long extra_a, long extra_b) -> Integer {
    return Integer(4 * p.k1 + p.s + extra_a) * Integer(4 * p.m1 + p.s + extra_b) - Integer(d) * Integer(d);
  };
  p.raw_even = raw(0, 0);
  switch (p.family) {
    case Family::One: p.raw_odd = 1; break;
    case Family::Two: p.raw_odd = raw(2, 0); break;
    case Family::Three: p.raw_odd = raw(0, 2); break;
    case Family::Four: p.raw_odd = raw(2, 2); break;
  }
  if (p.raw_even > 0) p.q_even = squarefree_part(p.raw_even);
  if (p.raw_odd > 0) p.q_odd = squarefree_part(p.raw_odd);
  return p;
}

enum class Branch { Odd, Even };

inline const char* to_string(Branch b) noexcept { return b == Branch::Odd ? "odd" : "even"; }

struct SquareWitness {
  Branch branch = Branch::Odd;
  Rational cofactor;  // tau = cofactor * witness^2
  Integer witness;
  bool parity_applies = false;  // families 2-4 with n/2, s and q all odd
  bool parity_holds = true;     // witness even whenever parity_applies
};

/// Splits tau into cofactor * witness^2 for the branch selected by the parity
/// of n (family 1) or n/2 (families 2-4). The group order is taken from `spec`.
inline SquareWitness verify_square_structure(const ConnectionSpec& spec, const Integer& tau) {
  const ArithmeticProfile prof = arithmetic_profile(spec);
  const long n = spec.n();
  const bool one = prof.family == Family::One;
  if (!one && n % 2 != 0) throw Error(Errc::HalfWithoutEvenN, "families 2-4 need even n");
  const long index = one ? n : n / 2;

  SquareWitness w;
  w.branch = index % 2 ? Branch::Odd : Branch::Even;
  const std::optional<Integer>& q = w.branch == Branch::Odd ? prof.q_odd : prof.q_even;
  if (!q)
    throw Error(Errc::NonPositiveStructure,
                "structure constant " + (w.branch == Branch::Odd ? prof.raw_odd : prof.raw_even).get_str() +
                    " is not positive");
  const Integer base = Integer(n) * Integer(prof.s) * *q;
  w.cofactor = one ? Rational(base) : Rational(base, 4);
  w.cofactor.canonicalize();

  const Integer scaled = one ? tau : Integer(4 * tau);
  const Integer square = exact_quotient(scaled, base, Errc::NonDivisible);
  if (!exact_isqrt(square, w.witness))
    throw Error(Errc::NotAPerfectSquare, square.get_str() + " is not a perfect square");

  if (!one && index % 2 != 0 && prof.s % 2 != 0 && !divides(2, *q)) {
    w.parity_applies = true;
    w.parity_holds = divides(2, w.witness);
  }
  return w;
}

inline SquareWitness verify_square_structure(const ConnectionSpec& spec, const TreeCount& tau) {
  return verify_square_structure(spec, tau.tau);
}

}  // namespace bforest
