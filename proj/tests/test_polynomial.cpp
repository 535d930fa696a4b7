#include <gtest/gtest.h>

#include <random>

#include "bforest/laurent.hpp"
#include "bforest/polynomial.hpp"
#include "bforest/roots.hpp"
#include "oracles.hpp"

using namespace bforest;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_degree, int bound = 5) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-bound, bound);
  const int d = deg(rng);
  std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) v = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPoly(std::move(c));
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

TEST(Chebyshev, KnownValues) {
  EXPECT_EQ(chebyshev_T(3, Rational(2)), 26);
  for (unsigned long n : {0UL, 1UL, 7UL, 100UL}) EXPECT_EQ(chebyshev_T(n, Rational(1)), 1);
  EXPECT_EQ(chebyshev_T(2, Rational(7, 3)), Rational(89, 9));
  EXPECT_EQ(chebyshev_T(10, Integer(2)), 262087);
  EXPECT_EQ(chebyshev_polynomial(3), (IntPoly{0, -3, 0, 4}));
}

TEST(Chebyshev, ProductIdentityAndRecurrence) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<unsigned long> idx(0, 30);
  for (int iter = 0; iter < 200; ++iter) {
    const Rational x = random_rational(rng);
    unsigned long m = idx(rng), n = idx(rng);
    if (m < n) std::swap(m, n);
    EXPECT_EQ(chebyshev_T(m + n, x) + chebyshev_T(m - n, x), 2 * chebyshev_T(m, x) * chebyshev_T(n, x));
    EXPECT_EQ(chebyshev_T(m, x), oracle::chebyshev(static_cast<unsigned>(m), x));
    EXPECT_EQ(chebyshev_polynomial(m).eval(x), chebyshev_T(m, x));
  }
}

TEST(ChebyshevTransform, Examples) {
  EXPECT_EQ(chebyshev_transform(SymmetricLaurentPoly({2, -1})), (IntPoly{2, -2}));
  EXPECT_EQ(chebyshev_transform(SymmetricLaurentPoly({10, -6, 1})), (IntPoly{8, -12, 4}));
  EXPECT_EQ(chebyshev_transform(SymmetricLaurentPoly::constant(3)), (IntPoly{3}));
}

TEST(ChebyshevTransform, RoundTripAndLeadingCoefficient) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> len(1, 6), coef(-7, 7);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Integer> eta(static_cast<std::size_t>(len(rng)));
    for (auto& v : eta) v = coef(rng);
    if (eta.back() == 0) eta.back() = 2;
    const SymmetricLaurentPoly p(eta);
    const IntPoly k = chebyshev_transform(p);
    ASSERT_EQ(k.degree(), p.degree());
    if (p.degree() >= 1) {
      EXPECT_EQ(k.lead(), pow_int(2, static_cast<unsigned long>(p.degree())) * p.lead());
    }
    Rational z = random_rational(rng);
    if (z == 0) z = 3;
    EXPECT_EQ(p.eval(z), k.eval(Rational((z + 1 / z) / 2)));
  }
}

TEST(Laurent, ShiftedAndProducts) {
  const SymmetricLaurentPoly p({10, -6, 1});
  EXPECT_EQ(p.shifted(), (IntPoly{1, -6, 10, -6, 1}));
  EXPECT_EQ(SymmetricLaurentPoly::from_shifted(p.shifted(), 2), p);
  EXPECT_THROW(SymmetricLaurentPoly::from_shifted(IntPoly{1, 2, 3}, 1), Error);
  const SymmetricLaurentPoly a({2, -1});
  EXPECT_EQ(a * a, SymmetricLaurentPoly({6, -4, 1}));
  EXPECT_EQ(p.value_at_one(), 0);
  EXPECT_EQ(p.second_derivative_at_one(), -4);
  EXPECT_EQ(p.value_at_minus_one(), 24);
  EXPECT_EQ(p.to_string(), "10 - 6(z^1+z^-1) + (z^2+z^-2)");
  EXPECT_NEAR(p.eval_on_circle(0.0), 0.0, 1e-12);
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant(IntPoly{-1, 1}, IntPoly{-4, 0, 1}), -3);
  EXPECT_EQ(resultant(IntPoly{-1, 0, 1}, IntPoly{-4, 0, 1}), 9);
  EXPECT_EQ(resultant(IntPoly{-1, 1}, IntPoly{6, -5, 1}), 2);
  EXPECT_EQ(resultant(IntPoly{-1, 1}, IntPoly{-2, 1}) * resultant(IntPoly{-1, 1}, IntPoly{-3, 1}), 2);
  EXPECT_THROW(resultant(IntPoly{}, IntPoly{1, 1}), Error);
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 400; ++iter) {
    IntPoly f = random_poly(rng, 8), g = random_poly(rng, 8);
    if (f.degree() + g.degree() == 0) continue;
    EXPECT_EQ(resultant(f, g), oracle::sylvester_resultant(f.coeffs(), g.coeffs()))
        << f.to_string() << " , " << g.to_string();
  }
  // shared factor
  const IntPoly common{-2, 1};
  EXPECT_EQ(resultant(common * IntPoly{1, 1, 3}, common * IntPoly{5, 0, 2}), 0);
}

TEST(Resultant, MultiplicativityAndTranslation) {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 200; ++iter) {
    const IntPoly f = random_poly(rng, 4), g1 = random_poly(rng, 4), g2 = random_poly(rng, 4), h = random_poly(rng, 3);
    if (f.degree() < 1) continue;
    EXPECT_EQ(resultant(f, g1 * g2), resultant(f, g1) * resultant(f, g2));
    // with f monic, Res(f, g) = prod g(roots of f) is unchanged by g -> g + h f
    std::vector<Integer> fc = f.coeffs();
    fc.back() = 1;
    const IntPoly fm(fc);
    const IntPoly shifted = g1 + h * fm;
    if (shifted.is_zero()) continue;
    EXPECT_EQ(resultant(fm, shifted), resultant(fm, g1));
  }
}

TEST(Resultant, BinomialAndCyclotomicShortcuts) {
  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 150; ++iter) {
    const IntPoly g = random_poly(rng, 4);
    std::uniform_int_distribution<unsigned long> nd(1, 14);
    std::uniform_int_distribution<int> cd(-2, 2);
    const unsigned long n = nd(rng);
    const Integer c = cd(rng);
    IntPoly binom = IntPoly::monomial(Integer(1), n) - IntPoly::constant(c);
    EXPECT_EQ(resultant_with_binomial(g, n, c), resultant(g, binom));
    EXPECT_EQ(resultant_with_cyclotomic_quotient(g, n), n == 1 ? Integer(1) : resultant(g, cyclotomic_quotient(n)));
  }
}

TEST(Division, ExactDivideExamples) {
  EXPECT_EQ(exact_divide(IntPoly{1, -2, 1}, IntPoly{1, -2, 1}), (IntPoly{1}));
  EXPECT_EQ(exact_divide(IntPoly{1, -6, 10, -6, 1}, IntPoly{1, -2, 1}), (IntPoly{1, -4, 1}));
  EXPECT_EQ(exact_divide(IntPoly{-1, 0, 0, 1}, IntPoly{-1, 1}), (IntPoly{1, 1, 1}));
  try {
    exact_divide(IntPoly{1, 0, 1}, IntPoly{-1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InexactDivision);
  }
}

TEST(Division, ExactDivideRoundTrip) {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 200; ++iter) {
    const IntPoly a = random_poly(rng, 5), b = random_poly(rng, 4);
    EXPECT_EQ(exact_divide(a * b, b) * b, a * b);
  }
}

TEST(Division, CyclotomicQuotient) {
  EXPECT_EQ(cyclotomic_quotient(1), (IntPoly{1}));
  EXPECT_EQ(cyclotomic_quotient(3), (IntPoly{1, 1, 1}));
  EXPECT_EQ(cyclotomic_quotient(6).degree(), 5);
  const IntPoly six = cyclotomic_quotient(6);
  for (const auto& c : six.coeffs()) EXPECT_EQ(c, 1);
}

TEST(SquareFree, ExamplesAndProperties) {
  EXPECT_EQ(squarefree_part(24), 6);
  EXPECT_EQ(squarefree_part(1), 1);
  EXPECT_EQ(squarefree_part(20), 5);
  EXPECT_THROW(squarefree_part(0), Error);
  for (int u = 1; u < 3000; ++u) {
    const Integer v = squarefree_part(u);
    Integer r;
    ASSERT_TRUE(divides(v, u));
    EXPECT_TRUE(exact_isqrt(Integer(u / v), r)) << u;
    EXPECT_EQ(squarefree_part(v), v);
  }
}

TEST(SquareRoot, AgreesWithGmp) {
  std::mt19937_64 rng(43);
  gmp_randclass gr(gmp_randinit_default);
  gr.seed(43);
  for (int iter = 0; iter < 300; ++iter) {
    const Integer u = gr.get_z_bits(1 + iter * 3);
    Integer ref;
    mpz_sqrt(ref.get_mpz_t(), u.get_mpz_t());
    EXPECT_EQ(isqrt(u), ref);
    Integer root;
    EXPECT_TRUE(exact_isqrt(u * u, root));
    EXPECT_EQ(root, u);
  }
}

TEST(Roots, QuadraticExamples) {
  const auto r = roots_numeric(IntPoly{1, -4, 1});
  ASSERT_EQ(r.size(), 2u);
  std::vector<long double> mods{std::abs(r[0].value), std::abs(r[1].value)};
  std::sort(mods.begin(), mods.end());
  EXPECT_NEAR(static_cast<double>(mods[0]), 2 - std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(static_cast<double>(mods[1]), 2 + std::sqrt(3.0), 1e-15);
  for (const auto& x : r) EXPECT_NE(x.location, CircleLocation::OnCircle);

  const auto d = roots_numeric(IntPoly{-3, 14, -3});
  std::vector<double> re{static_cast<double>(d[0].value.real()), static_cast<double>(d[1].value.real())};
  std::sort(re.begin(), re.end());
  EXPECT_NEAR(re[0], (7 - 2 * std::sqrt(10.0)) / 3, 1e-15);
  EXPECT_NEAR(re[1], (7 + 2 * std::sqrt(10.0)) / 3, 1e-15);
}

TEST(Roots, DoubleRootOnCircleIsFlagged) {
  const auto r = roots_numeric(IntPoly{1, -2, 1});
  for (const auto& x : r) {
    EXPECT_EQ(x.location, CircleLocation::OnCircle);
    EXPECT_NEAR(static_cast<double>(x.value.real()), 1.0, 1e-20);
  }
  try {
    roots_numeric(IntPoly{1, -2, 1}, 64, true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnitCircleAmbiguity);
  }
  EXPECT_THROW(roots_numeric(IntPoly{1, 1}, 16), Error);
}

TEST(Roots, RandomPolynomialsReconstruct) {
  std::mt19937_64 rng(47);
  for (int iter = 0; iter < 60; ++iter) {
    const IntPoly p = random_poly(rng, 9, 20);
    if (p.degree() < 1) continue;
    const auto roots = aberth_roots<64>(p);
    ASSERT_EQ(roots.size(), static_cast<std::size_t>(p.degree()));
    // the product of (x - root) times lc must give back p
    std::vector<Complex<64>> c{Complex<64>(to_real<64>(p.lead()))};
    for (const auto& r : roots) {
      std::vector<Complex<64>> next(c.size() + 1, Complex<64>(0));
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= c[i] * r.value;
      }
      c = std::move(next);
    }
    for (std::size_t i = 0; i < c.size(); ++i)
      EXPECT_LT(static_cast<double>(abs(c[i] - Complex<64>(to_real<64>(p[i])))), 1e-20) << p.to_string();
  }
}
