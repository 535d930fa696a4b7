#include <gtest/gtest.h>

#include <cmath>

#include "bforest/genfun.hpp"
#include "fixtures.hpp"

using namespace bforest;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// F as a function of u = (x + 1/x) / 2 in the two worked families with a
// unit scale, evaluated in floating point.
double f1_closed(double x) {
  const double u = (x + 1 / x) / 2;
  return (u * u + u - 3) / (2 * (u - 2) * (u - 2) * (u - 1));
}

double f2_closed(double x) {
  const double u = (x + 1 / x) / 2;
  return (3 * u * u - 7 * u + 5) / (2 * (u - 2) * (u - 2) * (u - 1));
}

// Partial sums of the defining series from the explicit tau formulas.
double series_from_formula(int family, double x) {
  double sum = 0, t_prev = 1, t_cur = 2;  // T_0(2), T_1(2)
  for (int n = 1; n < 200; ++n) {
    const double tn = n == 1 ? 2 : t_cur;
    sum += (family == 1 ? n * (tn - 1) : n * (tn + 1)) * std::pow(x, n);
    if (n >= 1) {
      const double next = 4 * t_cur - t_prev;
      t_prev = t_cur;
      t_cur = next;
    }
  }
  return sum;
}

}  // namespace

TEST(Sequence, WorkedTerms) {
  EXPECT_EQ(tau_sequence(worked_family(1, 5), 6).values, ints({1, 12, 75, 384, 1805, 8100}));
  EXPECT_EQ(tau_sequence(worked_family(2, 6), 3).values, ints({3, 16, 81}));
  EXPECT_EQ(tau_sequence(worked_family(1, 5), 1).values, ints({1}));
}

TEST(Recurrence, SimpleSequences) {
  const auto c = find_recurrence(ints({5, 5, 5, 5, 5, 5, 5, 5}), 3);
  EXPECT_EQ(c.order(), 1);
  EXPECT_EQ(c.connection, ints({1, -1}));

  std::vector<Integer> nat;
  for (long i = 1; i <= 10; ++i) nat.push_back(i);
  const auto r = find_recurrence(nat, 4);
  EXPECT_EQ(r.connection, ints({1, -2, 1}));

  try {
    find_recurrence(nat, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InsufficientTerms);
  }
  std::vector<Integer> fast;
  for (long i = 1; i <= 10; ++i) fast.push_back(Integer(i) * i * i * i * i);  // order 6
  try {
    find_recurrence(fast, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OrderExceeded);
  }
}

TEST(Recurrence, FamilyOneCharacteristicPolynomial) {
  const auto seq = tau_sequence(worked_family(1, 5), 24);
  const auto rec = find_recurrence(seq, 11);
  EXPECT_EQ(rec.order(), 6);
  // ((x - 1)(x^2 - 4x + 1))^2 read as a connection polynomial
  const IntPoly base = IntPoly{-1, 1} * IntPoly{1, -4, 1};
  const IntPoly charpoly = base * base;
  EXPECT_EQ(IntPoly(rec.connection).reversed(), charpoly);
}

TEST(GeneratingFunction, Naturals) {
  std::vector<Integer> nat;
  for (long i = 1; i <= 10; ++i) nat.push_back(i);
  const auto gf = genfun(nat, find_recurrence(nat, 4));
  EXPECT_EQ(gf.numerator, (IntPoly{0, 1}));
  EXPECT_EQ(gf.denominator, (IntPoly{1, -2, 1}));
  EXPECT_TRUE(verify_symmetry(gf, 1));
  EXPECT_EQ(to_json(gf).dump(), R"({"denominator":[1,-2,1],"numerator":[0,1],"order":2})");
}

TEST(GeneratingFunction, AsymmetricExample) {
  std::vector<Integer> pow2;
  for (long i = 0; i < 10; ++i) pow2.push_back(pow_int(2, static_cast<unsigned long>(i)));
  const auto gf = genfun(pow2, find_recurrence(pow2, 4));
  EXPECT_EQ(gf.numerator, (IntPoly{0, 1}));
  EXPECT_EQ(gf.denominator, (IntPoly{1, -2}));
  EXPECT_FALSE(verify_symmetry(gf, 1));
}

TEST(GeneratingFunction, WorkedFamilies) {
  for (int j = 1; j <= 4; ++j) {
    const auto spec = worked_family(j, 8);
    const auto sys = spectral_system(spec);
    const auto seq = tau_sequence(sys, 24);
    const auto rec = find_recurrence(seq, 11);
    EXPECT_LE(rec.order(), 6) << j;
    const auto gf = genfun(seq, rec);
    EXPECT_EQ(gf.denominator[0], 1);
    EXPECT_EQ(gf.denominator.degree(), rec.order());
    const auto more = tau_sequence(sys, 34);
    EXPECT_EQ(series_terms(gf, 34), more.values) << j;
    EXPECT_TRUE(verify_symmetry(gf, symmetry_scale(sys))) << j;
  }
  EXPECT_EQ(symmetry_scale(spectral_system(worked_family(3, 8))), 3);
  EXPECT_EQ(symmetry_scale(spectral_system(worked_family(4, 8))), 3);
}

TEST(GeneratingFunction, ClosedFormsAtPointOne) {
  const auto g1 = genfun(tau_sequence(worked_family(1, 8), 24), find_recurrence(tau_sequence(worked_family(1, 8), 24), 11));
  const auto g2 = genfun(tau_sequence(worked_family(2, 8), 24), find_recurrence(tau_sequence(worked_family(2, 8), 24), 11));
  EXPECT_NEAR(static_cast<double>(evaluate(g1, 0.1L)), 0.365659, 1e-5);
  EXPECT_NEAR(static_cast<double>(evaluate(g2, 0.1L)), 0.612573, 1e-5);
  for (double x : {0.01, 0.05, 0.1, 0.2}) {
    EXPECT_NEAR(static_cast<double>(evaluate(g1, x)), f1_closed(x), 1e-12);
    EXPECT_NEAR(static_cast<double>(evaluate(g2, x)), f2_closed(x), 1e-12);
    EXPECT_NEAR(static_cast<double>(evaluate(g1, x)), series_from_formula(1, x), 1e-9);
    EXPECT_NEAR(static_cast<double>(evaluate(g2, x)), series_from_formula(2, x), 1e-9);
  }
}

TEST(GeneratingFunction, RandomSpecsPredictHeldOutTerms) {
  // a few hand-picked larger systems; the order is at most twice the number
  // of exponentials in the Chebyshev product, 2 * 3^(k - 1 + kj)
  const std::vector<std::string> specs{
      R"({"n":10,"alphas":[1,2],"betas":[1],"gammas":[0,3]})",
      R"({"n":9,"alphas":[1],"betas":[2],"gammas":[0]})",
      R"({"n":12,"alphas":[1],"betas":[1],"gammas":[0,1],"half_t":true})"};
  for (const auto& text : specs) {
    const auto sys = spectral_system(spec_from_json(nlohmann::json::parse(text)));
    const auto seq = tau_sequence(sys, 2 * 60 + 2);
    const auto rec = find_recurrence(seq, 60);
    const auto gf = genfun(seq, rec);
    const long factors = sys.k - 1 + (sys.family == Family::One ? 0 : sys.kj);
    EXPECT_LE(rec.order(), static_cast<int>(2 * std::pow(3, factors))) << text;
    const auto held = tau_sequence(sys, seq.values.size() + 10);
    EXPECT_EQ(series_terms(gf, held.values.size()), held.values) << text;
    EXPECT_TRUE(verify_symmetry(gf, symmetry_scale(sys))) << text << " order " << rec.order();
  }
}
