#include <gtest/gtest.h>

#include <random>

#include "octic/binary_form.hpp"
#include "octic/error.hpp"
#include "octic/split_octic.hpp"
#include "test_support.hpp"

using namespace octic;
using octic::fixtures::example_curve;
using octic::fixtures::random_octic;

namespace {

BinaryForm monomial(int degree, int i) {
  BinaryForm f(degree);
  f[i] = 1;
  return f;
}

}  // namespace

TEST(BinaryForm, EvaluationAndDerivative) {
  const BinaryForm f(std::vector<Rational>{1, 2, 3});  // z^2 + 2xz + 3x^2
  EXPECT_EQ(f.evaluate(2, 1), Rational(17));
  EXPECT_EQ(f.derivative(1, 0), BinaryForm(std::vector<Rational>{2, 6}));
  EXPECT_EQ(f.derivative(0, 1), BinaryForm(std::vector<Rational>{2, 2}));
  EXPECT_EQ(BinaryForm::zero(8).degree(), 8);
  EXPECT_TRUE(BinaryForm::zero(8).is_zero());
}

TEST(BinaryForm, Substitution) {
  const BinaryForm f(std::vector<Rational>{0, 1});  // x
  EXPECT_EQ(f.substitute(1, 2, 3, 4), BinaryForm(std::vector<Rational>{2, 1}));
  std::mt19937_64 rng(3);
  const BinaryForm g = random_octic(rng);
  EXPECT_EQ(g.substitute(1, 0, 0, 1), g);
  EXPECT_EQ(g.substitute(2, 1, 1, 1).evaluate(1, -1), g.evaluate(1, 0));
}

TEST(Transvectant, Examples) {
  EXPECT_EQ(transvectant(monomial(8, 8), monomial(8, 0), 8), BinaryForm::constant(1));
  std::mt19937_64 rng(17);
  const BinaryForm f = random_octic(rng), g = random_octic(rng);
  EXPECT_EQ(transvectant(f, g, 0), f * g);
  for (int r = 1; r <= 8; r += 2) {
    const BinaryForm t = transvectant(f, f, r);
    EXPECT_TRUE(t.is_zero()) << r;
    EXPECT_EQ(t.degree(), 16 - 2 * r);
  }
  try {
    transvectant(f, BinaryForm(std::vector<Rational>{1, 1}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TransvectantOrder);
    EXPECT_STREQ(e.what(), "transvectant order exceeds degree");
  }
}

TEST(Transvectant, BilinearAndSymmetric) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const BinaryForm f = random_octic(rng), g = random_octic(rng), h = random_octic(rng);
    for (int r = 0; r <= 8; ++r) {
      EXPECT_EQ(transvectant(f, g + h, r), transvectant(f, g, r) + transvectant(f, h, r));
      const Rational sign = r % 2 ? Rational(-1) : Rational(1);
      EXPECT_EQ(transvectant(f, g, r), transvectant(g, f, r) * sign);
    }
    EXPECT_EQ(transvectant(f * Rational(3), g, 4), transvectant(f, g, 4) * Rational(3));
  }
}

TEST(Shioda, ExampleCurve) {
  const ShiodaVector j = shioda_invariants(example_curve());
  EXPECT_EQ(j.at(2), prime_power_product(-1, {{2, -2}, {3, 2}, {7, -1}, {19, 1}, {475549, 1}}));
  EXPECT_EQ(j.at(4), prime_power_product(+1, {{2, -9}, {7, -4}, {19, 2}, {233, 1}, {23374404412631, 1}}));
  EXPECT_EQ(j.at(6), prime_power_product(+1, {{2, -14}, {3, 2}, {7, -6}, {19, 3}, {29, 1}, {1873, 1}, {12511, 1},
                                              {4606367, 1}, {8109203, 1}}));
  EXPECT_EQ(j.at(8), prime_power_product(-1, {{2, -17}, {3, 4}, {5, -1}, {7, -9}, {11, 1}, {19, 4}, {43, 1},
                                              {47, 1}, {2381, 1}, {4583, 1}, {11903471, 1}, {171351716957, 1}}));
  EXPECT_EQ(j.at(10), prime_power_product(-1, {{2, -22}, {3, 1}, {5, -1}, {7, -11}, {19, 5}, {23, 1},
                                               {50178763, 1}, {170651941, 1}})
                          * Rational(Integer("2743491486709463245193")));
  for (int k : {3, 5, 7, 9}) EXPECT_TRUE(j.at(k).is_zero()) << k;
}

TEST(Shioda, DegenerateForms) {
  EXPECT_TRUE(shioda_invariants(BinaryForm::zero(8)).is_zero());
  EXPECT_TRUE(shioda_invariants(monomial(8, 8)).is_zero());
  EXPECT_THROW(shioda_invariants(BinaryForm::zero(7)), Error);
}

TEST(Shioda, GL2Covariance) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const BinaryForm f = random_octic(rng, 5);
    Rational a, b, c, d;
    do {
      a = octic::fixtures::random_rational(rng, 4);
      b = octic::fixtures::random_rational(rng, 4);
      c = octic::fixtures::random_rational(rng, 4);
      d = octic::fixtures::random_rational(rng, 4);
    } while ((a * d - b * c).is_zero());
    // f(N(x,z)) is M.f for M = N^-1, so J_k picks up det(N)^{4k}.
    const Rational det_n = a * d - b * c;
    const ShiodaVector before = shioda_invariants(f);
    const ShiodaVector after = shioda_invariants(f.substitute(a, b, c, d));
    for (int k = 2; k <= 10; ++k) EXPECT_EQ(after.at(k), before.at(k) * pow(det_n, 4 * k)) << k;
  }
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant(octic::fixtures::roots_one_to(8).form()), Rational(Integer(Integer(125411328000L) * 125411328000L)));
  std::array<ProjectiveRoot, 8> repeated;
  const long values[8] = {1, 1, 2, 3, 4, 5, 6, 7};
  for (int i = 0; i < 8; ++i) repeated[i] = ProjectiveRoot::finite(values[i]);
  EXPECT_TRUE(discriminant(SplitOctic(repeated).form()).is_zero());
  EXPECT_THROW(discriminant(BinaryForm::zero(6)), Error);
}

TEST(Discriminant, ExampleCurveIsProductOfRootBrackets) {
  // The eight projective roots of the example curve are (0:1), (1:0) and
  // six non-rational ones, so the bracket product is negative here.
  EXPECT_EQ(discriminant(example_curve()),
            prime_power_product(-1, {{2, 6}, {7, 24}, {11, 12}, {19, 7}}));
}

TEST(Discriminant, MatchesRootProductOnSplitOctics) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    std::array<ProjectiveRoot, 8> roots;
    for (auto& r : roots) {
      r = {octic::fixtures::random_rational(rng, 6), octic::fixtures::random_rational(rng, 6)};
      if (r.alpha.is_zero() && r.beta.is_zero()) r.beta = 1;
    }
    if (trial % 4 == 0) roots[0] = ProjectiveRoot::infinity();
    const SplitOctic s(roots);
    EXPECT_EQ(discriminant(s.form()), discriminant_from_roots(s)) << trial;
  }
}

TEST(Resultant, SmallCases) {
  // Res(x - 2, x - 5) = -3 with f(x,1) = x - 2.
  EXPECT_EQ(resultant(BinaryForm(std::vector<Rational>{-2, 1}), BinaryForm(std::vector<Rational>{-5, 1})),
            Rational(-3));
  EXPECT_EQ(resultant(BinaryForm(std::vector<Rational>{-2, 1}), BinaryForm(std::vector<Rational>{-2, 1})),
            Rational(0));
}
