#include <gtest/gtest.h>

#include <random>

#include "octic/binary_form.hpp"
#include "octic/error.hpp"
#include "octic/interpolation.hpp"
#include "octic/passage.hpp"
#include "octic/split_octic.hpp"
#include "test_support.hpp"

using namespace octic;

namespace {

Exponents exps(std::initializer_list<int> e) {
  Exponents out{};
  std::copy(e.begin(), e.end(), out.begin());
  return out;
}

std::array<Rational, 9> random_vector(std::mt19937_64& rng) {
  std::array<Rational, 9> v;
  for (auto& x : v) x = octic::fixtures::random_rational(rng, 50);
  return v;
}

}  // namespace

TEST(MonomialTables, Enumeration) {
  EXPECT_EQ(enumerate_monomials(4).size(), 2u);
  EXPECT_EQ(enumerate_monomials(20).size(), 107u);
  EXPECT_EQ(monomial_basis(20).size(), 102u);
  EXPECT_EQ(enumerate_monomials(20).front(), exps({10}));
  EXPECT_EQ(enumerate_monomials(20).back(), exps({0, 0, 0, 0, 0, 0, 0, 0, 2}));
  for (int w = 2; w <= 10; ++w) EXPECT_EQ(monomial_basis(w), enumerate_monomials(w));
  EXPECT_EQ(monomial_name(exps({2, 0, 1}), "J"), "J2^2*J4");
}

TEST(MonomialTables, HomogeneityIsEnforced) {
  EXPECT_THROW(WeightedMonomialTable(4, {{exps({1}), Rational(1)}}), Error);
  EXPECT_THROW(WeightedMonomialTable(4, {{exps({2}), Rational(1)}, {exps({2}), Rational(2)}}), Error);
  for (int k = 2; k <= 10; ++k) {
    for (const auto& t : tsuyumine_in_shioda(k).terms()) EXPECT_EQ(weighted_degree(t.exponents), k);
    for (const auto& t : shioda_in_tsuyumine(k).terms()) EXPECT_EQ(weighted_degree(t.exponents), k);
  }
  EXPECT_EQ(i20_in_shioda().terms().size(), 102u);
  for (const auto& t : i20_in_shioda().terms()) EXPECT_TRUE(is_standard_monomial(t.exponents));
}

TEST(MonomialTables, JsonRoundTrip) {
  for (int k = 2; k <= 10; ++k) {
    const auto& t = tsuyumine_in_shioda(k);
    EXPECT_EQ(WeightedMonomialTable::from_json(t.to_json()), t);
  }
  EXPECT_EQ(WeightedMonomialTable::from_json(i20_in_shioda().to_json()), i20_in_shioda());
  EXPECT_EQ(WeightedMonomialTable(4, {{exps({2}), Rational(-3)}}).to_json(),
            R"({"weight":4,"terms":[{"exponents":[2,0,0,0,0,0,0,0,0],"coefficient":"-3"}]})");
  EXPECT_THROW(WeightedMonomialTable::from_json("{\"weight\": 4}"), Error);
}

TEST(TsuyumineFromShioda, UnitVectors) {
  const TsuyumineVector i = tsuyumine_from_shioda(ShiodaVector({1, 0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(i.at(2), Rational(161280));
  EXPECT_EQ(i.at(4), prime_power_product(-1, {{2, 14}, {3, 1}, {5, 2}, {7, 1}}));
  EXPECT_TRUE(tsuyumine_from_shioda(ShiodaVector()).is_zero());
  // the zero terms 0*J4J5 in I9 and 0*J5^2 in I10 are absent
  EXPECT_TRUE(tsuyumine_in_shioda(9).coefficient(exps({0, 0, 1, 1})).is_zero());
  EXPECT_TRUE(tsuyumine_in_shioda(10).coefficient(exps({0, 0, 0, 2})).is_zero());
}

TEST(TsuyumineFromShioda, RootsOneToEight) {
  const SplitOctic s = octic::fixtures::roots_one_to(8);
  EXPECT_EQ(tsuyumine_from_shioda(shioda_invariants(s.form())), tsuyumine_from_roots(s));
}

TEST(ShiodaFromTsuyumine, KnownRows) {
  const ShiodaVector j = shioda_from_tsuyumine(TsuyumineVector({1, 0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(j.at(2), prime_power_product(1, {{2, -9}, {3, -2}, {5, -1}, {7, -1}}));
  EXPECT_EQ(shioda_in_tsuyumine(4).coefficient(exps({2})), prime_power_product(1, {{2, -19}, {3, -5}, {7, -4}}));
  EXPECT_EQ(shioda_in_tsuyumine(4).coefficient(exps({0, 0, 1})), prime_power_product(1, {{2, -15}, {3, -2}, {7, -3}}));
}

TEST(ShiodaFromTsuyumine, RoundTrip) {
  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const ShiodaVector j(random_vector(rng));
    EXPECT_EQ(shioda_from_tsuyumine(tsuyumine_from_shioda(j)), j);
    const TsuyumineVector i(random_vector(rng));
    EXPECT_EQ(tsuyumine_from_shioda(shioda_from_tsuyumine(i)), i);
  }
}

TEST(ShiodaFromTsuyumine, ReferenceDiscrepancies) {
  const auto d = shioda_in_tsuyumine_discrepancies();
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].weight, 8);
  EXPECT_EQ(d[0].monomial, exps({2, 0, 1}));
  EXPECT_EQ(d[0].reference, prime_power_product(-1, {{2, -35}, {3, -5}, {5, -3}, {7, 8}, {59, 1}}));
  EXPECT_EQ(d[0].computed, prime_power_product(-1, {{2, -35}, {3, -5}, {5, -3}, {7, -8}, {59, 1}}));
  EXPECT_EQ(d[1].weight, 9);
  EXPECT_EQ(d[1].monomial, exps({0, 1, 0, 0, 1}));
  EXPECT_EQ(d[1].reference, prime_power_product(-1, {{2, -3}, {3, -4}, {7, -7}}));
  EXPECT_EQ(d[1].computed, prime_power_product(-1, {{2, -33}, {3, -4}, {7, -7}}));
}

TEST(ReferenceTables, I7Correction) {
  const auto d = diff_tables(reference_tsuyumine_in_shioda(7), tsuyumine_in_shioda(7));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].monomial, exps({2, 1}));
  EXPECT_EQ(d[0].computed, d[0].reference / Rational(3));
  for (int k : {2, 3, 4, 5, 6, 8, 9, 10}) {
    EXPECT_TRUE(diff_tables(reference_tsuyumine_in_shioda(k), tsuyumine_in_shioda(k)).empty()) << k;
  }
}

TEST(I20FromShioda, ExampleCurve) {
  const Rational expected = prime_power_product(1, {{2, 8}, {3, 3}, {5, 3}, {7, 12}, {19, 10}, {131, 1},
                                                    {11867, 1}, {33730341419, 1}}) *
                            Rational(Integer("471894282846669530888306233351"));
  EXPECT_EQ(i20_from_shioda(shioda_invariants(octic::fixtures::example_curve())), expected);
  EXPECT_TRUE(i20_from_shioda(ShiodaVector()).is_zero());
}

TEST(AbsoluteInvariants, Formulas) {
  const SplitOctic s = octic::fixtures::roots_one_to(8);
  const TsuyumineVector i = tsuyumine_from_roots(s);
  const Rational d = discriminant_from_roots(s);
  const AbsoluteInvariants a = absolute_invariants(i, d);
  EXPECT_EQ(a.values[0], pow(i.at(2), 5) * pow(i.at(3), 6) / pow(d, 2));
  EXPECT_EQ(a.values[1], pow(i.at(2), 6) * pow(i.at(3), 10) / pow(d, 3));
  EXPECT_EQ(a.values[8], pow(i.at(2), 20) * pow(i.at(3), 30) * i.at(10) / pow(d, 10));
}

TEST(AbsoluteInvariants, WeightZero) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    TsuyumineVector i(random_vector(rng));
    if (i.at(2).is_zero()) i.at(2) = 1;
    if (i.at(3).is_zero()) i.at(3) = 1;
    Rational d = octic::fixtures::random_rational(rng, 30);
    if (d.is_zero()) d = 1;
    Rational lambda = octic::fixtures::random_rational(rng, 9);
    if (lambda.is_zero()) lambda = 2;
    EXPECT_EQ(absolute_invariants(i.scaled(lambda), d * pow(lambda, 14)), absolute_invariants(i, d));
  }
}

TEST(AbsoluteInvariants, Errors) {
  const TsuyumineVector i({1, 1, 1, 1, 1, 1, 1, 1, 1});
  EXPECT_THROW(absolute_invariants(i, 0), Error);
  try {
    absolute_invariants(tsuyumine_from_shioda(shioda_invariants(octic::fixtures::example_curve())), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NormalizerVanishes);
  }
  try {
    absolute_invariants(i, 0);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularOctic);
    EXPECT_STREQ(e.what(), "singular octic");
  }
}

TEST(WeightedProjectiveEq, Scaling) {
  std::mt19937_64 rng(9);
  const std::array<Rational, 9> a = random_vector(rng);
  const Rational lambda(Integer(3), Integer(2));
  std::array<Rational, 9> b = a;
  for (int k = 0; k < 9; ++k) b[k] *= pow(lambda, k + 2);
  EXPECT_TRUE(weighted_projective_eq(a, b));
  EXPECT_TRUE(weighted_projective_eq(b, a));
  b[3] += 1;
  EXPECT_FALSE(weighted_projective_eq(a, b));
}

TEST(WeightedProjectiveEq, EvenWeightsOnly) {
  // Only even weights in play: lambda and -lambda both fit, and a scale by
  // a non-square must be rejected.
  const std::array<Rational, 9> a{1, 0, 2, 0, 3, 0, 0, 0, 0};
  std::array<Rational, 9> b = a, c = a;
  for (int k : {0, 2, 4}) {
    b[k] *= pow(Rational(-5), k + 2);
    c[k] *= pow(Rational(2), (k + 2) / 2);  // lambda^2 = 2
  }
  EXPECT_TRUE(weighted_projective_eq(a, b));
  EXPECT_FALSE(weighted_projective_eq(a, c));
}

TEST(WeightedProjectiveEq, SignResolvedByOddWeight) {
  const std::array<Rational, 9> a{1, 1, 0, 0, 0, 0, 0, 0, 0};
  EXPECT_TRUE(weighted_projective_eq(a, {1, -1, 0, 0, 0, 0, 0, 0, 0}));  // lambda = -1
  EXPECT_TRUE(weighted_projective_eq(a, {4, 8, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_FALSE(weighted_projective_eq(a, {4, 7, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(WeightedProjectiveEq, VanishingPatterns) {
  EXPECT_FALSE(weighted_projective_eq({1, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0, 0}));
  try {
    weighted_projective_eq(std::array<Rational, 9>{}, std::array<Rational, 9>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UndefinedPoint);
    EXPECT_STREQ(e.what(), "undefined point");
  }
}

TEST(WeightedProjectiveEq, EquivalentOctics) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    const BinaryForm f = octic::fixtures::random_octic(rng);
    const ShiodaVector j = shioda_invariants(f);
    EXPECT_TRUE(weighted_projective_eq(j, shioda_invariants(f.substitute(1, 1, 0, 1))));
    EXPECT_TRUE(weighted_projective_eq(j, shioda_invariants(f.substitute(0, 1, 1, 0))));
    EXPECT_TRUE(weighted_projective_eq(j, shioda_invariants(f.substitute(3, 0, 0, 1))));
  }
}
