#pragma once

#include <array>
#include <vector>

#include "octic/invariant_vector.hpp"
#include "octic/monomial_table.hpp"
#include "octic/rational.hpp"

namespace octic {

/// I_k as a polynomial in J2..J10, k = 2..10.
const WeightedMonomialTable& tsuyumine_in_shioda(int k);
/// J_k as a polynomial in I2..I10, obtained by inverting the triangular
/// system tsuyumine_in_shioda. This is the table shioda_from_tsuyumine uses.
const WeightedMonomialTable& shioda_in_tsuyumine(int k);
/// I20 as a polynomial in J2..J10 on the 102 standard monomials.
const WeightedMonomialTable& i20_in_shioda();

/// Transcribed reference values, kept for comparison only. The I7 row
/// differs from tsuyumine_in_shioda(7) in its J2^2*J3 coefficient.
const WeightedMonomialTable& reference_tsuyumine_in_shioda(int k);
const WeightedMonomialTable& reference_shioda_in_tsuyumine(int k);

TsuyumineVector tsuyumine_from_shioda(const ShiodaVector& j);
ShiodaVector shioda_from_tsuyumine(const TsuyumineVector& i);
Rational i20_from_shioda(const ShiodaVector& j);

struct TableDiscrepancy {
  int weight;
  Exponents monomial;
  Rational reference;  // zero when the monomial is absent
  Rational computed;
};

/// Every monomial whose coefficient differs between the two tables.
std::vector<TableDiscrepancy> diff_tables(const WeightedMonomialTable& reference,
                                          const WeightedMonomialTable& computed);

/// diff_tables of the reference inverse against shioda_in_tsuyumine, all rows.
std::vector<TableDiscrepancy> shioda_in_tsuyumine_discrepancies();

/// (I2^5 I3^6 / D^2, I2^6 I3^10 / D^3, I2^8 I3^12 I4 / D^4, ...,
/// I2^20 I3^30 I10 / D^10), i.e. I_k / J^k with J = D / (I2^2 I3^3).
struct AbsoluteInvariants {
  std::array<Rational, 9> values;
  friend bool operator==(const AbsoluteInvariants&, const AbsoluteInvariants&) = default;
};

/// Throws ErrorCode::SingularOctic if D = 0 and ErrorCode::NormalizerVanishes
/// if I2 or I3 is zero.
AbsoluteInvariants absolute_invariants(const TsuyumineVector& i, const Rational& discriminant);

/// True iff b_k = lambda^{w_k} a_k for some nonzero rational lambda.
/// Throws ErrorCode::UndefinedPoint when both vectors are zero.
bool weighted_projective_eq(const std::array<Rational, 9>& a, const std::array<Rational, 9>& b,
                            const std::array<int, 9>& weights = kGeneratorWeights);

template <class Tag>
bool weighted_projective_eq(const GradedVector<Tag>& a, const GradedVector<Tag>& b) {
  return weighted_projective_eq(a.values(), b.values());
}

}  // namespace octic
