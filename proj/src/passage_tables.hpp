#pragma once

#include <vector>

#include "octic/monomial_table.hpp"
#include "octic/rational.hpp"

namespace octic::detail {

struct RowTerm {
  Exponents exponents;
  int sign;
  std::vector<PrimePower> factors;
};

struct RowSpec {
  int weight;
  std::vector<RowTerm> terms;
};

struct DecimalTerm {
  Exponents exponents;
  const char* coefficient;  // "num/den"
};

extern const std::vector<RowSpec> kTsuyumineInShioda;
extern const std::vector<RowSpec> kReferenceShiodaInTsuyumine;
extern const std::vector<DecimalTerm> kI20InShioda;
extern const RowTerm kReferenceI7J2J2J3;

}  // namespace octic::detail
