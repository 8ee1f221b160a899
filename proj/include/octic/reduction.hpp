#pragma once

#include <optional>
#include <string>

#include "octic/binary_form.hpp"
#include "octic/invariant_vector.hpp"
#include "octic/rational.hpp"

namespace octic {

/// v_p(I)/w - min_k v_p(J_k)/k as an exact rational; nullopt stands for +inf.
struct NormalizedValuation {
  std::optional<Rational> value;

  bool is_infinite() const { return !value.has_value(); }
  bool is_zero() const { return value && value->is_zero(); }
  bool is_positive() const { return !value || value->sign() > 0; }
  std::string to_string() const { return value ? value->to_string() : "inf"; }
  friend bool operator==(const NormalizedValuation&, const NormalizedValuation&) = default;
};

/// Throws ErrorCode::NotPrime, ErrorCode::ExcludedPrime for p in {2, 3, 5, 7},
/// and ErrorCode::DegenerateOctic when every J_k vanishes.
NormalizedValuation normalized_valuation(const Rational& value, int weight, const ShiodaVector& j,
                                         const Integer& p);

enum class ReductionType {
  PotentiallyGood,
  BadEllipticTimesGenus2,
  BadThreeElliptic,
};

std::string reduction_type_name(ReductionType t);

struct ReductionVerdict {
  Integer prime;
  ReductionType type;
  NormalizedValuation v_discriminant;
  NormalizedValuation v_i20;
  Rational discriminant;
  Rational i20;
  std::string caveat;
};

/// The caveat attached to every verdict.
extern const char* const kReductionCaveat;

/// potentially good iff v_Sh(D) = 0; otherwise elliptic x genus-2 when
/// v_Sh(I20) = 0 and three elliptic curves when v_Sh(I20) > 0. Throws
/// ErrorCode::SingularModel when D = 0.
ReductionVerdict classify_reduction(const BinaryForm& f, const Integer& p);

}  // namespace octic
