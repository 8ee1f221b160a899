#include "octic/reduction.hpp"

#include "octic/error.hpp"
#include "octic/passage.hpp"
#include "octic/primes.hpp"

namespace octic {

const char* const kReductionCaveat =
    "conditional: assumes the reduction of the Jacobian of the stable model is a principally "
    "polarized abelian threefold; this is not checked";

std::string reduction_type_name(ReductionType t) {
  switch (t) {
    case ReductionType::PotentiallyGood: return "PotentiallyGood";
    case ReductionType::BadEllipticTimesGenus2: return "BadEllipticTimesGenus2";
    case ReductionType::BadThreeElliptic: return "BadThreeElliptic";
  }
  return "unknown";
}

NormalizedValuation normalized_valuation(const Rational& value, int weight, const ShiodaVector& j,
                                         const Integer& p) {
  require_prime(p);
  if (p <= 7) throw Error(ErrorCode::ExcludedPrime, "requires external HSOP");
  if (weight <= 0) throw Error(ErrorCode::InvalidArgument, "weight must be positive");
  std::optional<Rational> minimum;
  for (int k = 2; k <= 10; ++k) {
    const Valuation v = padic_valuation(j.at(k), p);
    if (v.is_infinite()) continue;
    const Rational r(Integer(v.value()), Integer(k));
    if (!minimum || r < *minimum) minimum = r;
  }
  if (!minimum) throw Error(ErrorCode::DegenerateOctic, "degenerate octic");
  const Valuation v = padic_valuation(value, p);
  if (v.is_infinite()) return {};
  return {Rational(Integer(v.value()), Integer(weight)) - *minimum};
}

ReductionVerdict classify_reduction(const BinaryForm& f, const Integer& p) {
  require_prime(p);
  if (p <= 7) throw Error(ErrorCode::ExcludedPrime, "requires external HSOP");
  const ShiodaVector j = shioda_invariants(f);
  const Rational d = discriminant(f);
  if (d.is_zero()) throw Error(ErrorCode::SingularModel, "singular model");
  const Rational i20 = i20_from_shioda(j);
  ReductionVerdict out{p, ReductionType::PotentiallyGood, normalized_valuation(d, 14, j, p),
                       normalized_valuation(i20, 20, j, p), d, i20, kReductionCaveat};
  if (!out.v_discriminant.is_zero()) {
    out.type = out.v_i20.is_zero() ? ReductionType::BadEllipticTimesGenus2 : ReductionType::BadThreeElliptic;
  }
  return out;
}

}  // namespace octic
