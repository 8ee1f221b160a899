#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "octic/rational.hpp"

namespace octic {

/// Element of Z u {+inf}. The infinite value is a distinct state, never a
/// sentinel number, so a vanishing invariant cannot be mistaken for a unit.
class Valuation {
 public:
  constexpr explicit Valuation(long value) : value_(value), infinite_(false) {}
  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return infinite_; }
  long value() const;

  friend Valuation operator+(Valuation a, Valuation b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Valuation a, Valuation b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  constexpr Valuation() : value_(0), infinite_(true) {}
  long value_;
  bool infinite_;
};

/// How well a primality verdict is backed.
enum class Certainty {
  Proven,      // trial division, or BPSW below 2^64 where it is exact
  Probable,    // passed BPSW above 2^64
  Unresolved,  // composite the factoring budget could not split
};

/// Baillie-PSW: strong base-2 Miller-Rabin plus strong Lucas-Selfridge.
bool is_probable_prime(const Integer& n);

/// BPSW verdict together with what it is worth for this size of n.
Certainty primality_certainty(const Integer& n);

/// Throws ErrorCode::NotPrime unless p passes BPSW.
void require_prime(const Integer& p);

/// v_p(x) = v_p(num) - v_p(den), +inf for x = 0.
Valuation padic_valuation(const Rational& x, const Integer& p);

struct FactorBudget {
  unsigned long trial_bound = 10000;
  std::uint64_t rho_iterations = 10'000'000;
};

struct Factor {
  Integer base;
  unsigned long exponent;
  Certainty certainty;
};

struct FactoredInteger {
  int sign = 1;  // +1 or -1; the zero integer has sign 0 and no factors
  std::vector<Factor> factors;  // bases strictly increasing

  Integer product() const;
  bool fully_certified() const;
  /// "-2^14*3*5^2*7"; unresolved composites are wrapped as "[c]".
  std::string to_string() const;
};

/// Trial division to budget.trial_bound, then Brent's variant of Pollard rho
/// with at most budget.rho_iterations polynomial steps in total. Never fails:
/// what cannot be split is returned with Certainty::Unresolved.
FactoredInteger factor_for_display(const Integer& n, const FactorBudget& budget = {});

/// num and den factored separately and merged with negative exponents for
/// the denominator, e.g. "-2^-2*3^2*7^-1*19*475549".
std::string factored_rational_string(const Rational& x, const FactorBudget& budget = {});

}  // namespace octic
