#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "octic/invariant_vector.hpp"
#include "octic/rational.hpp"

namespace octic {

/// Exponents over the nine generators of weights 2..10.
using Exponents = std::array<int, 9>;

int weighted_degree(const Exponents& e);
std::string monomial_name(const Exponents& e, std::string_view prefix);

/// All monomials of the given weighted degree, lexicographically descending
/// in (e2, ..., e10): J2^10 first, J10^2 last for weight 20.
std::vector<Exponents> enumerate_monomials(int weight);

/// True unless the monomial is divisible by J8^2, J8J9, J8J10, J9J10 or
/// J10^2, the leading terms of the five Shioda relations.
bool is_standard_monomial(const Exponents& e);

/// enumerate_monomials filtered by is_standard_monomial. Same size as the
/// full enumeration below weight 16; 102 of 107 monomials at weight 20.
std::vector<Exponents> monomial_basis(int weight);

Rational evaluate_monomial(const Exponents& e, const std::array<Rational, 9>& values);

struct Term {
  Exponents exponents;
  Rational coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

/// sum c_m * m over monomials m of one weighted degree.
class WeightedMonomialTable {
 public:
  WeightedMonomialTable(int weight, std::vector<Term> terms);

  int weight() const { return weight_; }
  const std::vector<Term>& terms() const { return terms_; }

  /// Coefficient of a monomial, zero when absent.
  Rational coefficient(const Exponents& e) const;

  Rational evaluate(const std::array<Rational, 9>& values) const;
  template <class Tag>
  Rational evaluate(const GradedVector<Tag>& v) const { return evaluate(v.values()); }

  /// {"weight": w, "terms": [{"exponents": [e2..e10], "coefficient": "num/den"}]}
  std::string to_json() const;
  static WeightedMonomialTable from_json(std::string_view text);

  friend bool operator==(const WeightedMonomialTable&, const WeightedMonomialTable&) = default;

 private:
  int weight_;
  std::vector<Term> terms_;  // lex-descending, zero coefficients dropped
};

/// Sparse polynomial over Q in nine weighted variables; only what the
/// table inversion needs.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial variable(int k);  // generator of weight k
  static Polynomial constant(const Rational& c);
  static Polynomial from_table(const WeightedMonomialTable& t);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Replaces each generator k by images[k-2].
  Polynomial substitute(const std::array<Polynomial, 9>& images) const;

  /// Throws unless every term has weighted degree `weight`.
  WeightedMonomialTable to_table(int weight) const;

  const std::map<Exponents, Rational>& terms() const { return terms_; }

 private:
  void add_term(const Exponents& e, const Rational& c);
  std::map<Exponents, Rational> terms_;
};

}  // namespace octic
