#pragma once

#include <array>
#include <initializer_list>
#include <span>
#include <vector>

#include "octic/binary_form.hpp"
#include "octic/invariant_vector.hpp"
#include "octic/primes.hpp"
#include "octic/rational.hpp"

namespace octic {

/// Projective point (alpha : beta), contributing the linear factor
/// beta x - alpha z. (1 : 0) is the root at infinity.
struct ProjectiveRoot {
  Rational alpha;
  Rational beta;

  static ProjectiveRoot finite(const Rational& a) { return {a, Rational(1)}; }
  static ProjectiveRoot infinity() { return {Rational(1), Rational(0)}; }
  bool is_infinite() const { return beta.is_zero(); }
};

/// A binary octic given by its eight roots.
class SplitOctic {
 public:
  explicit SplitOctic(std::array<ProjectiveRoot, 8> roots);
  static SplitOctic from_finite(std::span<const Rational> finite_roots);  // pads with infinity

  const std::array<ProjectiveRoot, 8>& roots() const { return roots_; }
  const ProjectiveRoot& root(int i) const { return roots_[static_cast<std::size_t>(i)]; }

  /// prod_i (beta_i x - alpha_i z)
  BinaryForm form() const;

  /// Roots moved by M = [[a, b], [c, d]]: (alpha, beta) -> (a alpha + b beta, c alpha + d beta).
  SplitOctic transformed(const Rational& a, const Rational& b, const Rational& c,
                         const Rational& d) const;

 private:
  std::array<ProjectiveRoot, 8> roots_;
};

/// (ij) = beta_j alpha_i - beta_i alpha_j for all ordered pairs; d(j,i) = -d(i,j).
class BracketTable {
 public:
  explicit BracketTable(const SplitOctic& s);
  const Rational& operator()(int i, int j) const { return d_[i][j]; }

 private:
  std::array<std::array<Rational, 8>, 8> d_;
};

/// sign * prod (ij)^e over index pairs i < j (0-based), the summand of an
/// S8-symmetrized invariant. Built from the bracket shorthands
/// (i1...ir) and (i1...ir, j1...js) with 1-based labels.
class BracketMonomial {
 public:
  struct Factor {
    int i, j;  // i < j
    int exponent;
  };

  BracketMonomial() = default;

  /// (i1 ... ir)^e
  BracketMonomial& clique(std::initializer_list<int> labels, int e = 1);
  /// (i1 ... ir, j1 ... js)^e
  BracketMonomial& cross(std::initializer_list<int> left, std::initializer_list<int> right, int e = 1);
  /// (ij)^e
  BracketMonomial& pair(int i, int j, int e = 1);

  int sign() const { return sign_; }
  const std::vector<Factor>& factors() const { return factors_; }
  /// Number of bracket factors each label takes part in; the invariant's
  /// degree when all labels agree.
  std::array<int, 8> label_degrees() const;
  /// Common label degree; throws ErrorCode::InvalidArgument if the labels
  /// disagree (the sum would not be an invariant).
  int degree() const;

 private:
  void add(int i, int j, int e);
  int sign_ = 1;
  std::vector<Factor> factors_;
};

/// sum over all 40320 relabelings sigma of prod (sigma(i) sigma(j))^e.
/// Exact; blocks of permutations may be summed on several threads.
Rational s8_sum(const SplitOctic& s, const BracketMonomial& term);

/// The monomials whose S8 sums are I2 ... I10, and I20.
const BracketMonomial& tsuyumine_monomial(int k);
const BracketMonomial& i20_monomial();

TsuyumineVector tsuyumine_from_roots(const SplitOctic& s);
Rational i20_from_roots(const SplitOctic& s);
Rational discriminant_from_roots(const SplitOctic& s);

struct PairValuation {
  int i, j;  // 0-based, i < j
  Valuation valuation;
};

/// Valuations of all pairwise root differences of an affine model. Purely
/// diagnostic: no normalization of the model is attempted.
struct ClusterSignature {
  Integer prime;
  std::vector<PairValuation> pairs;

  /// Sorted multiset of the pair valuations.
  std::vector<Valuation> multiset() const;
  /// Pairs with positive valuation.
  std::vector<PairValuation> positive_pairs() const;
  /// Classes of roots joined by positive-valuation differences (the proper
  /// clusters below the top level, singletons omitted).
  std::vector<std::vector<int>> clusters() const;
};

/// Throws ErrorCode::FiniteRootsRequired if any root is at infinity, and
/// ErrorCode::ExcludedPrime for p = 2.
ClusterSignature cluster_signature(const SplitOctic& s, const Integer& p);
/// Same for the roots of an affine model y^2 = prod (x - a_i).
ClusterSignature cluster_signature(std::span<const Rational> roots, const Integer& p);

}  // namespace octic
