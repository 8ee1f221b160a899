#include "octic/passage.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "octic/error.hpp"
#include "passage_tables.hpp"

namespace octic {
namespace {

Rational row_coefficient(const detail::RowTerm& t) {
  Rational out(t.sign);
  for (const auto& f : t.factors) out *= pow(Rational(f.base), f.exponent);
  return out;
}

WeightedMonomialTable build_row(const detail::RowSpec& row) {
  std::vector<Term> terms;
  for (const auto& t : row.terms) terms.push_back({t.exponents, row_coefficient(t)});
  return WeightedMonomialTable(row.weight, std::move(terms));
}

using Rows = std::array<std::optional<WeightedMonomialTable>, 9>;

Rows build_rows(const std::vector<detail::RowSpec>& spec) {
  Rows out;
  for (const auto& row : spec) out.at(static_cast<std::size_t>(row.weight - 2)).emplace(build_row(row));
  for (const auto& r : out) {
    if (!r) throw Error(ErrorCode::InvalidArgument, "constant table is missing a row");
  }
  return out;
}

const Rows& shipped_rows() {
  static const Rows rows = build_rows(detail::kTsuyumineInShioda);
  return rows;
}

const Rows& reference_forward_rows() {
  static const Rows rows = [] {
    std::vector<detail::RowSpec> spec = detail::kTsuyumineInShioda;
    for (auto& row : spec) {
      for (auto& t : row.terms) {
        if (t.exponents == detail::kReferenceI7J2J2J3.exponents && row.weight == 7) {
          t = detail::kReferenceI7J2J2J3;
        }
      }
    }
    return build_rows(spec);
  }();
  return rows;
}

const Rows& reference_inverse_rows() {
  static const Rows rows = build_rows(detail::kReferenceShiodaInTsuyumine);
  return rows;
}

// Each I_k is c_k J_k plus a polynomial in J2..J_{k-1}, so J_k follows by
// substituting the already inverted J2..J_{k-1}.
const Rows& inverse_rows() {
  static const Rows rows = [] {
    Rows out;
    std::array<Polynomial, 9> images{};
    for (int k = 2; k <= 10; ++k) {
      const auto& forward = *shipped_rows()[static_cast<std::size_t>(k - 2)];
      Exponents lead{};
      lead[static_cast<std::size_t>(k - 2)] = 1;
      const Rational c = forward.coefficient(lead);
      if (c.is_zero()) throw Error(ErrorCode::InvalidArgument, "passage table is not invertible");
      Polynomial rest = Polynomial::from_table(forward) - Polynomial::variable(k) * c;
      Polynomial jk = (Polynomial::variable(k) - rest.substitute(images)) * (Rational(1) / c);
      out[static_cast<std::size_t>(k - 2)].emplace(jk.to_table(k));
      images[static_cast<std::size_t>(k - 2)] = std::move(jk);
    }
    return out;
  }();
  return rows;
}

const WeightedMonomialTable& row(const Rows& rows, int k) {
  if (k < 2 || k > 10) throw Error(ErrorCode::InvalidArgument, "weight must be in 2..10, got " + std::to_string(k));
  return *rows[static_cast<std::size_t>(k - 2)];
}

}  // namespace

const WeightedMonomialTable& tsuyumine_in_shioda(int k) { return row(shipped_rows(), k); }
const WeightedMonomialTable& shioda_in_tsuyumine(int k) { return row(inverse_rows(), k); }
const WeightedMonomialTable& reference_tsuyumine_in_shioda(int k) { return row(reference_forward_rows(), k); }
const WeightedMonomialTable& reference_shioda_in_tsuyumine(int k) { return row(reference_inverse_rows(), k); }

const WeightedMonomialTable& i20_in_shioda() {
  static const WeightedMonomialTable table = [] {
    std::vector<Term> terms;
    for (const auto& t : detail::kI20InShioda) terms.push_back({t.exponents, Rational::parse(t.coefficient)});
    return WeightedMonomialTable(20, std::move(terms));
  }();
  return table;
}

TsuyumineVector tsuyumine_from_shioda(const ShiodaVector& j) {
  TsuyumineVector out;
  for (int k = 2; k <= 10; ++k) out.at(k) = tsuyumine_in_shioda(k).evaluate(j);
  return out;
}

ShiodaVector shioda_from_tsuyumine(const TsuyumineVector& i) {
  ShiodaVector out;
  for (int k = 2; k <= 10; ++k) out.at(k) = shioda_in_tsuyumine(k).evaluate(i);
  return out;
}

Rational i20_from_shioda(const ShiodaVector& j) { return i20_in_shioda().evaluate(j); }

std::vector<TableDiscrepancy> diff_tables(const WeightedMonomialTable& reference,
                                          const WeightedMonomialTable& computed) {
  std::vector<TableDiscrepancy> out;
  for (const auto& e : enumerate_monomials(computed.weight())) {
    const Rational r = reference.coefficient(e);
    const Rational c = computed.coefficient(e);
    if (r != c) out.push_back({computed.weight(), e, r, c});
  }
  return out;
}

std::vector<TableDiscrepancy> shioda_in_tsuyumine_discrepancies() {
  std::vector<TableDiscrepancy> out;
  for (int k = 2; k <= 10; ++k) {
    auto d = diff_tables(reference_shioda_in_tsuyumine(k), shioda_in_tsuyumine(k));
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

AbsoluteInvariants absolute_invariants(const TsuyumineVector& i, const Rational& discriminant) {
  if (discriminant.is_zero()) throw Error(ErrorCode::SingularOctic, "singular octic");
  if (i.at(2).is_zero() || i.at(3).is_zero()) {
    throw Error(ErrorCode::NormalizerVanishes, "normalizer vanishes");
  }
  const Rational j = discriminant / (pow(i.at(2), 2) * pow(i.at(3), 3));
  AbsoluteInvariants out;
  for (int k = 2; k <= 10; ++k) out.values[static_cast<std::size_t>(k - 2)] = i.at(k) / pow(j, k);
  return out;
}

namespace {

std::optional<Integer> exact_root(const Integer& n, unsigned long g) {
  Integer r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), g) == 0) return std::nullopt;
  return r;
}

}  // namespace

bool weighted_projective_eq(const std::array<Rational, 9>& a, const std::array<Rational, 9>& b,
                            const std::array<int, 9>& weights) {
  bool any = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_zero() != b[k].is_zero()) return false;
    any = any || !a[k].is_zero();
  }
  if (!any) throw Error(ErrorCode::UndefinedPoint, "undefined point");

  // lambda^g with g the gcd of the weights in play, from a Bezout
  // combination of the ratios b_k / a_k = lambda^{w_k}.
  long g = 0;
  std::array<long, 9> bezout{};
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_zero()) continue;
    const long w = weights[k];
    if (g == 0) {
      g = w;
      bezout[k] = 1;
      continue;
    }
    long old_r = g, r = w, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      const long q = old_r / r;
      old_r = std::exchange(r, old_r - q * r);
      old_s = std::exchange(s, old_s - q * s);
      old_t = std::exchange(t, old_t - q * t);
    }
    for (auto& c : bezout) c *= old_s;
    bezout[k] = old_t;
    g = old_r;
  }
  Rational lambda_g(1);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (bezout[k] != 0) lambda_g *= pow(b[k] / a[k], bezout[k]);
  }

  if (g % 2 == 0 && lambda_g.sign() < 0) return false;
  const auto num = exact_root(abs(lambda_g).numerator(), static_cast<unsigned long>(g));
  const auto den = exact_root(lambda_g.denominator(), static_cast<unsigned long>(g));
  if (!num || !den) return false;
  Rational root(*num, *den);
  if (lambda_g.sign() < 0) root = -root;

  auto fits = [&](const Rational& lambda) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (pow(lambda, weights[k]) * a[k] != b[k]) return false;
    }
    return true;
  };
  return fits(root) || (g % 2 == 0 && fits(-root));
}

}  // namespace octic
