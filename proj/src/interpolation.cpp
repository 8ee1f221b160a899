#include "octic/interpolation.hpp"

#include <string>

#include "octic/binary_form.hpp"
#include "octic/error.hpp"
#include "octic/linear_solve.hpp"
#include "octic/parallel.hpp"

namespace octic {

SeededOcticSampler::SeededOcticSampler(std::uint64_t seed, long low, long high, bool with_infinity)
    : rng_(seed), low_(low), high_(high), with_infinity_(with_infinity) {
  if (high - low + 1 < 8) throw Error(ErrorCode::InvalidArgument, "root range holds fewer than 8 integers");
}

std::optional<SplitOctic> SeededOcticSampler::next() {
  // Partial Fisher-Yates over the range; plain modulo keeps the stream
  // independent of the standard library's distributions.
  std::vector<long> pool;
  for (long v = low_; v <= high_; ++v) pool.push_back(v);
  const std::size_t count = with_infinity_ ? 7 : 8;
  std::vector<Rational> roots;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng_() % (pool.size() - i));
    std::swap(pool[i], pool[j]);
    roots.emplace_back(pool[i]);
  }
  return SplitOctic::from_finite(roots);
}

std::optional<SplitOctic> FixedOcticSampler::next() {
  if (position_ == octics_.size()) return std::nullopt;
  return octics_[position_++];
}

std::vector<Exponents> interpolation_monomials(int weight) {
  if (weight == 20) return monomial_basis(20);
  if (weight < 2 || weight > 10) {
    throw Error(ErrorCode::InvalidArgument, "target weight must be 2..10 or 20, got " + std::to_string(weight));
  }
  return enumerate_monomials(weight);
}

InterpolationResult rederive_passage_coefficients(int weight, OcticSampler& sampler,
                                                  const InterpolationOptions& options) {
  const auto monomials = interpolation_monomials(weight);
  const BracketMonomial& term = weight == 20 ? i20_monomial() : tsuyumine_monomial(weight);

  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  auto add_rows = [&](std::size_t count) {
    std::vector<SplitOctic> batch;
    while (batch.size() < count) {
      auto s = sampler.next();
      if (!s) break;
      batch.push_back(std::move(*s));
    }
    const std::size_t first = rows.size();
    rows.resize(first + batch.size());
    rhs.resize(first + batch.size());
    parallel_for(batch.size(), [&](std::size_t i) {
      const ShiodaVector j = shioda_invariants(batch[i].form());
      std::vector<Rational> row;
      row.reserve(monomials.size());
      for (const auto& e : monomials) row.push_back(evaluate_monomial(e, j.values()));
      rows[first + i] = std::move(row);
      rhs[first + i] = s8_sum(batch[i], term);
    });
    return batch.size();
  };

  add_rows(options.initial_samples ? options.initial_samples : monomials.size());
  for (int attempt = 0;; ++attempt) {
    if (rows.size() >= monomials.size()) {
      const LinearSolution sol = solve_exact(rows, rhs);
      if (sol.solved) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < monomials.size(); ++i) terms.push_back({monomials[i], sol.x[i]});
        return {WeightedMonomialTable(weight, std::move(terms)), rows.size()};
      }
    }
    if (attempt == options.max_retries || add_rows(options.retry_batch) == 0) {
      throw Error(ErrorCode::InterpolationDegenerate, "interpolation degenerate");
    }
  }
}

}  // namespace octic
