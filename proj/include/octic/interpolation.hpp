#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "octic/monomial_table.hpp"
#include "octic/split_octic.hpp"

namespace octic {

/// Source of split octics for the interpolation harness.
class OcticSampler {
 public:
  virtual ~OcticSampler() = default;
  /// nullopt once the sampler is exhausted.
  virtual std::optional<SplitOctic> next() = 0;
};

/// Eight distinct integer roots drawn from {low, ..., high}. Draws use only
/// the raw mt19937_64 stream, so a seed gives the same octics everywhere.
/// With with_infinity the eighth root is (1 : 0) instead.
class SeededOcticSampler : public OcticSampler {
 public:
  explicit SeededOcticSampler(std::uint64_t seed, long low = -25, long high = 25, bool with_infinity = false);
  std::optional<SplitOctic> next() override;

 private:
  std::mt19937_64 rng_;
  long low_, high_;
  bool with_infinity_;
};

class FixedOcticSampler : public OcticSampler {
 public:
  explicit FixedOcticSampler(std::vector<SplitOctic> octics) : octics_(std::move(octics)) {}
  std::optional<SplitOctic> next() override;

 private:
  std::vector<SplitOctic> octics_;
  std::size_t position_ = 0;
};

struct InterpolationOptions {
  std::size_t initial_samples = 0;  // first batch of rows; 0 means one per unknown
  std::size_t retry_batch = 8;    // rows added per retry
  int max_retries = 4;
};

struct InterpolationResult {
  WeightedMonomialTable table;
  std::size_t samples_used;
};

/// Unknown monomials for a target weight: all monomials for 2..10, the 102
/// standard ones for 20.
std::vector<Exponents> interpolation_monomials(int weight);

/// Rebuilds the expression of I_weight (weight 2..10, or 20 for I20) in the
/// Shioda invariants from sampled octics: root sums on one side, Shioda
/// monomials on the other, solved exactly. Throws
/// ErrorCode::InterpolationDegenerate if the system stays rank deficient
/// after max_retries batches or the sampler runs dry.
InterpolationResult rederive_passage_coefficients(int weight, OcticSampler& sampler,
                                                  const InterpolationOptions& options = {});

}  // namespace octic
