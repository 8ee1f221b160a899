#pragma once

#include <array>
#include <string>

#include "octic/rational.hpp"

namespace octic {

inline constexpr std::array<int, 9> kGeneratorWeights = {2, 3, 4, 5, 6, 7, 8, 9, 10};

/// Nine invariants indexed by their weight 2..10. The tag keeps Shioda and
/// Tsuyumine vectors from being mixed up.
template <class Tag>
class GradedVector {
 public:
  GradedVector() = default;
  explicit GradedVector(std::array<Rational, 9> values) : values_(std::move(values)) {}

  /// Value of weight k, 2 <= k <= 10.
  const Rational& at(int k) const { return values_.at(static_cast<std::size_t>(k - 2)); }
  Rational& at(int k) { return values_.at(static_cast<std::size_t>(k - 2)); }

  const std::array<Rational, 9>& values() const { return values_; }

  bool is_zero() const {
    for (const auto& v : values_) {
      if (!v.is_zero()) return false;
    }
    return true;
  }

  /// (lambda^k v_k)
  GradedVector scaled(const Rational& lambda) const {
    GradedVector out = *this;
    for (int k = 2; k <= 10; ++k) out.at(k) *= pow(lambda, k);
    return out;
  }

  friend bool operator==(const GradedVector&, const GradedVector&) = default;

 private:
  std::array<Rational, 9> values_{};
};

struct ShiodaTag {
  static constexpr const char* kPrefix = "J";
};
struct TsuyumineTag {
  static constexpr const char* kPrefix = "I";
};

using ShiodaVector = GradedVector<ShiodaTag>;
using TsuyumineVector = GradedVector<TsuyumineTag>;

}  // namespace octic
