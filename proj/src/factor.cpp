#include <algorithm>
#include <map>
#include <optional>

#include "octic/primes.hpp"

namespace octic {

namespace {

std::vector<unsigned long> primes_below(unsigned long bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<unsigned long> out;
  for (unsigned long i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

// Brent's cycle finding on x -> x^2 + c. Returns a proper factor, or nullopt
// when the budget runs out or the constant c fails.
std::optional<Integer> brent_rho(const Integer& n, unsigned long c, std::uint64_t& budget) {
  constexpr std::uint64_t kBatch = 128;
  Integer y = 2, x, ys, q = 1, g = 1;
  const Integer cz = c;
  auto step = [&](Integer& v) {
    v = v * v + cz;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  std::uint64_t r = 1;
  while (g == 1) {
    x = y;
    if (budget < r) return std::nullopt;
    budget -= r;
    for (std::uint64_t i = 0; i < r; ++i) step(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t m = std::min(kBatch, r - k);
      if (budget < m) return std::nullopt;
      budget -= m;
      for (std::uint64_t i = 0; i < m; ++i) {
        step(y);
        Integer diff = x - y;
        q = q * abs(diff) % n;
      }
      g = gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    // Batch overshot; replay one step at a time.
    do {
      if (budget == 0) return std::nullopt;
      --budget;
      step(ys);
      Integer diff = x - ys;
      g = gcd(abs(diff), n);
    } while (g == 1);
  }
  if (g == n) return std::nullopt;
  return g;
}

class Collector {
 public:
  void add(const Integer& base, unsigned long e, Certainty c) {
    auto [it, inserted] = entries_.try_emplace(base, Entry{0, c});
    it->second.exponent += e;
    if (!inserted && c != Certainty::Proven) it->second.certainty = c;
  }

  std::vector<Factor> take() const {
    std::vector<Factor> out;
    for (const auto& [base, entry] : entries_) out.push_back({base, entry.exponent, entry.certainty});
    return out;
  }

 private:
  struct Entry {
    unsigned long exponent;
    Certainty certainty;
  };
  std::map<Integer, Entry> entries_;
};

void split(const Integer& n, unsigned long e, std::uint64_t& budget, Collector& out) {
  if (n == 1) return;
  const Certainty c = primality_certainty(n);
  if (c != Certainty::Unresolved) {
    out.add(n, e, c);
    return;
  }
  // Perfect powers defeat rho; take the root first.
  for (unsigned long k = mpz_perfect_power_p(n.get_mpz_t()) ? mpz_sizeinbase(n.get_mpz_t(), 2) : 1; k >= 2; --k) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      split(root, e * k, budget, out);
      return;
    }
  }
  for (unsigned long c = 1; c < 64; ++c) {
    if (auto d = brent_rho(n, c, budget)) {
      const Integer other = n / *d;
      split(*d, e, budget, out);
      split(other, e, budget, out);
      return;
    }
    if (budget == 0) break;
  }
  out.add(n, e, Certainty::Unresolved);
}

}  // namespace

Integer FactoredInteger::product() const {
  Integer out = sign;
  for (const auto& f : factors) out *= pow(f.base, f.exponent);
  return out;
}

bool FactoredInteger::fully_certified() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const Factor& f) { return f.certainty != Certainty::Unresolved; });
}

std::string FactoredInteger::to_string() const {
  if (sign == 0) return "0";
  std::string out = sign < 0 ? "-" : "";
  if (factors.empty()) return out + "1";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    const auto& f = factors[i];
    const std::string b = f.base.get_str();
    out += f.certainty == Certainty::Unresolved ? "[" + b + "]" : b;
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

FactoredInteger factor_for_display(const Integer& n, const FactorBudget& budget) {
  FactoredInteger result;
  result.sign = sgn(n);
  if (result.sign == 0) return result;

  Integer rest = abs(n);
  Collector collected;
  static const std::vector<unsigned long> small = primes_below(100000);
  for (unsigned long p : small) {
    if (p > budget.trial_bound) break;
    if (rest == 1) break;
    const unsigned long e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), Integer(p).get_mpz_t());
    if (e) collected.add(p, e, Certainty::Proven);
  }
  std::uint64_t remaining = budget.rho_iterations;
  split(rest, 1, remaining, collected);
  result.factors = collected.take();
  return result;
}

std::string factored_rational_string(const Rational& x, const FactorBudget& budget) {
  if (x.is_zero()) return "0";
  const FactoredInteger num = factor_for_display(x.numerator(), budget);
  const FactoredInteger den = factor_for_display(x.denominator(), budget);
  std::vector<std::pair<Factor, bool>> merged;
  for (const auto& f : num.factors) merged.push_back({f, false});
  for (const auto& f : den.factors) merged.push_back({f, true});
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first.base < b.first.base; });
  std::string out = x.sign() < 0 ? "-" : "";
  if (merged.empty()) return out + "1";
  for (std::size_t i = 0; i < merged.size(); ++i) {
    const auto& [f, inverted] = merged[i];
    if (i) out += "*";
    const std::string b = f.base.get_str();
    out += f.certainty == Certainty::Unresolved ? "[" + b + "]" : b;
    if (inverted) {
      out += "^-" + std::to_string(f.exponent);
    } else if (f.exponent != 1) {
      out += "^" + std::to_string(f.exponent);
    }
  }
  return out;
}

}  // namespace octic
