// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "octic/binary_form.hpp"
#include "octic/error.hpp"
#include "octic/interpolation.hpp"
#include "octic/passage.hpp"
#include "octic/primes.hpp"
#include "octic/reduction.hpp"
#include "octic/split_octic.hpp"
#include "../test_support.hpp"

using namespace octic;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failed checks; a criterion passes when none fail.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
    for (const auto& n : notes_) out += (out.empty() ? "" : "; ") + n;
    return out;
  }

 private:
  std::vector<std::string> failures_, notes_;
};

Rational big(const char* digits) { return Rational(Integer(digits)); }

void ac1(Checks& c) {
  const auto start = Clock::now();
  const BinaryForm f = octic::fixtures::example_curve();
  const ShiodaVector j = shioda_invariants(f);
  const std::array<Rational, 9> expected{
      prime_power_product(-1, {{2, -2}, {3, 2}, {7, -1}, {19, 1}, {475549, 1}}),
      0,
      prime_power_product(+1, {{2, -9}, {7, -4}, {19, 2}, {233, 1}, {23374404412631, 1}}),
      0,
      prime_power_product(+1, {{2, -14}, {3, 2}, {7, -6}, {19, 3}, {29, 1}, {1873, 1}, {12511, 1}, {4606367, 1},
                               {8109203, 1}}),
      0,
      prime_power_product(-1, {{2, -17}, {3, 4}, {5, -1}, {7, -9}, {11, 1}, {19, 4}, {43, 1}, {47, 1}, {2381, 1},
                               {4583, 1}, {11903471, 1}, {171351716957, 1}}),
      0,
      prime_power_product(-1, {{2, -22}, {3, 1}, {5, -1}, {7, -11}, {19, 5}, {23, 1}, {50178763, 1},
                               {170651941, 1}}) *
          big("2743491486709463245193")};
  for (int k = 2; k <= 10; ++k) {
    c.expect(j.at(k) == expected[static_cast<std::size_t>(k - 2)], "J" + std::to_string(k) + " mismatch");
  }

  const Rational d = discriminant(f);
  const Rational d_expected = prime_power_product(+1, {{2, 18}, {7, 24}, {11, 12}, {19, 7}});
  c.expect(d == d_expected, "D = " + factored_rational_string(d) + ", expected " +
                                factored_rational_string(d_expected) + " (ratio " +
                                factored_rational_string(d_expected / d) + ")");

  const Rational i20 = i20_from_shioda(j);
  const Rational i20_expected =
      prime_power_product(+1, {{2, 8}, {3, 3}, {5, 3}, {7, 12}, {19, 10}, {131, 1}, {11867, 1}, {33730341419, 1}}) *
      big("471894282846669530888306233351");
  c.expect(i20 == i20_expected, "I20 mismatch");
  const double t = seconds_since(start);
  c.expect(t < 1.0, "runtime " + std::to_string(t) + " s");
}

void ac2(Checks& c) {
  const BinaryForm f = octic::fixtures::example_curve();
  c.expect(classify_reduction(f, 11).type == ReductionType::BadEllipticTimesGenus2, "p = 11 verdict");
  c.expect(classify_reduction(f, 13).type == ReductionType::PotentiallyGood, "p = 13 verdict");
  for (long p : {2L, 3L, 5L, 7L}) {
    bool rejected = false;
    try {
      classify_reduction(f, p);
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::ExcludedPrime;
    }
    c.expect(rejected, "p = " + std::to_string(p) + " accepted");
  }
}

void ac3(Checks& c) {
  const auto start = Clock::now();
  SeededOcticSampler finite(3001), infinite(3002, -25, 25, true);
  int checked = 0;
  for (int n = 0; n < 24; ++n) {
    const SplitOctic s = n % 4 == 3 ? *infinite.next() : *finite.next();
    const TsuyumineVector roots = tsuyumine_from_roots(s);
    const TsuyumineVector tables = tsuyumine_from_shioda(shioda_invariants(s.form()));
    c.expect(roots == tables, "octic " + std::to_string(n) + " differs");
    ++checked;
  }
  const double t = seconds_since(start);
  c.expect(t < 60.0, "runtime " + std::to_string(t) + " s");
  c.note(std::to_string(checked) + " octics, 6 with a root at infinity, " + std::to_string(t) + " s");
}

void ac4(Checks& c) {
  SeededOcticSampler sampler(4001);
  for (int n = 0; n < 5; ++n) {
    const SplitOctic s = *sampler.next();
    c.expect(i20_from_roots(s) == i20_from_shioda(shioda_invariants(s.form())), "octic " + std::to_string(n));
  }
  auto octic = [](std::initializer_list<long> v) {
    std::array<ProjectiveRoot, 8> r;
    std::size_t i = 0;
    for (long x : v) r.at(i++) = ProjectiveRoot::finite(x);
    return SplitOctic(r);
  };
  c.expect(!i20_from_roots(octic({2, 2, 2, -1, 0, 3, 5, 9})).is_zero(), "triple root alone: I20 = 0");
  c.expect(i20_from_roots(octic({2, 2, 2, -1, -1, 3, 5, 9})).is_zero(), "triple root plus a double root: I20 != 0");
}

void ac5(Checks& c) {
  std::mt19937_64 rng(5001);
  for (int n = 0; n < 100; ++n) {
    std::array<Rational, 9> v;
    for (auto& x : v) x = octic::fixtures::random_rational(rng, 1000);
    const ShiodaVector j(v);
    c.expect(shioda_from_tsuyumine(tsuyumine_from_shioda(j)) == j, "vector " + std::to_string(n));
  }
  const auto d = shioda_in_tsuyumine_discrepancies();
  for (const auto& x : d) {
    c.note("J" + std::to_string(x.weight) + " " + monomial_name(x.monomial, "I") + ": reference " +
           factored_rational_string(x.reference) + ", inverse " + factored_rational_string(x.computed));
  }
  Exponents j8{}, j9{};
  j8[0] = 2;
  j8[2] = 1;  // I2^2*I4
  j9[1] = 1;
  j9[4] = 1;  // I3*I6
  c.expect(d.size() == 2 && d[0].weight == 8 && d[0].monomial == j8 && d[1].weight == 9 && d[1].monomial == j9,
           "unexpected discrepancy set (" + std::to_string(d.size()) + " entries)");
}

void ac6(Checks& c) {
  auto start = Clock::now();
  {
    SeededOcticSampler sampler(6002);
    const auto r = rederive_passage_coefficients(2, sampler);
    c.expect(r.table == tsuyumine_in_shioda(2) && r.table.terms()[0].coefficient == Rational(161280), "I2 row");
  }
  {
    std::array<ProjectiveRoot, 8> a, b;
    for (int i = 0; i < 8; ++i) a[i] = ProjectiveRoot::finite(i + 1);
    b = a;
    b[7] = ProjectiveRoot::finite(9);
    FixedOcticSampler sampler({SplitOctic(a), SplitOctic(b)});
    const auto r = rederive_passage_coefficients(4, sampler);
    c.expect(r.table.terms().size() == 2 && r.table.terms()[0].coefficient == Rational(-8601600) &&
                 r.table.terms()[1].coefficient == Rational(101154816),
             "I4 row from roots 1..8 and 1..7,9");
  }
  for (int k = 3; k <= 10; ++k) {
    SeededOcticSampler sampler(6000 + static_cast<std::uint64_t>(k));
    c.expect(rederive_passage_coefficients(k, sampler).table == tsuyumine_in_shioda(k), "I" + std::to_string(k) + " row");
  }
  const double low = seconds_since(start);
  c.expect(low < 120.0, "I2..I10 took " + std::to_string(low) + " s");

  start = Clock::now();
  SeededOcticSampler sampler(6020);
  const auto r = rederive_passage_coefficients(20, sampler);
  c.expect(r.table == i20_in_shioda() && r.table.terms().size() == 102, "I20 table");
  const double high = seconds_since(start);
  c.expect(high < 600.0, "I20 took " + std::to_string(high) + " s");
  c.note("I2..I10 " + std::to_string(low) + " s, I20 " + std::to_string(high) + " s with " +
         std::to_string(r.samples_used) + " samples");
}

void ac7(Checks& c) {
  std::mt19937_64 rng(7001);
  for (int n = 0; n < 10; ++n) {
    const BinaryForm f = octic::fixtures::random_octic(rng, 7);
    Rational a, b, cc, d;
    do {
      a = octic::fixtures::random_rational(rng, 5);
      b = octic::fixtures::random_rational(rng, 5);
      cc = octic::fixtures::random_rational(rng, 5);
      d = octic::fixtures::random_rational(rng, 5);
    } while ((a * d - b * cc).is_zero());
    // M.f = f o M^-1; with N = M^-1 = [[a, b], [c, d]], det(M)^{-4k} = det(N)^{4k}.
    const Rational det_n = a * d - b * cc;
    const ShiodaVector before = shioda_invariants(f), after = shioda_invariants(f.substitute(a, b, cc, d));
    for (int k = 2; k <= 10; ++k) {
      c.expect(after.at(k) == before.at(k) * pow(det_n, 4 * k), "GL2 pair " + std::to_string(n) + " J" + std::to_string(k));
    }
    const long shift = static_cast<long>(rng() % 11) - 5;
    c.expect(weighted_projective_eq(before, shioda_invariants(f.substitute(1, shift, 0, 1))),
             "f vs f(x+c) pair " + std::to_string(n));
  }

  const ShiodaVector j = shioda_invariants(octic::fixtures::random_octic(rng, 40));
  for (const Rational lambda : {Rational(11), Rational(Integer(13), Integer(121)), Rational(-2)}) {
    for (long p : {11L, 13L}) {
      const Rational value(Integer(11 * 13 * 13), Integer(7));
      c.expect(normalized_valuation(value * pow(lambda, 20), 20, j.scaled(lambda), p) ==
                   normalized_valuation(value, 20, j, p),
               "v_Sh scaling, p = " + std::to_string(p));
    }
  }

  for (int n = 0; n < 20; ++n) {
    std::array<ProjectiveRoot, 8> roots;
    for (auto& r : roots) {
      r = {octic::fixtures::random_rational(rng, 7), octic::fixtures::random_rational(rng, 7)};
      if (r.alpha.is_zero() && r.beta.is_zero()) r.beta = 1;
    }
    if (n % 5 == 0) roots[2] = ProjectiveRoot::infinity();
    const SplitOctic s(roots);
    c.expect(discriminant(s.form()) == discriminant_from_roots(s), "discriminant octic " + std::to_string(n));
  }

  BracketMonomial odd;
  odd.pair(1, 2).pair(3, 4).pair(5, 6).pair(7, 8);
  SeededOcticSampler sampler(7002);
  c.expect(s8_sum(*sampler.next(), odd).is_zero(), "odd-exponent sum nonzero");
}

// Units mod p with pairwise distinct residues that also avoid `avoid`.
std::vector<long> distinct_units(std::mt19937_64& rng, long p, std::size_t count, std::vector<long> avoid) {
  std::vector<long> out;
  while (out.size() < count) {
    const long v = static_cast<long>(rng() % static_cast<std::uint64_t>(4 * p)) - 2 * p;
    const long residue = ((v % p) + p) % p;
    if (residue == 0) continue;
    bool clash = false;
    for (long a : avoid) clash = clash || ((a % p) + p) % p == residue;
    if (clash) continue;
    out.push_back(v);
    avoid.push_back(v);
  }
  return out;
}

void ac8(Checks& c) {
  std::mt19937_64 rng(8001);
  for (long p : {11L, 13L, 17L}) {
    for (long s : {1L, 2L}) {
      const Rational ps = pow(Rational(p), s);
      // case (i): {0, 1, a3, a4, a5, p^s a6, p^s a7}
      {
        const auto a = distinct_units(rng, p, 3, {0, 1});
        const auto b = distinct_units(rng, p, 2, {});
        const std::vector<Rational> roots{0, 1, a[0], a[1], a[2], ps * b[0], ps * b[1]};
        const ClusterSignature sig = cluster_signature(roots, p);
        const auto pos = sig.positive_pairs();
        bool shape = pos.size() == 3 && sig.clusters() == std::vector<std::vector<int>>{{0, 5, 6}};
        for (const auto& pv : pos) shape = shape && pv.valuation == Valuation(s);
        c.expect(shape, "case (i) signature, p = " + std::to_string(p));
        c.expect(classify_reduction(SplitOctic::from_finite(roots).form(), p).type ==
                     ReductionType::BadEllipticTimesGenus2,
                 "case (i) verdict, p = " + std::to_string(p) + ", s = " + std::to_string(s));
      }
      // case (ii): {0, 1, a3, p^s a4, p^s a5, 1 + p^s' a6, 1 + p^s' a7}
      {
        const long s2 = 3 - s;
        const Rational ps2 = pow(Rational(p), s2);
        const auto a = distinct_units(rng, p, 1, {0, 1});
        const auto b = distinct_units(rng, p, 2, {});
        const auto d = distinct_units(rng, p, 2, {});
        const std::vector<Rational> roots{0, 1, a[0], ps * b[0], ps * b[1], 1 + ps2 * d[0], 1 + ps2 * d[1]};
        const ClusterSignature sig = cluster_signature(roots, p);
        const bool shape = sig.positive_pairs().size() == 6 &&
                           sig.clusters() == std::vector<std::vector<int>>{{0, 3, 4}, {1, 5, 6}};
        c.expect(shape, "case (ii) signature, p = " + std::to_string(p));
        c.expect(classify_reduction(SplitOctic::from_finite(roots).form(), p).type == ReductionType::BadThreeElliptic,
                 "case (ii) verdict, p = " + std::to_string(p) + ", s = " + std::to_string(s));
      }
    }
  }
  c.note("signatures: case (i) 3 positive pairs in one 3-root cluster, case (ii) 6 pairs in two");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checks&)>>> criteria{
      {"AC1 example curve golden values", ac1},
      {"AC2 classification of the example curve", ac2},
      {"AC3 root sums agree with passage tables", ac3},
      {"AC4 I20 root sum vs Shioda expansion", ac4},
      {"AC5 inverse round trip and reference diff", ac5},
      {"AC6 interpolation rederives every table", ac6},
      {"AC7 invariance suite", ac7},
      {"AC8 cluster diagnostics", ac8},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Checks c;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS " : "FAIL ") << name;
    const std::string s = c.summary();
    if (!s.empty()) std::cout << " -- " << s;
    std::cout << std::endl;
    failed += !c.ok();
  }
  return failed ? 1 : 0;
}
