#include "octic/split_octic.hpp"

#include <algorithm>
#include <numeric>

#include "octic/error.hpp"
#include "octic/parallel.hpp"

namespace octic {

SplitOctic::SplitOctic(std::array<ProjectiveRoot, 8> roots) : roots_(std::move(roots)) {
  for (const auto& r : roots_) {
    if (r.alpha.is_zero() && r.beta.is_zero()) {
      throw Error(ErrorCode::InvalidArgument, "(0 : 0) is not a projective root");
    }
  }
}

SplitOctic SplitOctic::from_finite(std::span<const Rational> finite_roots) {
  if (finite_roots.size() > 8) throw Error(ErrorCode::InvalidArgument, "an octic has at most 8 roots");
  std::array<ProjectiveRoot, 8> roots;
  roots.fill(ProjectiveRoot::infinity());
  for (std::size_t i = 0; i < finite_roots.size(); ++i) roots[i] = ProjectiveRoot::finite(finite_roots[i]);
  return SplitOctic(roots);
}

BinaryForm SplitOctic::form() const {
  BinaryForm f = BinaryForm::constant(1);
  for (const auto& r : roots_) f = f * BinaryForm(std::vector<Rational>{-r.alpha, r.beta});
  return f;
}

SplitOctic SplitOctic::transformed(const Rational& a, const Rational& b, const Rational& c,
                                   const Rational& d) const {
  std::array<ProjectiveRoot, 8> out;
  for (std::size_t i = 0; i < 8; ++i) {
    const auto& r = roots_[i];
    out[i] = {a * r.alpha + b * r.beta, c * r.alpha + d * r.beta};
  }
  return SplitOctic(out);
}

BracketTable::BracketTable(const SplitOctic& s) {
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      d_[i][j] = s.root(j).beta * s.root(i).alpha - s.root(i).beta * s.root(j).alpha;
    }
  }
}

void BracketMonomial::add(int i, int j, int e) {
  if (i < 0 || j < 0 || i > 7 || j > 7 || i == j) {
    throw Error(ErrorCode::InvalidArgument, "bracket labels must be distinct and in 1..8");
  }
  if (e <= 0) throw Error(ErrorCode::InvalidArgument, "bracket exponents must be positive");
  if (i > j) {
    std::swap(i, j);
    if (e % 2) sign_ = -sign_;
  }
  for (auto& f : factors_) {
    if (f.i == i && f.j == j) {
      f.exponent += e;
      return;
    }
  }
  factors_.push_back({i, j, e});
}

BracketMonomial& BracketMonomial::clique(std::initializer_list<int> labels, int e) {
  std::vector<int> sorted(labels);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = a + 1; b < sorted.size(); ++b) add(sorted[a] - 1, sorted[b] - 1, e);
  }
  return *this;
}

BracketMonomial& BracketMonomial::cross(std::initializer_list<int> left,
                                        std::initializer_list<int> right, int e) {
  for (int i : left) {
    for (int j : right) add(i - 1, j - 1, e);
  }
  return *this;
}

BracketMonomial& BracketMonomial::pair(int i, int j, int e) {
  add(i - 1, j - 1, e);
  return *this;
}

std::array<int, 8> BracketMonomial::label_degrees() const {
  std::array<int, 8> deg{};
  for (const auto& f : factors_) {
    deg[f.i] += f.exponent;
    deg[f.j] += f.exponent;
  }
  return deg;
}

int BracketMonomial::degree() const {
  const auto deg = label_degrees();
  if (!std::all_of(deg.begin(), deg.end(), [&](int d) { return d == deg[0]; })) {
    throw Error(ErrorCode::InvalidArgument, "bracket monomial is not balanced across labels");
  }
  return deg[0];
}

namespace {

// Evaluates the permutation sum on integer roots by depth-first assignment
// of sigma(0), sigma(1), ...; a factor (i j) is multiplied in as soon as both
// of its labels are placed, so partial products are shared between the
// permutations of a subtree.
class PermutationSum {
 public:
  PermutationSum(const std::array<std::array<Integer, 8>, 8>& brackets, const BracketMonomial& term)
      : by_depth_(8) {
    int max_e = 0;
    for (const auto& f : term.factors()) {
      by_depth_[static_cast<std::size_t>(f.j)].push_back(f);
      max_e = std::max(max_e, f.exponent);
    }
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        auto& p = powers_[a][b];
        p.resize(static_cast<std::size_t>(max_e) + 1);
        p[0] = 1;
        for (int e = 1; e <= max_e; ++e) p[e] = p[e - 1] * brackets[a][b];
      }
    }
  }

  Integer branch(int first) const {
    std::array<int, 8> sigma{};
    std::array<Integer, 9> partial;
    partial[0] = 1;
    unsigned used = 1u << first;
    sigma[0] = first;
    Integer total = 0;
    partial[1] = 1;
    if (!extend(1, sigma, partial)) return total;
    descend(1, used, sigma, partial, total);
    return total;
  }

 private:
  // Multiplies in the factors closed at `depth`; false once the product is 0.
  bool extend(int depth, const std::array<int, 8>& sigma, std::array<Integer, 9>& partial) const {
    Integer& p = partial[static_cast<std::size_t>(depth)];
    for (const auto& f : by_depth_[static_cast<std::size_t>(depth - 1)]) {
      p *= powers_[sigma[f.i]][sigma[f.j]][f.exponent];
    }
    return p != 0;
  }

  void descend(int depth, unsigned used, std::array<int, 8>& sigma,
               std::array<Integer, 9>& partial, Integer& total) const {
    if (depth == 8) {
      total += partial[8];
      return;
    }
    for (int v = 0; v < 8; ++v) {
      if (used & (1u << v)) continue;
      sigma[depth] = v;
      partial[depth + 1] = partial[depth];
      if (!extend(depth + 1, sigma, partial)) continue;
      descend(depth + 1, used | (1u << v), sigma, partial, total);
    }
  }

  std::vector<std::vector<BracketMonomial::Factor>> by_depth_;
  std::array<std::array<std::vector<Integer>, 8>, 8> powers_;
};

}  // namespace

Rational s8_sum(const SplitOctic& s, const BracketMonomial& term) {
  const int degree = term.degree();
  // Rescale every root to a primitive integer pair: (a_i, b_i) = c_i (alpha_i, beta_i).
  // Each summand then picks up prod_i c_i^degree.
  Rational scale(1);
  std::array<Integer, 8> a, b;
  for (int i = 0; i < 8; ++i) {
    const auto& r = s.root(i);
    Integer l = lcm(r.alpha.denominator(), r.beta.denominator());
    Integer ai = r.alpha.numerator() * (l / r.alpha.denominator());
    Integer bi = r.beta.numerator() * (l / r.beta.denominator());
    const Integer g = gcd(ai, bi);
    ai /= g;
    bi /= g;
    scale *= Rational(l, g);
    a[i] = ai;
    b[i] = bi;
  }
  std::array<std::array<Integer, 8>, 8> brackets;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) brackets[i][j] = b[j] * a[i] - b[i] * a[j];
  }
  const PermutationSum engine(brackets, term);
  std::array<Integer, 8> partial;
  parallel_for(8, [&](std::size_t first) { partial[first] = engine.branch(static_cast<int>(first)); });
  Integer total = std::accumulate(partial.begin(), partial.end(), Integer(0));
  if (term.sign() < 0) total = -total;
  return Rational(total) / pow(scale, degree);
}

const BracketMonomial& tsuyumine_monomial(int k) {
  static const std::array<BracketMonomial, 9> table = [] {
    std::array<BracketMonomial, 9> t;
    t[0].cross({1, 2}, {3, 4}).cross({5, 6}, {7, 8});
    t[1].clique({1, 2}, 2).clique({3, 4}, 2).clique({5, 6}, 2).clique({7, 8}, 2)
        .pair(1, 3).pair(2, 4).pair(5, 7).pair(6, 8);
    t[2].clique({1, 2}, 4).clique({3, 4, 5}, 2).clique({6, 7, 8}, 2);
    t[3] = t[2];
    t[3].pair(1, 5).pair(2, 6).pair(3, 7).pair(4, 8);
    t[4].clique({1, 2, 3, 4}, 2).clique({5, 6, 7, 8}, 2);
    t[5] = t[4];
    t[5].pair(1, 5).pair(2, 6).pair(3, 7).pair(4, 8);
    t[6] = t[4];
    t[6].cross({1, 2}, {5, 6}).cross({3, 4}, {7, 8});
    t[7] = t[4];
    t[7].cross({1}, {5, 6, 7}).cross({2}, {6, 7, 8}).cross({3}, {5, 7, 8}).cross({4}, {5, 6, 8});
    t[8] = t[4];
    t[8].pair(1, 5, 2).pair(2, 6, 2).pair(3, 7, 2).pair(4, 8, 2)
        .cross({1, 4}, {6, 7}).cross({2, 3}, {5, 8});
    return t;
  }();
  if (k < 2 || k > 10) throw Error(ErrorCode::InvalidArgument, "Tsuyumine invariants have weight 2..10");
  return table[static_cast<std::size_t>(k - 2)];
}

const BracketMonomial& i20_monomial() {
  static const BracketMonomial term = [] {
    BracketMonomial t;
    t.clique({4, 5, 6, 7, 8}, 2).cross({1, 2, 3}, {4, 5, 6, 7, 8}, 4);
    return t;
  }();
  return term;
}

TsuyumineVector tsuyumine_from_roots(const SplitOctic& s) {
  TsuyumineVector out;
  for (int k = 2; k <= 10; ++k) out.at(k) = s8_sum(s, tsuyumine_monomial(k));
  return out;
}

Rational i20_from_roots(const SplitOctic& s) { return s8_sum(s, i20_monomial()); }

Rational discriminant_from_roots(const SplitOctic& s) {
  const BracketTable d(s);
  Rational out(1);
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) out *= d(i, j) * d(i, j);
  }
  return out;
}

std::vector<Valuation> ClusterSignature::multiset() const {
  std::vector<Valuation> out;
  for (const auto& p : pairs) out.push_back(p.valuation);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PairValuation> ClusterSignature::positive_pairs() const {
  std::vector<PairValuation> out;
  for (const auto& p : pairs) {
    if (p.valuation > Valuation(0)) out.push_back(p);
  }
  return out;
}

std::vector<std::vector<int>> ClusterSignature::clusters() const {
  int n = 0;
  for (const auto& p : pairs) n = std::max(n, p.j + 1);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : positive_pairs()) parent[find(p.i)] = find(p.j);
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& g : groups) {
    if (g.size() > 1) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClusterSignature cluster_signature(std::span<const Rational> roots, const Integer& p) {
  require_prime(p);
  if (p == 2) throw Error(ErrorCode::ExcludedPrime, "cluster diagnostics need an odd prime");
  ClusterSignature sig{p, {}};
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      sig.pairs.push_back({static_cast<int>(i), static_cast<int>(j), padic_valuation(roots[i] - roots[j], p)});
    }
  }
  return sig;
}

ClusterSignature cluster_signature(const SplitOctic& s, const Integer& p) {
  std::vector<Rational> affine;
  for (const auto& r : s.roots()) {
    if (r.is_infinite()) throw Error(ErrorCode::FiniteRootsRequired, "finite roots required");
    affine.push_back(r.alpha / r.beta);
  }
  return cluster_signature(affine, p);
}

}  // namespace octic
