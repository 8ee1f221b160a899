#include "octic/binary_form.hpp"

#include <algorithm>

#include "octic/error.hpp"

namespace octic {

namespace {

Integer factorial(int n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// Falling factorial n (n-1) ... (n-k+1).
Integer falling(int n, int k) {
  Integer out = 1;
  for (int i = 0; i < k; ++i) out *= n - i;
  return out;
}

}  // namespace

BinaryForm::BinaryForm(int degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative form degree");
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
}

BinaryForm::BinaryForm(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "a form needs at least one coefficient");
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

Rational BinaryForm::evaluate(const Rational& x, const Rational& z) const {
  const int n = degree();
  Rational out(0);
  for (int i = 0; i <= n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    out += coeffs_[i] * pow(x, i) * pow(z, n - i);
  }
  return out;
}

BinaryForm BinaryForm::derivative(int dx, int dz) const {
  const int n = degree();
  if (dx < 0 || dz < 0 || dx + dz > n) {
    throw Error(ErrorCode::InvalidArgument, "derivative order exceeds degree");
  }
  BinaryForm out(n - dx - dz);
  for (int i = dx; i <= n - dz; ++i) {
    if (coeffs_[i].is_zero()) continue;
    out[i - dx] = coeffs_[i] * Rational(Integer(falling(i, dx) * falling(n - i, dz)));
  }
  return out;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm out(a.degree() + b.degree());
  for (int i = 0; i <= a.degree(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
  if (o.degree() != degree()) throw Error(ErrorCode::InvalidArgument, "adding forms of different degree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) {
  if (o.degree() != degree()) throw Error(ErrorCode::InvalidArgument, "subtracting forms of different degree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

BinaryForm& BinaryForm::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

BinaryForm BinaryForm::substitute(const Rational& a, const Rational& b, const Rational& c,
                                  const Rational& d) const {
  const int n = degree();
  const BinaryForm first(std::vector<Rational>{b, a});   // a x + b z
  const BinaryForm second(std::vector<Rational>{d, c});  // c x + d z
  std::vector<BinaryForm> first_pow{BinaryForm::constant(1)};
  std::vector<BinaryForm> second_pow{BinaryForm::constant(1)};
  for (int i = 1; i <= n; ++i) {
    first_pow.push_back(first_pow.back() * first);
    second_pow.push_back(second_pow.back() * second);
  }
  BinaryForm out(n);
  for (int i = 0; i <= n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    out += first_pow[i] * second_pow[n - i] * coeffs_[i];
  }
  return out;
}

std::string BinaryForm::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ", ";
    out += coeffs_[i].to_string();
  }
  return out + "]";
}

BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int r) {
  const int m = f.degree();
  const int n = g.degree();
  if (r < 0 || r > std::min(m, n)) {
    throw Error(ErrorCode::TransvectantOrder, "transvectant order exceeds degree");
  }
  BinaryForm sum(m + n - 2 * r);
  if (f.is_zero() || g.is_zero()) return sum;
  for (int i = 0; i <= r; ++i) {
    BinaryForm term = f.derivative(r - i, i) * g.derivative(i, r - i);
    Rational scale(binomial(r, i));
    if (i % 2) scale = -scale;
    sum += term * scale;
  }
  sum *= Rational(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n));
  return sum;
}

namespace {

void require_octic(const BinaryForm& f) {
  if (f.degree() != 8) {
    throw Error(ErrorCode::WrongDegree,
                "expected a binary octic, got degree " + std::to_string(f.degree()));
  }
}

// Full transvectant of two covariants of equal degree: a constant.
Rational pairing(const BinaryForm& a, const BinaryForm& b) { return transvectant(a, b, a.degree())[0]; }

}  // namespace

ShiodaCovariants shioda_covariants(const BinaryForm& f) {
  require_octic(f);
  ShiodaCovariants c{transvectant(f, f, 4), transvectant(f, f, 6), BinaryForm(0), BinaryForm(0),
                     BinaryForm(0), BinaryForm(0), BinaryForm(0)};
  c.m = transvectant(f, c.k, 4);
  c.h = transvectant(c.k, c.k, 2);
  c.n = transvectant(f, c.h, 4);
  c.p = transvectant(c.g, c.k, 4);
  c.q = transvectant(c.g, c.h, 4);
  return c;
}

ShiodaVector shioda_invariants(const BinaryForm& f) {
  const ShiodaCovariants c = shioda_covariants(f);
  ShiodaVector J;
  J.at(2) = transvectant(f, f, 8)[0];
  J.at(3) = transvectant(f, c.g, 8)[0];
  J.at(4) = transvectant(c.k, c.k, 4)[0];
  J.at(5) = pairing(c.k, c.m);
  J.at(6) = transvectant(c.k, c.h, 4)[0];
  J.at(7) = pairing(c.m, c.h);
  J.at(8) = pairing(c.h, c.p);
  J.at(9) = pairing(c.h, c.n);
  J.at(10) = pairing(c.h, c.q);
  return J;
}

Rational resultant(const BinaryForm& f, const BinaryForm& g) {
  const int m = f.degree();
  const int n = g.degree();
  const int size = m + n;
  if (size == 0) return Rational(1);
  std::vector<std::vector<Rational>> mat(static_cast<std::size_t>(size),
                                         std::vector<Rational>(static_cast<std::size_t>(size)));
  // Rows hold coefficients from the leading (x^deg) term down.
  for (int row = 0; row < n; ++row) {
    for (int i = 0; i <= m; ++i) mat[row][row + i] = f[m - i];
  }
  for (int row = 0; row < m; ++row) {
    for (int i = 0; i <= n; ++i) mat[n + row][row + i] = g[n - i];
  }
  Rational det(1);
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    while (pivot < size && mat[pivot][col].is_zero()) ++pivot;
    if (pivot == size) return Rational(0);
    if (pivot != col) {
      std::swap(mat[pivot], mat[col]);
      det = -det;
    }
    det *= mat[col][col];
    for (int row = col + 1; row < size; ++row) {
      if (mat[row][col].is_zero()) continue;
      const Rational factor = mat[row][col] / mat[col][col];
      for (int j = col; j < size; ++j) mat[row][j] -= factor * mat[col][j];
    }
  }
  return det;
}

Rational discriminant(const BinaryForm& f) {
  require_octic(f);
  if (f.is_zero()) return Rational(0);
  for (long c = 0;; ++c) {
    // New leading coefficient of f(x, z + c x) is f(1, c).
    if (f.evaluate(Rational(1), Rational(c)).is_zero()) continue;
    const BinaryForm sheared = c == 0 ? f : f.substitute(1, 0, Rational(c), 1);
    return resultant(sheared, sheared.derivative(1, 0)) / sheared[8];
  }
}

}  // namespace octic
