#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "octic/invariant_vector.hpp"
#include "octic/rational.hpp"

namespace octic {

/// Homogeneous binary form sum_i c_i x^i z^(n-i). Exactly n+1 coefficients are
/// stored, so the zero form still knows its degree.
class BinaryForm {
 public:
  explicit BinaryForm(int degree);
  explicit BinaryForm(std::vector<Rational> coefficients);

  static BinaryForm zero(int degree) { return BinaryForm(degree); }
  static BinaryForm constant(const Rational& c) { return BinaryForm(std::vector<Rational>{c}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^i z^(n-i).
  const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  Rational evaluate(const Rational& x, const Rational& z) const;

  /// d^a/dx^a d^b/dz^b; the result has degree n - a - b.
  BinaryForm derivative(int dx, int dz) const;

  /// f(a x + b z, c x + d z).
  BinaryForm substitute(const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d) const;

  BinaryForm& operator+=(const BinaryForm& o);
  BinaryForm& operator-=(const BinaryForm& o);
  BinaryForm& operator*=(const Rational& s);
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(BinaryForm a, const Rational& s) { return a *= s; }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) = default;

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

/// (f, g)^r with the factorial-normalized Omega process:
///   (m-r)!(n-r)!/(m! n!) * sum_i (-1)^i C(r,i) d^r f/dx^(r-i)dz^i * d^r g/dx^i dz^(r-i)
/// Throws ErrorCode::TransvectantOrder if r exceeds either degree.
BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int r);

/// The covariants the Shioda invariants are built from.
struct ShiodaCovariants {
  BinaryForm g, k, m, h, n, p, q;
};
ShiodaCovariants shioda_covariants(const BinaryForm& f);

/// J2..J10 of an octic. Products such as J5 = k.m are read as the full
/// transvectant of the two covariants, which is the only reading giving a
/// constant. Throws ErrorCode::WrongDegree unless deg f = 8.
ShiodaVector shioda_invariants(const BinaryForm& f);

/// Resultant of the dehomogenized forms f(x,1), g(x,1) taken with their
/// formal degrees; Sylvester determinant.
Rational resultant(const BinaryForm& f, const BinaryForm& g);

/// prod_{i<j} (ij)^2 for the projective roots of f, as a polynomial in the
/// coefficients: Res(f, df/dx)/a_8 after a unimodular shear z -> z + c x
/// (c = 0, 1, 2, ...) that takes no root to infinity. Throws WrongDegree
/// unless deg f = 8.
Rational discriminant(const BinaryForm& f);

}  // namespace octic
