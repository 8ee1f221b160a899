#include "octic/rational.hpp"

#include <cctype>
#include <ostream>

#include "octic/error.hpp"

namespace octic {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::NotPrime: return "not_prime";
    case ErrorCode::TransvectantOrder: return "transvectant_order";
    case ErrorCode::WrongDegree: return "wrong_degree";
    case ErrorCode::SingularOctic: return "singular_octic";
    case ErrorCode::NormalizerVanishes: return "normalizer_vanishes";
    case ErrorCode::UndefinedPoint: return "undefined_point";
    case ErrorCode::InterpolationDegenerate: return "interpolation_degenerate";
    case ErrorCode::InterpolationInconsistent: return "interpolation_inconsistent";
    case ErrorCode::ExcludedPrime: return "excluded_prime";
    case ErrorCode::DegenerateOctic: return "degenerate_octic";
    case ErrorCode::SingularModel: return "singular_model";
    case ErrorCode::FiniteRootsRequired: return "finite_roots_required";
    case ErrorCode::ParseError: return "parse_error";
  }
  return "unknown";
}

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::InvalidArgument, "malformed rational \"" + std::string(text) + "\"");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (negative) n = -n;
  return Rational(n, d);
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  q_ /= o.q_;
  return *this;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero to a negative power");
    return Rational(pow(base.denominator(), static_cast<unsigned long>(-exponent)),
                    pow(base.numerator(), static_cast<unsigned long>(-exponent)));
  }
  const auto e = static_cast<unsigned long>(exponent);
  return Rational(pow(base.numerator(), e), pow(base.denominator(), e));
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

Rational prime_power_product(int sign, std::initializer_list<PrimePower> factors) {
  Rational out(sign < 0 ? -1 : 1);
  for (const auto& f : factors) out *= pow(Rational(f.base), f.exponent);
  return out;
}

}  // namespace octic
