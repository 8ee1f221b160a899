#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "octic/binary_form.hpp"
#include "octic/error.hpp"
#include "octic/rational.hpp"
#include "octic/split_octic.hpp"

namespace octic::cli {

/// Coefficients c_0..c_8 of sum c_k x^k. Accepts terms like "3/2*x^5",
/// "-x", "7", with optional '*' and whitespace. Throws ParseError with the
/// offending offset, and ErrorCode::WrongDegree for exponents above 8.
std::array<Rational, 9> parse_polynomial(std::string_view text);

/// Canonical text form, highest degree first: "x^7+1786*x^5-3/2*x+5".
/// parse_polynomial(format_polynomial(c)) == c.
std::string format_polynomial(const std::array<Rational, 9>& coefficients);

/// A curve y^2 = f(x) with f of degree 7 or 8, homogenized to an octic.
/// A degree-7 f gets the root (1 : 0).
struct CurveInput {
  std::array<Rational, 9> coefficients;
  int affine_degree;
  BinaryForm form;
  std::optional<SplitOctic> roots;  // when the curve was given by its roots
};

/// Throws ErrorCode::WrongDegree unless deg f is 8, or 7 without strict_octic.
CurveInput make_curve(const std::array<Rational, 9>& coefficients, bool strict_octic);
CurveInput make_curve(const SplitOctic& roots);

/// Comma or space separated list of rationals.
std::vector<Rational> parse_rational_list(std::string_view text);
/// Comma or space separated projective roots: "a", "a/b", "inf", or "a:b".
std::vector<ProjectiveRoot> parse_root_list(std::string_view text);

/// Process exit status for a library error; 0 is success and 1 a usage error.
int exit_code(ErrorCode code);
inline constexpr int kUsageExitCode = 1;

/// Runs one command line (without the program name). All results go to out
/// as one JSON document; failures print {"error": {...}} to out as well.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace octic::cli
