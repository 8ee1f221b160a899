#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace octic {

/// Every failure the library reports carries one of these codes. The CLI maps
/// each code to its own process exit status.
enum class ErrorCode {
  InvalidArgument,
  NotPrime,
  TransvectantOrder,
  WrongDegree,
  SingularOctic,
  NormalizerVanishes,
  UndefinedPoint,
  InterpolationDegenerate,
  InterpolationInconsistent,
  ExcludedPrime,
  DegenerateOctic,
  SingularModel,
  FiniteRootsRequired,
  ParseError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures additionally record the byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::ParseError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace octic
