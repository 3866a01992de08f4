#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jetinv {

enum class ErrorCode {
  out_of_range,
  dimension_mismatch,
  order_mismatch,
  order_overflow,
  singular,
  not_regular,
  base_point_mismatch,
  chart_overlap,
  parse,
  internal,
};

std::string_view to_string(ErrorCode code);

/// Base of every error raised by the library. `code()` is stable and
/// machine readable; `what()` carries the human readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Singular blocks, non-regular inputs, mismatched shapes.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& detail) : Error(ErrorCode::parse, detail) {}
};

/// A self-check failed. Always a bug, never a property of the input.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& detail) : Error(ErrorCode::internal, detail) {}
};

[[noreturn]] void throw_domain(ErrorCode code, const std::string& detail);

}  // namespace jetinv
