#include "jetinv/errors.hpp"

namespace jetinv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::out_of_range: return "out_of_range";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::order_mismatch: return "order_mismatch";
    case ErrorCode::order_overflow: return "order_overflow";
    case ErrorCode::singular: return "singular";
    case ErrorCode::not_regular: return "not_regular";
    case ErrorCode::base_point_mismatch: return "base_point_mismatch";
    case ErrorCode::chart_overlap: return "chart_overlap";
    case ErrorCode::parse: return "parse";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

void throw_domain(ErrorCode code, const std::string& detail) {
  throw DomainError(code, detail);
}

}  // namespace jetinv
