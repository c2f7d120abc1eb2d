#pragma once

#include <stdexcept>
#include <string>

namespace dicolor {

enum class ErrorCode {
  self_loop,
  vertex_out_of_range,
  duplicate_edge,
  invalid_argument,
  length_mismatch,
  precondition,
  pattern_found,
  iteration_cap,
  size_cap,
  fallback_exhausted,
  parse,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::self_loop: return "self-loop";
    case ErrorCode::vertex_out_of_range: return "vertex-out-of-range";
    case ErrorCode::duplicate_edge: return "duplicate-edge";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::length_mismatch: return "length-mismatch";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::pattern_found: return "pattern-found";
    case ErrorCode::iteration_cap: return "iteration-cap";
    case ErrorCode::size_cap: return "size-cap";
    case ErrorCode::fallback_exhausted: return "fallback-exhausted";
    case ErrorCode::parse: return "parse";
  }
  return "unknown";
}

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dicolor
