#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace es_spectra {

enum class ErrorCode {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  InvalidParameter,
  Disconnected,
  NotConnected,
  NonPositiveDegree,
  NoConvergence,
  UnsupportedFamily,
  UnsupportedScheme,
  NotApplicable,
  LengthMismatch,
  DegenerateVariance,
  Parse,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NonPositiveDegree: return "NonPositiveDegree";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::UnsupportedScheme: return "UnsupportedScheme";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DegenerateVariance: return "DegenerateVariance";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

/// Single exception type for the library; `code()` tells callers what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Edge-list syntax or content error, tagged with the 1-based input line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace es_spectra
