#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mlpl {

enum class ErrorCode {
  Parse,
  Validation,
  Domain,
  Io,
  Fit,
  Usage,
};

// Stable tag printed by the CLI in front of every error message.
constexpr std::string_view error_tag(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "E_PARSE";
    case ErrorCode::Validation: return "E_VALIDATION";
    case ErrorCode::Domain: return "E_DOMAIN";
    case ErrorCode::Io: return "E_IO";
    case ErrorCode::Fit: return "E_FIT";
    case ErrorCode::Usage: return "E_USAGE";
  }
  return "E_UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ErrorCode::Parse, what) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& what)
      : Error(ErrorCode::Validation, what) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(ErrorCode::Io, what) {}
};

}  // namespace mlpl
