#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pubculture {

enum class ErrorCode {
  UnknownAuthor,
  AuthorNotOnRecord,
  NotFound,
  ValidationFailed,
  SchemaError,
  StoreError,
  Conflict,
  BadRequest,
  Unavailable,
  Internal,
};

/// Machine-readable name used in JSON error bodies and CLI output.
std::string_view code_name(ErrorCode code);

/// HTTP status associated with an error code (400, 404, 409, 500 or 503).
int http_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pubculture
