#include "pubculture/error.hpp"

namespace pubculture {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownAuthor: return "unknown_author";
    case ErrorCode::AuthorNotOnRecord: return "author_not_on_record";
    case ErrorCode::NotFound: return "not_found";
    case ErrorCode::ValidationFailed: return "validation_failed";
    case ErrorCode::SchemaError: return "schema_error";
    case ErrorCode::StoreError: return "store_error";
    case ErrorCode::Conflict: return "conflict";
    case ErrorCode::BadRequest: return "bad_request";
    case ErrorCode::Unavailable: return "unavailable";
    case ErrorCode::Internal: return "internal";
  }
  return "internal";
}

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownAuthor:
    case ErrorCode::NotFound:
      return 404;
    case ErrorCode::AuthorNotOnRecord:
    case ErrorCode::ValidationFailed:
    case ErrorCode::SchemaError:
    case ErrorCode::BadRequest:
      return 400;
    case ErrorCode::Conflict:
      return 409;
    case ErrorCode::Unavailable:
      return 503;
    case ErrorCode::StoreError:
    case ErrorCode::Internal:
      return 500;
  }
  return 500;
}

}  // namespace pubculture
