#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pubculture/model.hpp"

namespace pubculture {

/// Full publication history of one author: the unit of fetch and ingest.
struct AuthorBundle {
  AuthorId author;
  std::string display_name;
  std::vector<std::string> affiliation_ids;
  std::vector<PublicationRecord> publications;

  friend bool operator==(const AuthorBundle&, const AuthorBundle&) = default;
};

/// A publication entry that failed validation and was left out of the bundle.
struct RecordIssue {
  std::size_t index = 0;  // position in the source "publications" array
  std::string pub_id;     // may be empty when the id itself was the problem
  std::string reason;

  friend bool operator==(const RecordIssue&, const RecordIssue&) = default;
};

struct ParsedBundle {
  AuthorBundle bundle;
  std::vector<RecordIssue> skipped;
  std::size_t total_records = 0;
};

/// Parses a bundle document:
///
///   {"author": {"id", "name", "affiliations"},
///    "publications": [{"pub_id", "year", "journal", "citations",
///                      "authors", "author_names"}]}
///
/// Unknown fields are ignored and a missing "journal" reads as "". Records
/// with a missing or out-of-range year, inconsistent author lists, duplicate
/// author ids, a duplicate pub_id, or lacking the bundle author are skipped
/// and reported in `skipped`. A malformed document or author block throws
/// Error(SchemaError).
ParsedBundle parse_bundle(std::string_view raw);

/// Canonical JSON text for a bundle; parse_bundle(serialize_bundle(b)) == b
/// for any valid bundle.
std::string serialize_bundle(const AuthorBundle& bundle);

}  // namespace pubculture
