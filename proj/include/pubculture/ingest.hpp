#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pubculture/bundle.hpp"
#include "pubculture/model.hpp"
#include "pubculture/provider.hpp"
#include "pubculture/store.hpp"

namespace pubculture {

inline constexpr std::size_t kTopCoauthors = 30;

struct CoauthorFrequency {
  AuthorId author;
  std::int64_t frequency = 0;

  friend bool operator==(const CoauthorFrequency&, const CoauthorFrequency&) = default;
};

struct ExpansionFailure {
  AuthorId author;
  std::string code;
  std::string message;
};

struct IngestReport {
  AuthorId author;
  std::size_t years_processed = 0;
  std::size_t records_ok = 0;
  std::size_t records_skipped = 0;
  std::vector<RecordIssue> issues;
  // Top co-authors selected for one-level expansion, in rank order.
  std::vector<AuthorId> expanded_coauthors;
  std::vector<ExpansionFailure> expansion_failures;
  std::int64_t duration_ms = 0;
};

/// Sums co_meta over all rows and returns the k most frequent co-authors,
/// frequency descending then AuthorId ascending.
std::vector<CoauthorFrequency> top_coauthors(std::span<const AuthorYearStats> stats,
                                             std::size_t k);

/// Fetches the author's bundle, computes one stats row per publication year
/// and commits bundle, rows and directory entry to the store in one
/// transaction. With expand_depth == 1 the top-30 co-authors are then
/// ingested at depth 0; their failures land in the report and never undo the
/// index author's commit.
///
/// Throws Error(NotFound) when the provider has no bundle and
/// Error(StoreError) on persistence failure. expand_depth outside {0, 1}
/// throws Error(BadRequest).
IngestReport ingest_author(const AuthorId& author, const RecordProvider& provider, Store& store,
                           int expand_depth);

struct IngestOutcome {
  AuthorId author;
  std::optional<IngestReport> report;
  std::string error_code;  // empty on success
  std::string error_message;
};

/// Ingests several authors on up to `threads` workers. Outcomes are returned
/// in input order.
std::vector<IngestOutcome> ingest_many(std::span<const AuthorId> authors,
                                       const RecordProvider& provider, Store& store,
                                       int expand_depth, unsigned threads);

}  // namespace pubculture
