#pragma once

// Read-side computations over a store snapshot: co-authorship ego-networks,
// journal breakdowns, institution summaries and citation series.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pubculture/model.hpp"
#include "pubculture/store.hpp"

namespace pubculture {

enum class NetworkMode { FirstAuthor, LastAuthor, AllCoauthors };

/// "first" | "last" | "all"
std::string_view mode_name(NetworkMode mode);
/// Throws Error(BadRequest) for anything but "first", "last" or "all".
NetworkMode parse_mode(std::string_view text);

enum class SrPrefix { S, N };
enum class RoleSuffix { First, Mid, Last, Index };

std::string_view role_name(RoleSuffix role);

struct NetworkNode {
  AuthorId author;
  std::string display_name;
  SrPrefix sr_prefix = SrPrefix::N;
  RoleSuffix role_suffix = RoleSuffix::Mid;
  std::int64_t weight = 0;
  bool known_stats = false;

  /// "<S|N>.<First|Mid|Last|Index>"
  std::string label() const;

  friend bool operator==(const NetworkNode&, const NetworkNode&) = default;
};

struct NetworkEdge {
  AuthorId from;
  AuthorId to;
  std::int64_t weight = 0;

  friend bool operator==(const NetworkEdge&, const NetworkEdge&) = default;
};

/// Star-shaped ego-network. nodes[0] is the index author; the remaining
/// nodes are ordered by weight descending then AuthorId ascending, and
/// edges follow the same order.
struct NetworkGraph {
  AuthorId index;
  NetworkMode mode = NetworkMode::AllCoauthors;
  std::optional<int> year_filter;
  Cutoff cutoff;
  std::vector<NetworkNode> nodes;
  std::vector<NetworkEdge> edges;
};

/// Builds the index author's ego-network. Co-author weights are the summed
/// mode-specific frequency maps (first_meta, last_meta or co_meta) over the
/// selected years. A co-author is prefixed S when its own stored stats pass
/// the Super Researcher test at `cutoff`; co-authors without stored stats are
/// N with known_stats=false. The role suffix is the co-author's most frequent
/// position on the shared publications, ties resolved Last > First > Mid.
///
/// Throws Error(UnknownAuthor) when the index author is not in the store.
NetworkGraph build_network(const Store& store, const AuthorId& index, NetworkMode mode,
                           std::optional<int> year_filter, Cutoff cutoff);

struct JournalEntry {
  std::string name;       // display name, truncated to name_len characters
  std::string full_name;  // whitespace-normalized
  std::int64_t total = 0;

  friend bool operator==(const JournalEntry&, const JournalEntry&) = default;
};

struct JournalYearCount {
  std::size_t journal = 0;  // index into JournalBreakdown::journals
  std::int64_t frequency = 0;

  friend bool operator==(const JournalYearCount&, const JournalYearCount&) = default;
};

struct JournalBreakdown {
  AuthorId author;
  std::vector<JournalEntry> journals;
  std::map<int, std::vector<JournalYearCount>> per_year;
};

/// Trims, collapses internal whitespace runs to one space.
std::string normalize_journal(std::string_view raw);

/// Shortens to `max_chars` UTF-8 characters, ending in "..." when cut.
std::string truncate_display(std::string_view text, std::size_t max_chars);

/// Top-n journals by publication count (ties by case-folded name), with a
/// per-year frequency table restricted to those journals. Journal identity is
/// the case-folded normalized name; records without a journal are ignored.
JournalBreakdown journal_breakdown(const AuthorId& author,
                                   std::span<const PublicationRecord> records, std::size_t top_n,
                                   std::size_t name_len);

/// Store-backed variant. Throws Error(UnknownAuthor) for authors not in the
/// store and Error(BadRequest) for top_n < 1 or name_len < 4.
JournalBreakdown journal_breakdown(const Store& store, const AuthorId& author, std::size_t top_n,
                                   std::size_t name_len);

struct InstitutionHistogram {
  std::string institution;
  std::size_t qualifying = 0;
  // max_first value -> number of qualifying authors
  std::map<std::int64_t, std::int64_t> bins;
};

struct InstitutionSummary {
  std::vector<std::string> institution_ids;
  Cutoff cutoff;
  // Qualifying authors across all requested institutions, each listed once,
  // ordered by max_first descending then AuthorId.
  std::vector<MaxProfile> rows;
  std::vector<InstitutionHistogram> histograms;  // same order as institution_ids
};

/// Authors qualify when max_first >= cutoff.
InstitutionSummary institution_summary(const Store& store,
                                       const std::vector<std::string>& institution_ids,
                                       Cutoff cutoff);

struct CitationPoint {
  int year = 0;
  std::int64_t citations = 0;
  std::int64_t pubs = 0;
  double citations_per_pub = 0.0;

  friend bool operator==(const CitationPoint&, const CitationPoint&) = default;
};

std::vector<CitationPoint> citation_series(std::span<const AuthorYearStats> stats);

/// Throws Error(UnknownAuthor) for authors not in the store.
std::vector<CitationPoint> citation_series(const Store& store, const AuthorId& author);

/// Display name from the directory, falling back to the raw bundle, then "".
std::string display_name_of(const Store& store, const AuthorId& author);

}  // namespace pubculture
