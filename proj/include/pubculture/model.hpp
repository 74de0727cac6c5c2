#pragma once

// Domain types and the pure authorship-position classification that every
// other part of the library builds on.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pubculture {

/// Opaque author identity. Names are display-only; this is
/// the sole identity key.
class AuthorId {
 public:
  AuthorId() = default;
  explicit AuthorId(std::string id) : id_(std::move(id)) {}

  const std::string& str() const noexcept { return id_; }
  bool empty() const noexcept { return id_.empty(); }

  friend auto operator<=>(const AuthorId&, const AuthorId&) = default;
  friend bool operator==(const AuthorId&, const AuthorId&) = default;

 private:
  std::string id_;
};

struct PublicationRecord {
  std::string pub_id;
  int year = 0;
  std::string journal;
  std::vector<AuthorId> authors;
  std::vector<std::string> author_names;
  std::int64_t citations = 0;

  friend bool operator==(const PublicationRecord&, const PublicationRecord&) = default;
};

enum class AuthorshipPosition { First, Middle, Last };

std::string_view position_name(AuthorshipPosition p);

/// Co-author frequency map: number of shared publications per co-author.
using FrequencyMap = std::map<AuthorId, std::int64_t>;

/// Per author-year statistics row. alpha/beta/gamma are the first/middle/last
/// position counts.
struct AuthorYearStats {
  AuthorId author;
  int year = 0;
  std::int64_t first_count = 0;
  std::int64_t mid_count = 0;
  std::int64_t last_count = 0;
  std::int64_t citations = 0;
  std::int64_t pub_count = 0;
  // Keyed by co-author; counted over publications where the index author held
  // the corresponding position. co_meta covers all positions.
  FrequencyMap first_meta;
  FrequencyMap mid_meta;
  FrequencyMap last_meta;
  FrequencyMap co_meta;

  /// Row key in "sid_y" form.
  std::string key() const;

  friend bool operator==(const AuthorYearStats&, const AuthorYearStats&) = default;
};

struct MaxProfile {
  AuthorId author;
  std::string display_name;
  std::int64_t max_first = 0;
  std::int64_t max_mid = 0;
  std::int64_t max_last = 0;
  std::int64_t max_citations = 0;

  friend bool operator==(const MaxProfile&, const MaxProfile&) = default;
};

/// Minimum yearly first-author count for the Super Researcher test.
struct Cutoff {
  std::int64_t value = 0;

  /// Throws ValidationFailed for negative values.
  static Cutoff of(std::int64_t v);
};

/// Latest year accepted on a record (current calendar year + 1).
int max_valid_year();
inline constexpr int kMinValidYear = 1800;

/// Position of `author` on `record`. A sole author is First only.
/// Throws Error(AuthorNotOnRecord) when the author is absent.
AuthorshipPosition classify_position(const AuthorId& author, const PublicationRecord& record);

/// Statistics for one author-year. Records from other years are ignored.
AuthorYearStats year_stats(const AuthorId& author, std::span<const PublicationRecord> records,
                           int year);

/// One row per distinct publication year, year-ascending.
std::vector<AuthorYearStats> all_year_stats(const AuthorId& author,
                                            std::span<const PublicationRecord> records);

/// True iff the maximum yearly first-author count reaches the cutoff (>=).
bool super_researcher_test(std::span<const AuthorYearStats> stats, Cutoff cutoff);

MaxProfile max_profile(std::span<const AuthorYearStats> stats, const AuthorId& author,
                       std::string name);

}  // namespace pubculture
