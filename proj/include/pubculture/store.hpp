#pragma once

// Two-tier persistence: a raw tier holding the most recent bundle per author
// and a derived tier holding per author-year statistics plus the author
// directory. Both tiers live behind one interface.

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pubculture/bundle.hpp"
#include "pubculture/model.hpp"

namespace pubculture {

struct AuthorDirectoryEntry {
  AuthorId author;
  std::string display_name;
  std::vector<std::string> affiliation_ids;
  std::string ingested_at;  // ISO-8601 UTC

  friend bool operator==(const AuthorDirectoryEntry&, const AuthorDirectoryEntry&) = default;
};

/// Per-author mutual exclusion for writers. Writers for distinct authors
/// never contend.
class AuthorLocks {
 public:
  std::unique_lock<std::mutex> lock(const AuthorId& author);

 private:
  std::mutex table_mutex_;
  std::unordered_map<std::string, std::unique_ptr<std::mutex>> locks_;
};

class Store {
 public:
  virtual ~Store() = default;

  // Raw tier: last write wins per author.
  virtual void put_raw(const AuthorBundle& bundle) = 0;
  virtual std::optional<AuthorBundle> get_raw(const AuthorId& author) const = 0;

  // Derived tier: upsert per "sid_y" key; reads are year-ascending.
  virtual void put_stats(const std::vector<AuthorYearStats>& rows) = 0;
  virtual std::vector<AuthorYearStats> get_stats(const AuthorId& author) const = 0;

  /// Atomically replaces everything stored for one author: raw bundle,
  /// all stats rows and the directory entry. Readers see either the old or
  /// the new state, never a mix.
  virtual void commit_author(const AuthorBundle& bundle, const std::vector<AuthorYearStats>& rows,
                             const AuthorDirectoryEntry& entry) = 0;

  virtual void put_directory(const AuthorDirectoryEntry& entry) = 0;
  virtual std::optional<AuthorDirectoryEntry> get_directory(const AuthorId& author) const = 0;

  /// Directory authors affiliated with `affiliation_id`, AuthorId-ascending.
  virtual std::vector<AuthorId> query_institution(const std::string& affiliation_id) const = 0;

  /// Exact-id match first, then case-insensitive display-name substring
  /// matches in AuthorId order.
  virtual std::vector<AuthorDirectoryEntry> search_author(const std::string& query) const = 0;

  /// Every stats row ordered by (author, year).
  virtual std::vector<AuthorYearStats> all_stats() const = 0;

  /// True when the author has a directory entry or stored stats.
  bool is_known(const AuthorId& author) const;

  /// Writes the derived tier as JSON lines, one AuthorYearStats per line,
  /// ordered by (author, year). Returns the number of rows written.
  std::size_t dump(std::ostream& out) const;

  /// Upserts rows from a dump stream. Throws Error(SchemaError) on a bad line.
  std::size_t load(std::istream& in);

  AuthorLocks& locks() { return locks_; }

 private:
  AuthorLocks locks_;
};

/// Embedded single-file store. Pass ":memory:" for a transient database.
std::unique_ptr<Store> open_store(const std::string& path);

/// Opens <data_dir>/pubculture.db, creating the directory when needed.
std::unique_ptr<Store> open_store_in(const std::filesystem::path& data_dir);

}  // namespace pubculture
