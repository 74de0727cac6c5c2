#pragma once

#include <filesystem>
#include <string>

#include "pubculture/bundle.hpp"

namespace pubculture {

/// Source of author bundles. fetch() is read-only and repeatable; it throws
/// Error(NotFound) for unknown authors.
class RecordProvider {
 public:
  virtual ~RecordProvider() = default;
  virtual ParsedBundle fetch(const AuthorId& author) const = 0;
};

/// Reads `<dir>/<author_id>.json` bundle files.
class FixtureProvider final : public RecordProvider {
 public:
  explicit FixtureProvider(std::filesystem::path dir) : dir_(std::move(dir)) {}

  ParsedBundle fetch(const AuthorId& author) const override;

  /// Author ids of every bundle file in the directory, ascending.
  std::vector<AuthorId> list() const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

/// Placeholder for a live bibliographic API client. Network access,
/// credentials and quotas are not implemented; fetch() always throws
/// Error(Unavailable).
class LiveProvider final : public RecordProvider {
 public:
  explicit LiveProvider(std::string api_key) : api_key_(std::move(api_key)) {}

  ParsedBundle fetch(const AuthorId& author) const override;

 private:
  std::string api_key_;
};

}  // namespace pubculture
