#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "pubculture/bundle.hpp"

namespace pubculture {

/// Parameters for a synthetic publication corpus.
///
/// Every author leads at least one paper. A Super Researcher share of
/// round(sr_fraction * n_authors) authors is planted with a peak year of
/// 6-12 first-author papers; everyone else peaks at 1-4 (skewed toward 1),
/// so no ordinary author reaches a cutoff of 5.
struct CorpusSpec {
  int n_institutions = 3;
  int n_authors = 60;
  int first_year = 2015;
  int last_year = 2020;
  double sr_fraction = 0.1;
  std::uint64_t seed = 1;
};

/// Throws Error(BadRequest) for inconsistent parameters.
void validate(const CorpusSpec& spec);

/// Affiliation id of institution `k` (0-based).
std::string institution_id(int k);

/// Deterministic for a given spec. Each publication appears in the bundle of
/// every author listed on it.
std::vector<AuthorBundle> generate_corpus(const CorpusSpec& spec);

/// Writes `<author_id>.json` per bundle into `dir` (created if needed).
/// Throws Error(StoreError) on I/O failure.
void write_bundles(const std::filesystem::path& dir, const std::vector<AuthorBundle>& bundles);

/// Builds closed bundles from a flat publication list: each author on a
/// record receives it. `profiles` supplies name and affiliations; authors not
/// in `profiles` get a bundle named from the record's author_names.
std::vector<AuthorBundle> distribute(const std::vector<AuthorBundle>& profiles,
                                     const std::vector<PublicationRecord>& publications);

}  // namespace pubculture
