#include "pubculture/model.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "pubculture/error.hpp"

namespace pubculture {

std::string_view position_name(AuthorshipPosition p) {
  switch (p) {
    case AuthorshipPosition::First: return "First";
    case AuthorshipPosition::Middle: return "Mid";
    case AuthorshipPosition::Last: return "Last";
  }
  return "Mid";
}

std::string AuthorYearStats::key() const { return author.str() + "_" + std::to_string(year); }

Cutoff Cutoff::of(std::int64_t v) {
  if (v < 0) {
    throw Error(ErrorCode::ValidationFailed, "cutoff must be non-negative");
  }
  return Cutoff{v};
}

int max_valid_year() {
  using namespace std::chrono;
  const year_month_day today{floor<days>(system_clock::now())};
  return static_cast<int>(today.year()) + 1;
}

AuthorshipPosition classify_position(const AuthorId& author, const PublicationRecord& record) {
  const auto it = std::find(record.authors.begin(), record.authors.end(), author);
  if (it == record.authors.end()) {
    throw Error(ErrorCode::AuthorNotOnRecord,
                "author " + author.str() + " is not on record " + record.pub_id);
  }
  const auto index = static_cast<std::size_t>(it - record.authors.begin());
  const auto n = record.authors.size();
  if (index == 0) return AuthorshipPosition::First;
  if (index == n - 1) return AuthorshipPosition::Last;
  return AuthorshipPosition::Middle;
}

AuthorYearStats year_stats(const AuthorId& author, std::span<const PublicationRecord> records,
                           int year) {
  AuthorYearStats out;
  out.author = author;
  out.year = year;

  for (const auto& record : records) {
    if (record.year != year) continue;
    const auto position = classify_position(author, record);
    FrequencyMap* bucket = nullptr;
    switch (position) {
      case AuthorshipPosition::First:
        ++out.first_count;
        bucket = &out.first_meta;
        break;
      case AuthorshipPosition::Middle:
        ++out.mid_count;
        bucket = &out.mid_meta;
        break;
      case AuthorshipPosition::Last:
        ++out.last_count;
        bucket = &out.last_meta;
        break;
    }
    ++out.pub_count;
    out.citations += record.citations;

    // Each co-author counts once per publication.
    std::set<AuthorId> seen;
    for (const auto& co : record.authors) {
      if (co == author || !seen.insert(co).second) continue;
      ++(*bucket)[co];
      ++out.co_meta[co];
    }
  }
  return out;
}

std::vector<AuthorYearStats> all_year_stats(const AuthorId& author,
                                            std::span<const PublicationRecord> records) {
  std::set<int> years;
  for (const auto& r : records) years.insert(r.year);

  std::vector<AuthorYearStats> rows;
  rows.reserve(years.size());
  for (int y : years) rows.push_back(year_stats(author, records, y));
  return rows;
}

bool super_researcher_test(std::span<const AuthorYearStats> stats, Cutoff cutoff) {
  // Max over an empty year set is 0, so cutoff 0 classifies everyone as Super.
  std::int64_t best = 0;
  for (const auto& row : stats) best = std::max(best, row.first_count);
  return best >= cutoff.value;
}

MaxProfile max_profile(std::span<const AuthorYearStats> stats, const AuthorId& author,
                       std::string name) {
  MaxProfile p;
  p.author = author;
  p.display_name = std::move(name);
  for (const auto& row : stats) {
    p.max_first = std::max(p.max_first, row.first_count);
    p.max_mid = std::max(p.max_mid, row.mid_count);
    p.max_last = std::max(p.max_last, row.last_count);
    p.max_citations = std::max(p.max_citations, row.citations);
  }
  return p;
}

}  // namespace pubculture
