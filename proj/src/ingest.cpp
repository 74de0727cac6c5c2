#include "pubculture/ingest.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <map>
#include <thread>

#include "pubculture/error.hpp"

namespace pubculture {

namespace {

std::string utc_now_iso8601() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::vector<CoauthorFrequency> top_coauthors(std::span<const AuthorYearStats> stats,
                                             std::size_t k) {
  std::map<AuthorId, std::int64_t> totals;
  for (const auto& row : stats) {
    for (const auto& [id, n] : row.co_meta) totals[id] += n;
  }

  std::vector<CoauthorFrequency> ranked;
  ranked.reserve(totals.size());
  for (const auto& [id, n] : totals) ranked.push_back({id, n});
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.author < b.author;
  });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

IngestReport ingest_author(const AuthorId& author, const RecordProvider& provider, Store& store,
                           int expand_depth) {
  if (expand_depth != 0 && expand_depth != 1) {
    throw Error(ErrorCode::BadRequest, "expand_depth must be 0 or 1");
  }
  const auto started = std::chrono::steady_clock::now();

  IngestReport report;
  report.author = author;
  std::vector<AuthorYearStats> rows;
  {
    auto guard = store.locks().lock(author);
    auto parsed = provider.fetch(author);

    rows = all_year_stats(author, parsed.bundle.publications);
    report.years_processed = rows.size();
    report.records_ok = parsed.bundle.publications.size();
    report.records_skipped = parsed.skipped.size();
    report.issues = std::move(parsed.skipped);

    AuthorDirectoryEntry entry{author, parsed.bundle.display_name,
                               parsed.bundle.affiliation_ids, utc_now_iso8601()};
    store.commit_author(parsed.bundle, rows, entry);
  }

  if (expand_depth == 1) {
    for (const auto& co : top_coauthors(rows, kTopCoauthors)) {
      report.expanded_coauthors.push_back(co.author);
      try {
        ingest_author(co.author, provider, store, 0);
      } catch (const Error& e) {
        report.expansion_failures.push_back(
            {co.author, std::string(code_name(e.code())), e.what()});
      } catch (const std::exception& e) {
        report.expansion_failures.push_back({co.author, "internal", e.what()});
      }
    }
  }

  report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  return report;
}

std::vector<IngestOutcome> ingest_many(std::span<const AuthorId> authors,
                                       const RecordProvider& provider, Store& store,
                                       int expand_depth, unsigned threads) {
  std::vector<IngestOutcome> outcomes(authors.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < authors.size(); i = next++) {
      auto& out = outcomes[i];
      out.author = authors[i];
      try {
        out.report = ingest_author(authors[i], provider, store, expand_depth);
      } catch (const Error& e) {
        out.error_code = std::string(code_name(e.code()));
        out.error_message = e.what();
      } catch (const std::exception& e) {
        out.error_code = "internal";
        out.error_message = e.what();
      }
    }
  };

  const auto n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(authors.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
  }
  return outcomes;
}

}  // namespace pubculture
