#pragma once

// JSON payloads for every query surface. The HTTP service and the CLI both
// render through these functions so their outputs stay identical.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pubculture/analytics.hpp"
#include "pubculture/error.hpp"
#include "pubculture/ingest.hpp"
#include "pubculture/store.hpp"

namespace pubculture::views {

using nlohmann::json;

inline constexpr std::size_t kDefaultTopJournals = 10;
inline constexpr std::size_t kDefaultNameLen = 30;

json health();
json search(const Store& store, const std::string& query);
/// Rows restricted to years with first_count >= cutoff.
json stats(const Store& store, const AuthorId& author, Cutoff cutoff);
json max_profile(const Store& store, const AuthorId& author);
json network(const Store& store, const AuthorId& author, NetworkMode mode,
             std::optional<int> year, Cutoff cutoff);
json journals(const Store& store, const AuthorId& author, std::size_t top, std::size_t name_len);
json citations(const Store& store, const AuthorId& author);
json institution(const Store& store, const std::vector<std::string>& ids, Cutoff cutoff);

json network_json(const NetworkGraph& g);
json journals_json(const JournalBreakdown& b);
json institution_json(const InstitutionSummary& s);
json citations_json(const AuthorId& author, const std::vector<CitationPoint>& series);
json report_json(const IngestReport& report);

/// {"status": <http>, "code": "...", "message": "..."}
json error_json(const Error& e);

/// Canonical text form: compact, keys sorted.
std::string canonical(const json& j);

enum class CsvView { Search, Stats, MaxProfile, Network, Journals, Citations, Institution };

/// RFC-4180 CSV (CRLF line ends) with a header row, one row per item.
std::string to_csv(CsvView view, const json& payload);

/// Quotes a field when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view field);

/// Strict decimal parse for query parameters; throws Error(BadRequest).
std::int64_t parse_int(std::string_view name, std::string_view text);

/// Splits "a,b,c" and drops empty pieces.
std::vector<std::string> split_ids(std::string_view text);

}  // namespace pubculture::views
