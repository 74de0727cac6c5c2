#include "pubculture/views.hpp"

#include <charconv>
#include <sstream>

#include "pubculture/serialize.hpp"

namespace pubculture::views {

namespace {

void require_known(const Store& store, const AuthorId& author) {
  if (!store.is_known(author)) throw Error(ErrorCode::UnknownAuthor, "unknown author " + author.str());
}

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

}  // namespace

json health() { return json{{"status", "ok"}}; }

json search(const Store& store, const std::string& query) {
  if (query.empty()) throw Error(ErrorCode::BadRequest, "query must not be empty");
  json results = json::array();
  for (const auto& e : store.search_author(query)) {
    results.push_back({{"id", e.author},
                       {"name", e.display_name},
                       {"affiliations", e.affiliation_ids},
                       {"ingested_at", e.ingested_at}});
  }
  return json{{"query", query}, {"results", results}};
}

json stats(const Store& store, const AuthorId& author, Cutoff cutoff) {
  const auto rows = store.get_stats(author);
  if (rows.empty()) require_known(store, author);
  json out_rows = json::array();
  for (const auto& row : rows) {
    if (row.first_count >= cutoff.value) out_rows.push_back(row);
  }
  return json{{"author", author},
              {"name", display_name_of(store, author)},
              {"cutoff", cutoff.value},
              {"super_researcher", super_researcher_test(rows, cutoff)},
              {"rows", out_rows}};
}

json max_profile(const Store& store, const AuthorId& author) {
  const auto rows = store.get_stats(author);
  if (rows.empty()) require_known(store, author);
  return pubculture::max_profile(rows, author, display_name_of(store, author));
}

json network_json(const NetworkGraph& g) {
  json nodes = json::array();
  for (const auto& n : g.nodes) {
    nodes.push_back({{"id", n.author},
                     {"name", n.display_name},
                     {"label", n.label()},
                     {"weight", n.weight},
                     {"known", n.known_stats}});
  }
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"weight", e.weight}});
  }
  return json{{"index", g.index},
              {"mode", mode_name(g.mode)},
              {"year", g.year_filter ? json(*g.year_filter) : json(nullptr)},
              {"cutoff", g.cutoff.value},
              {"nodes", nodes},
              {"edges", edges}};
}

json network(const Store& store, const AuthorId& author, NetworkMode mode,
             std::optional<int> year, Cutoff cutoff) {
  return network_json(build_network(store, author, mode, year, cutoff));
}

json journals_json(const JournalBreakdown& b) {
  json journals = json::array();
  for (const auto& j : b.journals) {
    journals.push_back({{"name", j.name}, {"full_name", j.full_name}, {"total", j.total}});
  }
  json per_year = json::array();
  for (const auto& [year, counts] : b.per_year) {
    json c = json::array();
    for (const auto& yc : counts) c.push_back({{"journal", yc.journal}, {"frequency", yc.frequency}});
    per_year.push_back({{"year", year}, {"counts", c}});
  }
  return json{{"author", b.author}, {"journals", journals}, {"per_year", per_year}};
}

json journals(const Store& store, const AuthorId& author, std::size_t top, std::size_t name_len) {
  return journals_json(journal_breakdown(store, author, top, name_len));
}

json citations_json(const AuthorId& author, const std::vector<CitationPoint>& series) {
  json points = json::array();
  for (const auto& p : series) {
    points.push_back({{"year", p.year},
                      {"citations", p.citations},
                      {"pubs", p.pubs},
                      {"citations_per_pub", p.citations_per_pub}});
  }
  return json{{"author", author}, {"series", points}};
}

json citations(const Store& store, const AuthorId& author) {
  return citations_json(author, citation_series(store, author));
}

json institution_json(const InstitutionSummary& s) {
  json hists = json::array();
  for (const auto& h : s.histograms) {
    json bins = json::array();
    for (const auto& [k, n] : h.bins) bins.push_back({{"max_first", k}, {"authors", n}});
    hists.push_back({{"institution", h.institution}, {"qualifying", h.qualifying}, {"bins", bins}});
  }
  return json{{"institutions", s.institution_ids},
              {"cutoff", s.cutoff.value},
              {"rows", s.rows},
              {"histograms", hists}};
}

json institution(const Store& store, const std::vector<std::string>& ids, Cutoff cutoff) {
  if (ids.empty()) throw Error(ErrorCode::BadRequest, "at least one institution id is required");
  return institution_json(institution_summary(store, ids, cutoff));
}

json report_json(const IngestReport& r) {
  json failures = json::array();
  for (const auto& f : r.expansion_failures) {
    failures.push_back({{"author", f.author}, {"code", f.code}, {"message", f.message}});
  }
  return json{{"author", r.author},
              {"years_processed", r.years_processed},
              {"records_ok", r.records_ok},
              {"records_skipped", r.records_skipped},
              {"issues", r.issues},
              {"expanded_coauthors", r.expanded_coauthors},
              {"expansion_failures", failures},
              {"duration_ms", r.duration_ms}};
}

json error_json(const Error& e) {
  return json{{"status", http_status(e.code())}, {"code", code_name(e.code())}, {"message", e.what()}};
}

std::string canonical(const json& j) { return j.dump(); }

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_csv(CsvView view, const json& payload) {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  switch (view) {
    case CsvView::Search:
      header = {"id", "name", "affiliations", "ingested_at"};
      for (const auto& r : payload.at("results")) {
        std::string affs;
        for (const auto& a : r.at("affiliations")) {
          if (!affs.empty()) affs += ';';
          affs += a.get<std::string>();
        }
        rows.push_back({cell(r["id"]), cell(r["name"]), affs, cell(r["ingested_at"])});
      }
      break;
    case CsvView::Stats:
      header = {"author", "year", "first_count", "mid_count", "last_count", "pub_count", "citations"};
      for (const auto& r : payload.at("rows")) {
        rows.push_back({cell(r["author"]), cell(r["year"]), cell(r["first_count"]),
                        cell(r["mid_count"]), cell(r["last_count"]), cell(r["pub_count"]),
                        cell(r["citations"])});
      }
      break;
    case CsvView::MaxProfile:
    case CsvView::Institution: {
      header = {"author", "name", "max_first", "max_mid", "max_last", "max_citations"};
      auto emit = [&](const json& r) {
        rows.push_back({cell(r["author"]), cell(r["name"]), cell(r["max_first"]),
                        cell(r["max_mid"]), cell(r["max_last"]), cell(r["max_citations"])});
      };
      if (view == CsvView::MaxProfile) {
        emit(payload);
      } else {
        for (const auto& r : payload.at("rows")) emit(r);
      }
      break;
    }
    case CsvView::Network:
      header = {"id", "name", "label", "weight", "known"};
      for (const auto& n : payload.at("nodes")) {
        rows.push_back({cell(n["id"]), cell(n["name"]), cell(n["label"]), cell(n["weight"]),
                        cell(n["known"])});
      }
      break;
    case CsvView::Journals: {
      header = {"year", "rank", "name", "full_name", "frequency", "total"};
      const auto& journals = payload.at("journals");
      for (const auto& y : payload.at("per_year")) {
        for (const auto& c : y.at("counts")) {
          const auto& j = journals.at(c.at("journal").get<std::size_t>());
          rows.push_back({cell(y["year"]), std::to_string(c.at("journal").get<std::size_t>() + 1),
                          cell(j["name"]), cell(j["full_name"]), cell(c["frequency"]),
                          cell(j["total"])});
        }
      }
      break;
    }
    case CsvView::Citations:
      header = {"year", "citations", "pubs", "citations_per_pub"};
      for (const auto& p : payload.at("series")) {
        rows.push_back({cell(p["year"]), cell(p["citations"]), cell(p["pubs"]),
                        cell(p["citations_per_pub"])});
      }
      break;
  }

  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out << ',';
      out << csv_field(fields[i]);
    }
    out << "\r\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out.str();
}

std::int64_t parse_int(std::string_view name, std::string_view text) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::BadRequest,
                std::string(name) + " must be an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> split_ids(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                           : comma - start);
    if (!piece.empty()) out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace pubculture::views
