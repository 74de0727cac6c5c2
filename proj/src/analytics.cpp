#include "pubculture/analytics.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "pubculture/error.hpp"

namespace pubculture {

std::string_view mode_name(NetworkMode mode) {
  switch (mode) {
    case NetworkMode::FirstAuthor: return "first";
    case NetworkMode::LastAuthor: return "last";
    case NetworkMode::AllCoauthors: return "all";
  }
  return "all";
}

NetworkMode parse_mode(std::string_view text) {
  if (text == "first") return NetworkMode::FirstAuthor;
  if (text == "last") return NetworkMode::LastAuthor;
  if (text == "all") return NetworkMode::AllCoauthors;
  throw Error(ErrorCode::BadRequest, "mode must be first, last or all");
}

std::string_view role_name(RoleSuffix role) {
  switch (role) {
    case RoleSuffix::First: return "First";
    case RoleSuffix::Mid: return "Mid";
    case RoleSuffix::Last: return "Last";
    case RoleSuffix::Index: return "Index";
  }
  return "Mid";
}

std::string NetworkNode::label() const {
  std::string out = sr_prefix == SrPrefix::S ? "S." : "N.";
  out += role_name(role_suffix);
  return out;
}

std::string display_name_of(const Store& store, const AuthorId& author) {
  if (auto entry = store.get_directory(author)) return entry->display_name;
  if (auto raw = store.get_raw(author)) return raw->display_name;
  return {};
}

namespace {

bool position_matches(NetworkMode mode, AuthorshipPosition p) {
  switch (mode) {
    case NetworkMode::FirstAuthor: return p == AuthorshipPosition::First;
    case NetworkMode::LastAuthor: return p == AuthorshipPosition::Last;
    case NetworkMode::AllCoauthors: return true;
  }
  return false;
}

const FrequencyMap& mode_map(const AuthorYearStats& row, NetworkMode mode) {
  switch (mode) {
    case NetworkMode::FirstAuthor: return row.first_meta;
    case NetworkMode::LastAuthor: return row.last_meta;
    case NetworkMode::AllCoauthors: return row.co_meta;
  }
  return row.co_meta;
}

// Counts indexed by AuthorshipPosition.
using PositionCounts = std::array<std::int64_t, 3>;

RoleSuffix dominant_role(const PositionCounts& c) {
  const auto first = c[static_cast<int>(AuthorshipPosition::First)];
  const auto mid = c[static_cast<int>(AuthorshipPosition::Middle)];
  const auto last = c[static_cast<int>(AuthorshipPosition::Last)];
  if (last >= first && last >= mid) return RoleSuffix::Last;
  if (first >= mid) return RoleSuffix::First;
  return RoleSuffix::Mid;
}

}  // namespace

NetworkGraph build_network(const Store& store, const AuthorId& index, NetworkMode mode,
                           std::optional<int> year_filter, Cutoff cutoff) {
  const auto stats = store.get_stats(index);
  if (stats.empty() && !store.get_directory(index)) {
    throw Error(ErrorCode::UnknownAuthor, "unknown author " + index.str());
  }

  NetworkGraph g;
  g.index = index;
  g.mode = mode;
  g.year_filter = year_filter;
  g.cutoff = cutoff;

  FrequencyMap weights;
  for (const auto& row : stats) {
    if (year_filter && row.year != *year_filter) continue;
    for (const auto& [id, n] : mode_map(row, mode)) weights[id] += n;
  }

  std::map<AuthorId, PositionCounts> roles;
  std::map<AuthorId, std::string> bundle_names;
  const auto raw = store.get_raw(index);
  if (raw) {
    for (const auto& record : raw->publications) {
      for (std::size_t i = 0; i < record.authors.size(); ++i) {
        bundle_names.try_emplace(record.authors[i], record.author_names[i]);
      }
      if (year_filter && record.year != *year_filter) continue;
      if (!position_matches(mode, classify_position(index, record))) continue;
      for (const auto& co : record.authors) {
        if (co == index) continue;
        roles[co][static_cast<int>(classify_position(co, record))]++;
      }
    }
  }

  NetworkNode root;
  root.author = index;
  root.display_name = display_name_of(store, index);
  root.sr_prefix = super_researcher_test(stats, cutoff) ? SrPrefix::S : SrPrefix::N;
  root.role_suffix = RoleSuffix::Index;
  root.weight = 1;
  root.known_stats = true;
  g.nodes.push_back(std::move(root));

  std::vector<NetworkNode> others;
  for (const auto& [id, weight] : weights) {
    NetworkNode node;
    node.author = id;
    node.weight = weight;

    const auto co_stats = store.get_stats(id);
    node.known_stats = !co_stats.empty();
    node.sr_prefix = node.known_stats && super_researcher_test(co_stats, cutoff) ? SrPrefix::S
                                                                                  : SrPrefix::N;
    if (auto it = roles.find(id); it != roles.end()) {
      node.role_suffix = dominant_role(it->second);
    } else {
      // No raw bundle to inspect (e.g. a store restored from a dump).
      node.role_suffix = RoleSuffix::Mid;
    }

    if (auto entry = store.get_directory(id)) {
      node.display_name = entry->display_name;
    } else if (auto it = bundle_names.find(id); it != bundle_names.end()) {
      node.display_name = it->second;
    }
    others.push_back(std::move(node));
  }

  std::sort(others.begin(), others.end(), [](const auto& a, const auto& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.author < b.author;
  });
  for (auto& node : others) {
    g.edges.push_back({index, node.author, node.weight});
    g.nodes.push_back(std::move(node));
  }
  return g;
}

std::string normalize_journal(std::string_view raw) {
  std::string out;
  bool pending_space = false;
  for (char c : raw) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::string truncate_display(std::string_view text, std::size_t max_chars) {
  // Byte offsets of each UTF-8 character start.
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) starts.push_back(i);
  }
  if (starts.size() <= max_chars) return std::string(text);
  constexpr std::string_view ellipsis = "...";
  const auto keep = max_chars > ellipsis.size() ? max_chars - ellipsis.size() : 0;
  return std::string(text.substr(0, starts[keep])) + std::string(ellipsis);
}

namespace {

std::string casefold(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

JournalBreakdown journal_breakdown(const AuthorId& author,
                                   std::span<const PublicationRecord> records, std::size_t top_n,
                                   std::size_t name_len) {
  if (top_n < 1) throw Error(ErrorCode::BadRequest, "top must be >= 1");
  if (name_len < 4) throw Error(ErrorCode::BadRequest, "name_len must be >= 4");

  struct Tally {
    std::int64_t total = 0;
    std::map<std::string, std::int64_t> variants;  // normalized spelling -> count
    std::map<int, std::int64_t> by_year;
  };
  std::map<std::string, Tally> tallies;  // keyed by case-folded name

  for (const auto& r : records) {
    auto normalized = normalize_journal(r.journal);
    if (normalized.empty()) continue;
    auto& t = tallies[casefold(normalized)];
    ++t.total;
    ++t.variants[normalized];
    ++t.by_year[r.year];
  }

  std::vector<const std::pair<const std::string, Tally>*> ranked;
  for (const auto& entry : tallies) ranked.push_back(&entry);
  std::sort(ranked.begin(), ranked.end(), [](const auto* a, const auto* b) {
    if (a->second.total != b->second.total) return a->second.total > b->second.total;
    return a->first < b->first;
  });
  if (ranked.size() > top_n) ranked.resize(top_n);

  JournalBreakdown out;
  out.author = author;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const auto& tally = ranked[i]->second;
    // Most common spelling; map order breaks ties toward the smallest.
    const auto best = std::max_element(
        tally.variants.begin(), tally.variants.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    out.journals.push_back({truncate_display(best->first, name_len), best->first, tally.total});
    for (const auto& [year, n] : tally.by_year) out.per_year[year].push_back({i, n});
  }
  return out;
}

JournalBreakdown journal_breakdown(const Store& store, const AuthorId& author, std::size_t top_n,
                                   std::size_t name_len) {
  const auto raw = store.get_raw(author);
  if (!raw && !store.is_known(author)) {
    throw Error(ErrorCode::UnknownAuthor, "unknown author " + author.str());
  }
  if (!raw) return journal_breakdown(author, std::span<const PublicationRecord>{}, top_n, name_len);
  return journal_breakdown(author, raw->publications, top_n, name_len);
}

InstitutionSummary institution_summary(const Store& store,
                                       const std::vector<std::string>& institution_ids,
                                       Cutoff cutoff) {
  InstitutionSummary out;
  out.institution_ids = institution_ids;
  out.cutoff = cutoff;

  std::map<AuthorId, MaxProfile> qualifying;
  for (const auto& inst : institution_ids) {
    InstitutionHistogram hist;
    hist.institution = inst;
    for (const auto& author : store.query_institution(inst)) {
      auto it = qualifying.find(author);
      MaxProfile profile;
      if (it != qualifying.end()) {
        profile = it->second;
      } else {
        const auto stats = store.get_stats(author);
        profile = max_profile(stats, author, display_name_of(store, author));
      }
      if (profile.max_first < cutoff.value) continue;
      ++hist.bins[profile.max_first];
      ++hist.qualifying;
      qualifying.emplace(author, std::move(profile));
    }
    out.histograms.push_back(std::move(hist));
  }

  for (auto& [id, profile] : qualifying) out.rows.push_back(std::move(profile));
  std::stable_sort(out.rows.begin(), out.rows.end(),
                   [](const auto& a, const auto& b) { return a.max_first > b.max_first; });
  return out;
}

std::vector<CitationPoint> citation_series(std::span<const AuthorYearStats> stats) {
  std::vector<CitationPoint> out;
  for (const auto& row : stats) {
    if (row.pub_count == 0) continue;
    out.push_back({row.year, row.citations, row.pub_count,
                   static_cast<double>(row.citations) / static_cast<double>(row.pub_count)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.year < b.year; });
  return out;
}

std::vector<CitationPoint> citation_series(const Store& store, const AuthorId& author) {
  const auto stats = store.get_stats(author);
  if (stats.empty() && !store.get_directory(author)) {
    throw Error(ErrorCode::UnknownAuthor, "unknown author " + author.str());
  }
  return citation_series(stats);
}

}  // namespace pubculture
