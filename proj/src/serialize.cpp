#include "pubculture/serialize.hpp"

namespace pubculture {

using nlohmann::json;

void to_json(json& j, const AuthorId& id) { j = id.str(); }

void from_json(const json& j, AuthorId& id) { id = AuthorId(j.get<std::string>()); }

json frequency_to_json(const FrequencyMap& m) {
  json out = json::object();
  for (const auto& [id, n] : m) out[id.str()] = n;
  return out;
}

FrequencyMap frequency_from_json(const json& j) {
  FrequencyMap out;
  for (const auto& [key, value] : j.items()) out[AuthorId(key)] = value.get<std::int64_t>();
  return out;
}

void to_json(json& j, const PublicationRecord& r) {
  j = json{{"pub_id", r.pub_id},         {"year", r.year},
           {"journal", r.journal},       {"citations", r.citations},
           {"authors", r.authors},       {"author_names", r.author_names}};
}

void to_json(json& j, const AuthorYearStats& s) {
  j = json{{"author", s.author},
           {"year", s.year},
           {"first_count", s.first_count},
           {"mid_count", s.mid_count},
           {"last_count", s.last_count},
           {"citations", s.citations},
           {"pub_count", s.pub_count},
           {"first_meta", frequency_to_json(s.first_meta)},
           {"mid_meta", frequency_to_json(s.mid_meta)},
           {"last_meta", frequency_to_json(s.last_meta)},
           {"co_meta", frequency_to_json(s.co_meta)}};
}

void from_json(const json& j, AuthorYearStats& s) {
  s.author = j.at("author").get<AuthorId>();
  s.year = j.at("year").get<int>();
  s.first_count = j.at("first_count").get<std::int64_t>();
  s.mid_count = j.at("mid_count").get<std::int64_t>();
  s.last_count = j.at("last_count").get<std::int64_t>();
  s.citations = j.at("citations").get<std::int64_t>();
  s.pub_count = j.at("pub_count").get<std::int64_t>();
  s.first_meta = frequency_from_json(j.at("first_meta"));
  s.mid_meta = frequency_from_json(j.at("mid_meta"));
  s.last_meta = frequency_from_json(j.at("last_meta"));
  s.co_meta = frequency_from_json(j.at("co_meta"));
}

void to_json(json& j, const MaxProfile& p) {
  j = json{{"author", p.author},         {"name", p.display_name},
           {"max_first", p.max_first},   {"max_mid", p.max_mid},
           {"max_last", p.max_last},     {"max_citations", p.max_citations}};
}

void to_json(json& j, const AuthorBundle& b) {
  j = json{{"author",
            {{"id", b.author}, {"name", b.display_name}, {"affiliations", b.affiliation_ids}}},
           {"publications", b.publications}};
}

void to_json(json& j, const RecordIssue& issue) {
  j = json{{"index", issue.index}, {"pub_id", issue.pub_id}, {"reason", issue.reason}};
}

}  // namespace pubculture
