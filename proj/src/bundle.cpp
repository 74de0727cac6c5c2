#include "pubculture/bundle.hpp"

#include <optional>
#include <set>

#include <json.hpp>

#include "pubculture/error.hpp"
#include "pubculture/serialize.hpp"

namespace pubculture {

using nlohmann::json;

namespace {

std::optional<std::string> optional_string(const json& obj, const char* field) {
  const auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw Error(ErrorCode::SchemaError, std::string(field) + " must be a string");
  return it->get<std::string>();
}

AuthorBundle parse_author_block(const json& doc) {
  const auto author = doc.find("author");
  if (author == doc.end() || !author->is_object()) {
    throw Error(ErrorCode::SchemaError, "bundle has no \"author\" object");
  }
  AuthorBundle b;
  const auto id = optional_string(*author, "id");
  if (!id || id->empty()) throw Error(ErrorCode::SchemaError, "author.id must be a non-empty string");
  b.author = AuthorId(*id);
  b.display_name = optional_string(*author, "name").value_or("");

  if (const auto aff = author->find("affiliations"); aff != author->end() && !aff->is_null()) {
    if (!aff->is_array()) throw Error(ErrorCode::SchemaError, "author.affiliations must be an array");
    for (const auto& a : *aff) {
      if (!a.is_string()) throw Error(ErrorCode::SchemaError, "affiliation ids must be strings");
      b.affiliation_ids.push_back(a.get<std::string>());
    }
  }
  return b;
}

// Returns the reason a record is rejected, or nullopt when it is valid.
std::optional<std::string> parse_record(const json& raw, const AuthorId& owner,
                                        PublicationRecord& out) {
  if (!raw.is_object()) return "record is not an object";

  const auto pub_id = raw.find("pub_id");
  if (pub_id == raw.end() || !pub_id->is_string() || pub_id->get<std::string>().empty()) {
    return "missing pub_id";
  }
  out.pub_id = pub_id->get<std::string>();

  const auto year = raw.find("year");
  if (year == raw.end() || year->is_null()) return "missing year";
  if (!year->is_number_integer()) return "year is not an integer";
  const auto y = year->get<std::int64_t>();
  if (y < kMinValidYear || y > max_valid_year()) return "year out of range";
  out.year = static_cast<int>(y);

  if (const auto j = raw.find("journal"); j != raw.end() && !j->is_null()) {
    if (!j->is_string()) return "journal is not a string";
    out.journal = j->get<std::string>();
  }

  if (const auto c = raw.find("citations"); c != raw.end() && !c->is_null()) {
    if (!c->is_number_integer() || c->get<std::int64_t>() < 0) {
      return "citations must be a non-negative integer";
    }
    out.citations = c->get<std::int64_t>();
  }

  const auto authors = raw.find("authors");
  if (authors == raw.end() || !authors->is_array() || authors->empty()) {
    return "authors must be a non-empty array";
  }
  std::set<std::string> seen;
  for (const auto& a : *authors) {
    if (!a.is_string() || a.get<std::string>().empty()) return "author ids must be non-empty strings";
    if (!seen.insert(a.get<std::string>()).second) {
      return "duplicate author id " + a.get<std::string>();
    }
    out.authors.emplace_back(a.get<std::string>());
  }

  const auto names = raw.find("author_names");
  if (names == raw.end() || !names->is_array()) return "author_names must be an array";
  if (names->size() != out.authors.size()) return "authors and author_names differ in length";
  for (const auto& n : *names) {
    if (!n.is_string()) return "author names must be strings";
    out.author_names.push_back(n.get<std::string>());
  }

  if (!seen.contains(owner.str())) return "bundle author not listed on record";
  return std::nullopt;
}

}  // namespace

ParsedBundle parse_bundle(std::string_view raw) {
  json doc;
  try {
    doc = json::parse(raw);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, std::string("malformed bundle: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::SchemaError, "bundle must be a JSON object");

  ParsedBundle result;
  result.bundle = parse_author_block(doc);

  const auto pubs = doc.find("publications");
  if (pubs == doc.end() || pubs->is_null()) return result;
  if (!pubs->is_array()) throw Error(ErrorCode::SchemaError, "publications must be an array");

  result.total_records = pubs->size();
  std::set<std::string> pub_ids;
  for (std::size_t i = 0; i < pubs->size(); ++i) {
    PublicationRecord record;
    auto reason = parse_record((*pubs)[i], result.bundle.author, record);
    if (!reason && !pub_ids.insert(record.pub_id).second) reason = "duplicate pub_id";
    if (reason) {
      result.skipped.push_back(RecordIssue{i, record.pub_id, *reason});
      continue;
    }
    result.bundle.publications.push_back(std::move(record));
  }
  return result;
}

std::string serialize_bundle(const AuthorBundle& bundle) { return json(bundle).dump(2) + "\n"; }

}  // namespace pubculture
