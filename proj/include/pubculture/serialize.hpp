#pragma once

// JSON mappings for the domain types (nlohmann ADL hooks).

#include <json.hpp>

#include "pubculture/bundle.hpp"
#include "pubculture/model.hpp"

namespace pubculture {

void to_json(nlohmann::json& j, const AuthorId& id);
void from_json(const nlohmann::json& j, AuthorId& id);

/// Frequency maps serialize as {"<author id>": count}.
nlohmann::json frequency_to_json(const FrequencyMap& m);
FrequencyMap frequency_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const PublicationRecord& r);

void to_json(nlohmann::json& j, const AuthorYearStats& s);
void from_json(const nlohmann::json& j, AuthorYearStats& s);

void to_json(nlohmann::json& j, const MaxProfile& p);

void to_json(nlohmann::json& j, const AuthorBundle& b);

void to_json(nlohmann::json& j, const RecordIssue& issue);

}  // namespace pubculture
