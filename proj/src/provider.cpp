#include "pubculture/provider.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pubculture/error.hpp"

namespace pubculture {

namespace fs = std::filesystem;

namespace {

bool safe_file_stem(const std::string& id) {
  if (id.empty() || id == "." || id == "..") return false;
  return id.find_first_of("/\\") == std::string::npos && id.find('\0') == std::string::npos;
}

}  // namespace

ParsedBundle FixtureProvider::fetch(const AuthorId& author) const {
  if (!safe_file_stem(author.str())) {
    throw Error(ErrorCode::BadRequest, "invalid author id '" + author.str() + "'");
  }
  const auto path = dir_ / (author.str() + ".json");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::NotFound, "no bundle for author " + author.str());

  std::ostringstream buf;
  buf << in.rdbuf();
  auto parsed = parse_bundle(buf.str());
  if (parsed.bundle.author != author) {
    throw Error(ErrorCode::ValidationFailed,
                path.string() + " holds author " + parsed.bundle.author.str());
  }
  return parsed;
}

std::vector<AuthorId> FixtureProvider::list() const {
  std::vector<AuthorId> ids;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir_, ec)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    ids.emplace_back(entry.path().stem().string());
  }
  if (ec) throw Error(ErrorCode::NotFound, "cannot list " + dir_.string() + ": " + ec.message());
  std::sort(ids.begin(), ids.end());
  return ids;
}

ParsedBundle LiveProvider::fetch(const AuthorId& author) const {
  throw Error(ErrorCode::Unavailable, "live provider is not available (author " + author.str() + ")");
}

}  // namespace pubculture
