#include "pubculture/store.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>

#include <sqlite3.h>

#include <json.hpp>

#include "pubculture/error.hpp"
#include "pubculture/serialize.hpp"

namespace pubculture {

using nlohmann::json;

std::unique_lock<std::mutex> AuthorLocks::lock(const AuthorId& author) {
  std::mutex* m = nullptr;
  {
    std::lock_guard guard(table_mutex_);
    auto& slot = locks_[author.str()];
    if (!slot) slot = std::make_unique<std::mutex>();
    m = slot.get();
  }
  return std::unique_lock(*m);
}

bool Store::is_known(const AuthorId& author) const {
  return get_directory(author).has_value() || !get_stats(author).empty();
}

std::size_t Store::dump(std::ostream& out) const {
  const auto rows = all_stats();
  for (const auto& row : rows) out << json(row).dump() << '\n';
  return rows.size();
}

std::size_t Store::load(std::istream& in) {
  std::vector<AuthorYearStats> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      rows.push_back(json::parse(line).get<AuthorYearStats>());
    } catch (const json::exception& e) {
      throw Error(ErrorCode::SchemaError,
                  "dump line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  put_stats(rows);
  return rows.size();
}

namespace {

AuthorBundle bundle_from_doc(const std::string& text) {
  // Stored bundles were validated on the way in; reparse without skipping.
  auto parsed = parse_bundle(text);
  if (!parsed.skipped.empty()) {
    throw Error(ErrorCode::StoreError, "stored bundle for " + parsed.bundle.author.str() +
                                           " failed revalidation");
  }
  return std::move(parsed.bundle);
}

std::string lower_ascii(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

class Statement {
 public:
  Statement(sqlite3* db, const char* sql) : db_(db) {
    if (sqlite3_prepare_v2(db, sql, -1, &stmt_, nullptr) != SQLITE_OK) {
      throw Error(ErrorCode::StoreError, std::string("prepare failed: ") + sqlite3_errmsg(db));
    }
  }
  ~Statement() { sqlite3_finalize(stmt_); }
  Statement(const Statement&) = delete;
  Statement& operator=(const Statement&) = delete;

  Statement& bind(int index, const std::string& value) {
    check(sqlite3_bind_text(stmt_, index, value.data(), static_cast<int>(value.size()),
                            SQLITE_TRANSIENT));
    return *this;
  }
  Statement& bind(int index, std::int64_t value) {
    check(sqlite3_bind_int64(stmt_, index, value));
    return *this;
  }

  /// Steps once; true when a row is available.
  bool step() {
    const int rc = sqlite3_step(stmt_);
    if (rc == SQLITE_ROW) return true;
    if (rc == SQLITE_DONE) return false;
    throw Error(ErrorCode::StoreError, std::string("step failed: ") + sqlite3_errmsg(db_));
  }

  void run() {
    while (step()) {
    }
  }

  std::string text(int col) const {
    const auto* p = reinterpret_cast<const char*>(sqlite3_column_text(stmt_, col));
    return p ? std::string(p, static_cast<std::size_t>(sqlite3_column_bytes(stmt_, col)))
             : std::string();
  }

 private:
  void check(int rc) const {
    if (rc != SQLITE_OK) {
      throw Error(ErrorCode::StoreError, std::string("bind failed: ") + sqlite3_errmsg(db_));
    }
  }

  sqlite3* db_;
  sqlite3_stmt* stmt_ = nullptr;
};

class SqliteStore final : public Store {
 public:
  explicit SqliteStore(const std::string& path) {
    const int flags = SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE | SQLITE_OPEN_FULLMUTEX;
    if (sqlite3_open_v2(path.c_str(), &db_, flags, nullptr) != SQLITE_OK) {
      std::string msg = db_ ? sqlite3_errmsg(db_) : "out of memory";
      sqlite3_close(db_);
      throw Error(ErrorCode::StoreError, "cannot open store " + path + ": " + msg);
    }
    sqlite3_busy_timeout(db_, 5000);
    exec("PRAGMA journal_mode=WAL");
    exec("PRAGMA synchronous=NORMAL");
    exec(
        "CREATE TABLE IF NOT EXISTS raw_bundles(author TEXT PRIMARY KEY, doc TEXT NOT NULL);"
        "CREATE TABLE IF NOT EXISTS stats(author TEXT NOT NULL, year INTEGER NOT NULL,"
        "  doc TEXT NOT NULL, PRIMARY KEY(author, year));"
        "CREATE TABLE IF NOT EXISTS directory(author TEXT PRIMARY KEY, name TEXT NOT NULL,"
        "  affiliations TEXT NOT NULL, ingested_at TEXT NOT NULL);"
        "CREATE TABLE IF NOT EXISTS affiliations(affiliation TEXT NOT NULL, author TEXT NOT NULL,"
        "  PRIMARY KEY(affiliation, author));");
  }

  ~SqliteStore() override { sqlite3_close(db_); }

  void put_raw(const AuthorBundle& bundle) override {
    std::lock_guard guard(mutex_);
    write_raw(bundle);
  }

  std::optional<AuthorBundle> get_raw(const AuthorId& author) const override {
    std::string doc;
    {
      std::lock_guard guard(mutex_);
      Statement st(db_, "SELECT doc FROM raw_bundles WHERE author = ?");
      st.bind(1, author.str());
      if (!st.step()) return std::nullopt;
      doc = st.text(0);
    }
    return bundle_from_doc(doc);
  }

  void put_stats(const std::vector<AuthorYearStats>& rows) override {
    std::lock_guard guard(mutex_);
    Transaction tx(*this);
    for (const auto& row : rows) write_stats_row(row);
    tx.commit();
  }

  std::vector<AuthorYearStats> get_stats(const AuthorId& author) const override {
    std::vector<std::string> docs;
    {
      std::lock_guard guard(mutex_);
      Statement st(db_, "SELECT doc FROM stats WHERE author = ? ORDER BY year");
      st.bind(1, author.str());
      while (st.step()) docs.push_back(st.text(0));
    }
    return decode_stats(docs);
  }

  void commit_author(const AuthorBundle& bundle, const std::vector<AuthorYearStats>& rows,
                     const AuthorDirectoryEntry& entry) override {
    std::lock_guard guard(mutex_);
    Transaction tx(*this);
    write_raw(bundle);
    Statement del(db_, "DELETE FROM stats WHERE author = ?");
    del.bind(1, bundle.author.str()).run();
    for (const auto& row : rows) write_stats_row(row);
    write_directory(entry);
    tx.commit();
  }

  void put_directory(const AuthorDirectoryEntry& entry) override {
    std::lock_guard guard(mutex_);
    Transaction tx(*this);
    write_directory(entry);
    tx.commit();
  }

  std::optional<AuthorDirectoryEntry> get_directory(const AuthorId& author) const override {
    std::lock_guard guard(mutex_);
    Statement st(db_,
                 "SELECT author, name, affiliations, ingested_at FROM directory WHERE author = ?");
    st.bind(1, author.str());
    if (!st.step()) return std::nullopt;
    return read_directory_row(st);
  }

  std::vector<AuthorId> query_institution(const std::string& affiliation_id) const override {
    std::lock_guard guard(mutex_);
    Statement st(db_, "SELECT author FROM affiliations WHERE affiliation = ? ORDER BY author");
    st.bind(1, affiliation_id);
    std::vector<AuthorId> out;
    while (st.step()) out.emplace_back(st.text(0));
    return out;
  }

  std::vector<AuthorDirectoryEntry> search_author(const std::string& query) const override {
    std::vector<AuthorDirectoryEntry> all;
    {
      std::lock_guard guard(mutex_);
      Statement st(db_,
                   "SELECT author, name, affiliations, ingested_at FROM directory ORDER BY author");
      while (st.step()) all.push_back(read_directory_row(st));
    }
    if (query.empty()) return {};

    const auto needle = lower_ascii(query);
    std::vector<AuthorDirectoryEntry> exact;
    std::vector<AuthorDirectoryEntry> by_name;
    for (auto& e : all) {
      if (e.author.str() == query) {
        exact.push_back(std::move(e));
      } else if (lower_ascii(e.display_name).find(needle) != std::string::npos) {
        by_name.push_back(std::move(e));
      }
    }
    exact.insert(exact.end(), std::make_move_iterator(by_name.begin()),
                 std::make_move_iterator(by_name.end()));
    return exact;
  }

  std::vector<AuthorYearStats> all_stats() const override {
    std::vector<std::string> docs;
    {
      std::lock_guard guard(mutex_);
      Statement st(db_, "SELECT doc FROM stats ORDER BY author, year");
      while (st.step()) docs.push_back(st.text(0));
    }
    return decode_stats(docs);
  }

 private:
  class Transaction {
   public:
    explicit Transaction(SqliteStore& s) : store_(s) { store_.exec("BEGIN IMMEDIATE"); }
    ~Transaction() {
      if (!done_) sqlite3_exec(store_.db_, "ROLLBACK", nullptr, nullptr, nullptr);
    }
    void commit() {
      store_.exec("COMMIT");
      done_ = true;
    }

   private:
    SqliteStore& store_;
    bool done_ = false;
  };

  void exec(const char* sql) {
    char* err = nullptr;
    if (sqlite3_exec(db_, sql, nullptr, nullptr, &err) != SQLITE_OK) {
      std::string msg = err ? err : "unknown error";
      sqlite3_free(err);
      throw Error(ErrorCode::StoreError, msg);
    }
  }

  void write_raw(const AuthorBundle& bundle) {
    Statement st(db_, "INSERT OR REPLACE INTO raw_bundles(author, doc) VALUES(?, ?)");
    st.bind(1, bundle.author.str()).bind(2, serialize_bundle(bundle)).run();
  }

  void write_stats_row(const AuthorYearStats& row) {
    Statement st(db_, "INSERT OR REPLACE INTO stats(author, year, doc) VALUES(?, ?, ?)");
    st.bind(1, row.author.str()).bind(2, std::int64_t{row.year}).bind(3, json(row).dump()).run();
  }

  void write_directory(const AuthorDirectoryEntry& e) {
    Statement st(db_,
                 "INSERT OR REPLACE INTO directory(author, name, affiliations, ingested_at)"
                 " VALUES(?, ?, ?, ?)");
    st.bind(1, e.author.str())
        .bind(2, e.display_name)
        .bind(3, json(e.affiliation_ids).dump())
        .bind(4, e.ingested_at)
        .run();
    Statement del(db_, "DELETE FROM affiliations WHERE author = ?");
    del.bind(1, e.author.str()).run();
    for (const auto& aff : e.affiliation_ids) {
      Statement ins(db_, "INSERT OR IGNORE INTO affiliations(affiliation, author) VALUES(?, ?)");
      ins.bind(1, aff).bind(2, e.author.str()).run();
    }
  }

  static AuthorDirectoryEntry read_directory_row(const Statement& st) {
    AuthorDirectoryEntry e;
    e.author = AuthorId(st.text(0));
    e.display_name = st.text(1);
    e.affiliation_ids = json::parse(st.text(2)).get<std::vector<std::string>>();
    e.ingested_at = st.text(3);
    return e;
  }

  static std::vector<AuthorYearStats> decode_stats(const std::vector<std::string>& docs) {
    std::vector<AuthorYearStats> out;
    out.reserve(docs.size());
    for (const auto& d : docs) out.push_back(json::parse(d).get<AuthorYearStats>());
    return out;
  }

  sqlite3* db_ = nullptr;
  mutable std::mutex mutex_;
};

}  // namespace

std::unique_ptr<Store> open_store(const std::string& path) {
  return std::make_unique<SqliteStore>(path);
}

std::unique_ptr<Store> open_store_in(const std::filesystem::path& data_dir) {
  std::error_code ec;
  std::filesystem::create_directories(data_dir, ec);
  if (ec) throw Error(ErrorCode::StoreError, "cannot create " + data_dir.string() + ": " + ec.message());
  return open_store((data_dir / "pubculture.db").string());
}

}  // namespace pubculture
