#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include "pubculture/error.hpp"
#include "pubculture/store.hpp"
#include "support/random_corpus.hpp"
#include "support/temp_dir.hpp"

using namespace pubculture;
using namespace pubculture::testing;

namespace {

AuthorYearStats stats_row(const std::string& author, int year, std::int64_t first) {
  AuthorYearStats s;
  s.author = AuthorId(author);
  s.year = year;
  s.first_count = first;
  s.pub_count = first + 1;
  s.mid_count = 1;
  s.citations = 3 * first;
  s.first_meta[AuthorId("co-" + author)] = first;
  s.mid_meta[AuthorId("co-" + author)] = 1;
  s.co_meta[AuthorId("co-" + author)] = first + 1;
  return s;
}

AuthorDirectoryEntry entry(const std::string& id, const std::string& name,
                           std::vector<std::string> affiliations) {
  return AuthorDirectoryEntry{AuthorId(id), name, std::move(affiliations), "2024-01-01T00:00:00Z"};
}

}  // namespace

TEST_CASE("raw tier: last write wins") {
  auto store = open_store(":memory:");
  CHECK_FALSE(store->get_raw(AuthorId("X")).has_value());

  AuthorBundle b;
  b.author = AuthorId("X");
  b.display_name = "first";
  store->put_raw(b);
  b.display_name = "second";
  store->put_raw(b);
  REQUIRE(store->get_raw(AuthorId("X")).has_value());
  CHECK(store->get_raw(AuthorId("X"))->display_name == "second");
}

TEST_CASE("derived tier upserts by key and reads year-ascending") {
  auto store = open_store(":memory:");
  store->put_stats({stats_row("A", 2020, 1), stats_row("A", 2018, 2)});
  store->put_stats({stats_row("A", 2020, 5)});
  const auto rows = store->get_stats(AuthorId("A"));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].year == 2018);
  CHECK(rows[1] == stats_row("A", 2020, 5));
  CHECK(store->get_stats(AuthorId("B")).empty());
}

TEST_CASE("commit_author replaces stale rows") {
  auto store = open_store(":memory:");
  AuthorBundle b;
  b.author = AuthorId("A");
  store->commit_author(b, {stats_row("A", 2010, 1), stats_row("A", 2011, 1)},
                       entry("A", "Ann", {"i1"}));
  store->commit_author(b, {stats_row("A", 2012, 4)}, entry("A", "Ann B", {"i2"}));
  const auto rows = store->get_stats(AuthorId("A"));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].year == 2012);
  CHECK(store->get_directory(AuthorId("A"))->display_name == "Ann B");
  CHECK(store->query_institution("i1").empty());
  CHECK(store->query_institution("i2") == std::vector<AuthorId>{AuthorId("A")});
}

TEST_CASE("is_known") {
  auto store = open_store(":memory:");
  CHECK_FALSE(store->is_known(AuthorId("A")));
  store->put_stats({stats_row("A", 2010, 1)});
  CHECK(store->is_known(AuthorId("A")));
  store->put_directory(entry("B", "Bo", {}));
  CHECK(store->is_known(AuthorId("B")));
}

TEST_CASE("store survives reopen with 1000 rows") {
  TempDir dir;
  std::vector<AuthorYearStats> rows;
  for (int a = 0; a < 100; ++a) {
    for (int y = 0; y < 10; ++y) rows.push_back(stats_row("A" + std::to_string(1000 + a), 2000 + y, (a + y) % 7));
  }
  {
    auto store = open_store_in(dir.path());
    store->put_stats(rows);
    store->put_directory(entry("A1000", "Persisted", {"inst"}));
  }
  auto store = open_store_in(dir.path());
  CHECK(store->all_stats() == rows);
  CHECK(store->get_directory(AuthorId("A1000"))->display_name == "Persisted");
}

TEST_CASE("dump and load round-trip") {
  auto a = open_store(":memory:");
  std::vector<AuthorYearStats> rows;
  for (int i = 0; i < 30; ++i) rows.push_back(stats_row("P" + std::to_string(i % 5), 2000 + i, i));
  a->put_stats(rows);
  std::stringstream buf;
  CHECK(a->dump(buf) == 30);

  auto b = open_store(":memory:");
  CHECK(b->load(buf) == 30);
  CHECK(b->all_stats() == a->all_stats());

  std::stringstream again;
  b->dump(again);
  std::stringstream first;
  a->dump(first);
  CHECK(again.str() == first.str());

  std::istringstream bad("{\"author\": 3}\n");
  CHECK_THROWS_AS(b->load(bad), Error);
}

TEST_CASE("search_author ranks the exact id first") {
  auto store = open_store(":memory:");
  store->put_directory(entry("200", "Maria Lopez", {}));
  store->put_directory(entry("100", "Jose Maria Ruiz", {}));
  store->put_directory(entry("maria", "Nobody", {}));
  store->put_directory(entry("300", "Unrelated", {}));

  const auto hits = store->search_author("maria");
  REQUIRE(hits.size() == 3);
  CHECK(hits[0].author == AuthorId("maria"));
  CHECK(hits[1].author == AuthorId("100"));
  CHECK(hits[2].author == AuthorId("200"));
  CHECK(store->search_author("").empty());
  CHECK(store->search_author("MARIA L").size() == 1);
  CHECK(store->search_author("zzz").empty());
}

TEST_CASE("search and institution queries agree with a linear scan") {
  std::mt19937_64 rng(5);
  auto store = open_store(":memory:");
  const char* words[] = {"Alpha", "beta", "Gamma", "delta", "EPSILON", "zeta"};
  const std::vector<std::string> insts{"i0", "i1", "i2", "i3"};
  std::vector<AuthorDirectoryEntry> all;
  for (int i = 0; i < 200; ++i) {
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    std::string name = std::string(words[pick(6)]) + " " + words[pick(6)];
    std::vector<std::string> aff{insts[static_cast<std::size_t>(pick(4))]};
    if (pick(3) == 0) aff.push_back(insts[static_cast<std::size_t>(pick(4))]);
    std::sort(aff.begin(), aff.end());
    aff.erase(std::unique(aff.begin(), aff.end()), aff.end());
    char id[16];
    std::snprintf(id, sizeof id, "%05d", i * 7 % 200);
    all.push_back(entry(id, name, aff));
    store->put_directory(all.back());
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.author < y.author; });

  const auto lower = [](std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  };
  for (const std::string q : {"alpha", "TA", "a g", "psi", "00014", "nothing"}) {
    std::vector<AuthorId> expected;
    for (const auto& e : all) {
      if (e.author.str() == q) expected.insert(expected.begin(), e.author);
    }
    for (const auto& e : all) {
      if (e.author.str() != q && lower(e.display_name).find(lower(q)) != std::string::npos) {
        expected.push_back(e.author);
      }
    }
    std::vector<AuthorId> got;
    for (const auto& e : store->search_author(q)) got.push_back(e.author);
    CHECK_MESSAGE(got == expected, q);
  }
  for (const auto& inst : insts) {
    std::vector<AuthorId> expected;
    for (const auto& e : all) {
      if (std::find(e.affiliation_ids.begin(), e.affiliation_ids.end(), inst) != e.affiliation_ids.end()) {
        expected.push_back(e.author);
      }
    }
    CHECK(store->query_institution(inst) == expected);
  }
}

TEST_CASE("concurrent commits for distinct authors") {
  TempDir dir;
  auto store = open_store_in(dir.path());
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      for (int i = 0; i < 10; ++i) {
        const std::string id = "T" + std::to_string(t) + "_" + std::to_string(i);
        AuthorBundle b;
        b.author = AuthorId(id);
        auto lock = store->locks().lock(b.author);
        store->commit_author(b, {stats_row(id, 2000, 1)}, entry(id, id, {"shared"}));
      }
    });
  }
  for (auto& t : threads) t.join();
  CHECK(store->all_stats().size() == 80);
  CHECK(store->query_institution("shared").size() == 80);
}

TEST_CASE("open_store reports unusable paths") {
  TempDir dir;
  CHECK_THROWS_AS(open_store((dir / "missing" / "sub" / "x.db").string()), Error);
}
