#include <doctest.h>

#include <random>

#include "pubculture/error.hpp"
#include "pubculture/model.hpp"
#include "support/oracles.hpp"
#include "support/random_corpus.hpp"

using namespace pubculture;
using namespace pubculture::testing;

namespace {

PublicationRecord record(std::vector<std::string> ids, int year = 2009, std::int64_t citations = 0) {
  PublicationRecord r;
  r.pub_id = "p";
  r.year = year;
  r.citations = citations;
  for (auto& id : ids) {
    r.author_names.push_back("name " + id);
    r.authors.emplace_back(std::move(id));
  }
  return r;
}

AuthorYearStats row(int year, std::int64_t first, std::int64_t mid = 0, std::int64_t last = 0,
                    std::int64_t citations = 0) {
  AuthorYearStats s;
  s.author = AuthorId("X");
  s.year = year;
  s.first_count = first;
  s.mid_count = mid;
  s.last_count = last;
  s.pub_count = first + mid + last;
  s.citations = citations;
  return s;
}

}  // namespace

TEST_CASE("classify_position") {
  CHECK(classify_position(AuthorId("A"), record({"A"})) == AuthorshipPosition::First);
  CHECK(classify_position(AuthorId("B"), record({"A", "B"})) == AuthorshipPosition::Last);
  CHECK(classify_position(AuthorId("A"), record({"A", "B"})) == AuthorshipPosition::First);
  CHECK(classify_position(AuthorId("C"), record({"A", "B", "C", "D"})) == AuthorshipPosition::Middle);
  CHECK(classify_position(AuthorId("D"), record({"A", "B", "C", "D"})) == AuthorshipPosition::Last);

  try {
    classify_position(AuthorId("Z"), record({"A", "B"}));
    FAIL("expected AuthorNotOnRecord");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AuthorNotOnRecord);
  }
}

TEST_CASE("position partition holds for every record size") {
  for (int n = 1; n <= 12; ++n) {
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back("a" + std::to_string(i));
    const auto r = record(ids);
    int first = 0, mid = 0, last = 0;
    for (const auto& a : r.authors) {
      switch (classify_position(a, r)) {
        case AuthorshipPosition::First: ++first; break;
        case AuthorshipPosition::Middle: ++mid; break;
        case AuthorshipPosition::Last: ++last; break;
      }
    }
    CHECK(first == 1);
    CHECK(last == (n >= 2 ? 1 : 0));
    CHECK(mid == std::max(0, n - 2));
  }
}

TEST_CASE("year_stats on an empty year") {
  const std::vector<PublicationRecord> none;
  const auto s = year_stats(AuthorId("X"), none, 2020);
  CHECK(s.first_count == 0);
  CHECK(s.mid_count == 0);
  CHECK(s.last_count == 0);
  CHECK(s.pub_count == 0);
  CHECK(s.co_meta.empty());
  CHECK(s.key() == "X_2020");
}

TEST_CASE("year_stats single-record bookkeeping") {
  const std::vector<PublicationRecord> rs{record({"X", "B", "C"}, 2009, 7)};
  const auto s = year_stats(AuthorId("X"), rs, 2009);
  CHECK(s.first_count == 1);
  CHECK(s.mid_count == 0);
  CHECK(s.last_count == 0);
  CHECK(s.citations == 7);
  CHECK(s.first_meta == FrequencyMap{{AuthorId("B"), 1}, {AuthorId("C"), 1}});
  CHECK(s.co_meta == FrequencyMap{{AuthorId("B"), 1}, {AuthorId("C"), 1}});
  CHECK(s.mid_meta.empty());
  CHECK(s.last_meta.empty());

  // Records from other years are ignored.
  CHECK(year_stats(AuthorId("X"), rs, 2010).pub_count == 0);
}

TEST_CASE("year_stats matches the brute-force recount on random corpora") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = random_corpus(rng);
    for (int y = 2015; y <= 2019; ++y) {
      const auto s = year_stats(c.index, c.records, y);
      CHECK(matches_oracle(s, oracle_year(c.index, c.records, y)));
      // Conservation and map consistency.
      CHECK(s.first_count + s.mid_count + s.last_count == s.pub_count);
      for (const auto& [k, n] : s.co_meta) {
        const auto get = [&](const FrequencyMap& m) {
          auto it = m.find(k);
          return it == m.end() ? 0 : it->second;
        };
        CHECK(get(s.first_meta) + get(s.mid_meta) + get(s.last_meta) == n);
        CHECK(k != c.index);
      }
    }
  }
}

TEST_CASE("year_stats is independent of record order") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = random_corpus(rng);
    const auto before = all_year_stats(c.index, c.records);
    std::shuffle(c.records.begin(), c.records.end(), rng);
    CHECK(all_year_stats(c.index, c.records) == before);
  }
}

TEST_CASE("super_researcher_test") {
  const std::vector<AuthorYearStats> eight{row(2008, 2), row(2009, 8), row(2010, 1)};
  CHECK(super_researcher_test(eight, Cutoff{4}));

  const std::vector<AuthorYearStats> none;
  CHECK_FALSE(super_researcher_test(none, Cutoff{1}));
  CHECK(super_researcher_test(none, Cutoff{0}));

  const std::vector<AuthorYearStats> three{row(2019, 3), row(2020, 1)};
  CHECK_FALSE(super_researcher_test(three, Cutoff{4}));
}

TEST_CASE("super_researcher_test is monotone in the cutoff") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<AuthorYearStats> rows;
    const int n = std::uniform_int_distribution<int>(0, 6)(rng);
    std::int64_t brute_max = 0;
    for (int i = 0; i < n; ++i) {
      const auto f = std::uniform_int_distribution<std::int64_t>(0, 10)(rng);
      rows.push_back(row(2000 + i, f));
      brute_max = std::max(brute_max, f);
    }
    bool previous = true;
    for (std::int64_t c = 0; c <= 10; ++c) {
      const bool sr = super_researcher_test(rows, Cutoff{c});
      CHECK(sr == (brute_max >= c));
      CHECK((previous || !sr));
      previous = sr;
    }
  }
}

TEST_CASE("max_profile") {
  const std::vector<AuthorYearStats> rows{row(2019, 11), row(2020, 2, 5, 1)};
  const auto p = max_profile(rows, AuthorId("X"), "X. Example");
  CHECK(p.max_first == 11);
  CHECK(p.max_last == 1);
  CHECK(p.max_mid == 5);
  CHECK(p.display_name == "X. Example");

  const std::vector<AuthorYearStats> none;
  const auto zero = max_profile(none, AuthorId("X"), "");
  CHECK(zero.max_first == 0);
  CHECK(zero.max_mid == 0);
  CHECK(zero.max_last == 0);
  CHECK(zero.max_citations == 0);
}

TEST_CASE("max_profile equals a direct scan over random rows") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = random_corpus(rng);
    const auto rows = all_year_stats(c.index, c.records);
    const auto p = max_profile(rows, c.index, "");
    const auto o = oracle_max_profile(c.index, c.records);
    CHECK(p.max_first == o.max_first);
    CHECK(p.max_mid == o.max_mid);
    CHECK(p.max_last == o.max_last);
    CHECK(p.max_citations == o.max_citations);
  }
}

TEST_CASE("Cutoff rejects negative values") {
  CHECK(Cutoff::of(0).value == 0);
  CHECK_THROWS_AS(Cutoff::of(-1), Error);
}
