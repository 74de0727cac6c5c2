#include "support/random_corpus.hpp"

#include <algorithm>
#include <cstdio>

#include "pubculture/corpus.hpp"

namespace pubculture::testing {

namespace {

constexpr const char* kJournals[] = {
    "Nature Widgets", "nature  widgets", " Annals of Things ", "Annals of Things",
    "J. Results",     "Letters A",       "Letters B",          "Letters C",
    "Review X",       "Review Y",        "",                   "Quarterly Ü Studies",
};

int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

PublicationRecord make_record(std::mt19937_64& rng, std::vector<AuthorId> team, int serial,
                              int first_year, int last_year) {
  PublicationRecord r;
  char buf[16];
  std::snprintf(buf, sizeof buf, "R%04d", serial);
  r.pub_id = buf;
  r.year = pick(rng, first_year, last_year);
  r.journal = kJournals[pick(rng, 0, static_cast<int>(std::size(kJournals)) - 1)];
  r.citations = pick(rng, 0, 100);
  std::shuffle(team.begin(), team.end(), rng);
  for (const auto& a : team) {
    r.authors.push_back(a);
    r.author_names.push_back("Author " + a.str());
  }
  return r;
}

}  // namespace

RandomCorpus random_corpus(std::mt19937_64& rng, int max_records, int max_authors) {
  RandomCorpus c;
  const int n_authors = pick(rng, 1, max_authors);
  for (int i = 0; i < n_authors; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "A%02d", i);
    c.pool.emplace_back(buf);
  }
  c.index = c.pool.front();

  const int n_records = pick(rng, 0, max_records);
  for (int i = 0; i < n_records; ++i) {
    const int size = pick(rng, 1, std::min(8, n_authors));
    std::vector<AuthorId> others(c.pool.begin() + 1, c.pool.end());
    std::shuffle(others.begin(), others.end(), rng);
    std::vector<AuthorId> team{c.index};
    team.insert(team.end(), others.begin(), others.begin() + (size - 1));
    c.records.push_back(make_record(rng, team, i, 2015, 2019));
  }
  return c;
}

std::vector<PublicationRecord> random_records(std::mt19937_64& rng, const std::vector<AuthorId>& pool,
                                              int n_records, int first_year, int last_year) {
  std::vector<PublicationRecord> out;
  for (int i = 0; i < n_records; ++i) {
    const int size = pick(rng, 1, std::min<int>(8, static_cast<int>(pool.size())));
    auto team = pool;
    std::shuffle(team.begin(), team.end(), rng);
    team.resize(static_cast<std::size_t>(size));
    out.push_back(make_record(rng, team, i, first_year, last_year));
  }
  return out;
}

std::vector<AuthorBundle> closed_bundles(const std::vector<PublicationRecord>& records,
                                         const std::vector<AuthorId>& pool) {
  std::vector<AuthorBundle> profiles;
  for (const auto& id : pool) {
    AuthorBundle b;
    b.author = id;
    b.display_name = "Author " + id.str();
    b.affiliation_ids = {"inst-1"};
    profiles.push_back(std::move(b));
  }
  return distribute(profiles, records);
}

}  // namespace pubculture::testing
