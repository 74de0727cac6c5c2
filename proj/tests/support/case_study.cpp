#include "support/case_study.hpp"

#include <cstdio>
#include <map>

#include "pubculture/corpus.hpp"

namespace pubculture::testing {

namespace {

std::string id(int n) { return std::to_string(60000000 + n); }

class Builder {
 public:
  void person(int n, std::string name, std::vector<std::string> affiliations) {
    names_[id(n)] = name;
    AuthorBundle b;
    b.author = AuthorId(id(n));
    b.display_name = std::move(name);
    b.affiliation_ids = std::move(affiliations);
    profiles_.push_back(std::move(b));
  }

  void paper(int year, std::vector<int> team, const std::string& journal, std::int64_t citations) {
    PublicationRecord r;
    char buf[16];
    std::snprintf(buf, sizeof buf, "CS%05zu", pubs_.size() + 1);
    r.pub_id = buf;
    r.year = year;
    r.journal = journal;
    r.citations = citations;
    for (int n : team) {
      r.authors.emplace_back(id(n));
      r.author_names.push_back(names_.at(id(n)));
    }
    pubs_.push_back(std::move(r));
  }

  std::vector<AuthorBundle> build() const { return distribute(profiles_, pubs_); }

 private:
  std::map<std::string, std::string> names_;
  std::vector<AuthorBundle> profiles_;
  std::vector<PublicationRecord> pubs_;
};

constexpr int A = 1, B = 2, L = 10;
constexpr int S[] = {21, 22, 23, 24};         // Prof. A's students
constexpr int M[] = {31, 32, 33, 34, 35, 36};  // assorted collaborators
constexpr int P[] = {41, 42, 43, 44, 45};      // Prof. B's senior co-authors
constexpr int T[] = {51, 52, 53};              // Prof. B's students

const std::string kJournalsA[] = {
    "Journal of Applied Widgets",
    "Letters in Quantitative Anecdotes",
    "Open Access Reports",
    "Bulletin of Regional Methods",
    "International Journal of Incremental Advances in Everything Measurable",
    "Reviews in Extended Abstracts",
    "Frontiers in Supplementary Material",
    "Acta Preliminaria",
    "Quarterly Review of Overviews",
    "Journal of Negative Results",
    "Communications, Letters & Notes",
    "Transactions on Moderately Large Data",
};

const std::string kJournalsB[] = {
    "Annals of Reproducible Results",
    "Proceedings of the Society for Minor Findings",
    "Journal of Careful Studies",
    "Annals of Reproducible Results",
};

}  // namespace

std::vector<AuthorBundle> case_study_bundles() {
  Builder b;
  b.person(A, "Prof. A", {"inst-red"});
  b.person(B, "Prof. B", {"inst-blue"});
  b.person(L, "Dr. L", {"inst-red"});
  for (int i = 0; i < 4; ++i) b.person(S[i], "Student S" + std::to_string(i + 1), {"inst-red"});
  for (int i = 0; i < 6; ++i) b.person(M[i], "Collaborator M" + std::to_string(i + 1), {"inst-green"});
  for (int i = 0; i < 5; ++i) b.person(P[i], "Senior P" + std::to_string(i + 1), {"inst-blue"});
  for (int i = 0; i < 3; ++i) b.person(T[i], "Student T" + std::to_string(i + 1), {"inst-blue"});

  int k = 0;
  auto journal_a = [&] { return kJournalsA[static_cast<std::size_t>((k * 7) % 12)]; };

  // Dr. L leads 5 papers in 2008: a Super Researcher at cutoff 4.
  for (int i = 0; i < 5; ++i, ++k) b.paper(2008, {L, M[4], M[5]}, journal_a(), 20 + i);

  // Prof. A: 8 first-author papers in 2009, all with L as last author.
  for (int i = 0; i < 8; ++i, ++k) {
    if (i % 2 == 0) {
      b.paper(2009, {A, M[i % 6], L}, journal_a(), 2 + 5 * i);
    } else {
      b.paper(2009, {A, M[i % 6], M[(i + 1) % 6], L}, journal_a(), 3 + 4 * i);
    }
  }
  // A handful of first-author papers afterwards, below the cutoff.
  for (int y = 2010; y <= 2012; ++y, ++k) b.paper(y, {A, M[y % 6], L}, journal_a(), 10 + y % 7);
  // Middle-author years.
  for (int y = 2011; y <= 2014; ++y) {
    for (int i = 0; i < 3; ++i, ++k) b.paper(y, {L, A, M[(y + i) % 6]}, journal_a(), 5 + i);
  }
  // Last-author years with four students; each leads 5 papers in 2020.
  for (int y = 2015; y <= 2020; ++y) {
    const int per_student = y == 2020 ? 5 : 1 + y % 2;
    for (int s = 0; s < 4; ++s) {
      for (int i = 0; i < per_student; ++i, ++k) {
        b.paper(y, {S[s], S[(s + 1 + i % 3) % 4], M[(s + i) % 6], A}, journal_a(), 2 + (k * 13) % 40);
      }
    }
  }

  // Prof. B: 1989-2020, one to three first-author papers a year, rotating
  // senior authors.
  int kb = 0;
  for (int y = 1989; y <= 2020; ++y) {
    const int n_first = 1 + y % 3;
    for (int i = 0; i < n_first; ++i, ++kb) {
      b.paper(y, {B, T[(y + i) % 3], P[(y + i) % 5]}, kJournalsB[static_cast<std::size_t>(kb % 4)],
              30 + (kb * 37) % 520);
    }
  }
  // Last-author papers with students who stay below 4 first-author papers.
  for (int y = 2016; y <= 2020; ++y) {
    for (int t = 0; t < 3; ++t) {
      for (int i = 0; i < 2; ++i, ++kb) {
        b.paper(y, {T[t], P[(t + i) % 5], B}, kJournalsB[static_cast<std::size_t>(kb % 4)],
                30 + (kb * 53) % 520);
      }
    }
  }
  return b.build();
}

void write_case_study(const std::filesystem::path& dir) { write_bundles(dir, case_study_bundles()); }

}  // namespace pubculture::testing
