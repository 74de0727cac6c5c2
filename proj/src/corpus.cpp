#include "pubculture/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "pubculture/error.hpp"

namespace pubculture {

namespace {

constexpr const char* kSurnames[] = {
    "Smith",  "Garcia", "Chen",    "Okafor", "Müller", "Rossi",  "Kowalski", "Tanaka",
    "Silva",  "Novak",  "Dubois",  "Ahmed",  "Larsen", "Kim",    "Ivanova",  "O'Brien",
    "Patel",  "Nguyen", "Haddad",  "Moreau", "Berg",   "Costa",  "Fischer",  "Ward",
};

constexpr const char* kJournals[] = {
    "Journal of Applied Widgets",
    "Annals of Reproducible Results",
    "International Journal of Incremental Advances",
    "Proceedings of the Society for Minor Findings",
    "Letters in Quantitative Anecdotes",
    "Reviews in Extended Abstracts",
    "Bulletin of Regional Methods",
    "Transactions on Moderately Large Data",
    "Open Access Reports",
    "Journal of Negative Results",
    "Frontiers in Supplementary Material",
    "Communications, Letters & Notes",
    "Quarterly Review of Overviews",
    "Acta Preliminaria",
};

constexpr int kSurnameCount = static_cast<int>(std::size(kSurnames));
constexpr int kJournalCount = static_cast<int>(std::size(kJournals));

std::string author_id(int i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "57%09d", i + 1);
  return buf;
}

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  /// Draw from [lo, hi] with weight proportional to 1 / (v - lo + 1).
  int hyperbolic(int lo, int hi) {
    std::vector<double> w;
    for (int v = lo; v <= hi; ++v) w.push_back(1.0 / (v - lo + 1));
    return lo + std::discrete_distribution<int>(w.begin(), w.end())(rng_);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), rng_);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

void validate(const CorpusSpec& spec) {
  if (spec.n_institutions < 1) throw Error(ErrorCode::BadRequest, "n_institutions must be >= 1");
  if (spec.n_authors < 1) throw Error(ErrorCode::BadRequest, "n_authors must be >= 1");
  if (spec.first_year < kMinValidYear || spec.last_year < spec.first_year ||
      spec.last_year > max_valid_year()) {
    throw Error(ErrorCode::BadRequest, "invalid year range");
  }
  if (!(spec.sr_fraction >= 0.0 && spec.sr_fraction <= 1.0)) {
    throw Error(ErrorCode::BadRequest, "sr_fraction must be in [0, 1]");
  }
}

std::string institution_id(int k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "6%07d", k + 1);
  return buf;
}

std::vector<AuthorBundle> distribute(const std::vector<AuthorBundle>& profiles,
                                     const std::vector<PublicationRecord>& publications) {
  std::map<AuthorId, AuthorBundle> by_id;
  for (const auto& p : profiles) {
    auto& b = by_id[p.author];
    b = p;
    b.publications.clear();
  }
  for (const auto& record : publications) {
    for (std::size_t i = 0; i < record.authors.size(); ++i) {
      auto& b = by_id[record.authors[i]];
      if (b.author.empty()) {
        b.author = record.authors[i];
        b.display_name = record.author_names[i];
      }
      b.publications.push_back(record);
    }
  }
  std::vector<AuthorBundle> out;
  out.reserve(by_id.size());
  for (auto& [id, b] : by_id) out.push_back(std::move(b));
  return out;
}

std::vector<AuthorBundle> generate_corpus(const CorpusSpec& spec) {
  validate(spec);
  Draw draw(spec.seed);
  const int n = spec.n_authors;

  std::vector<AuthorBundle> profiles(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> members(static_cast<std::size_t>(spec.n_institutions));
  for (int i = 0; i < n; ++i) {
    auto& p = profiles[static_cast<std::size_t>(i)];
    p.author = AuthorId(author_id(i));
    p.display_name = std::string(kSurnames[draw.uniform(0, kSurnameCount - 1)]) + ", " +
                     static_cast<char>('A' + draw.uniform(0, 25)) + ".";
    const int home = i % spec.n_institutions;
    p.affiliation_ids.push_back(institution_id(home));
    members[static_cast<std::size_t>(home)].push_back(i);
    // Every seventh author holds a joint appointment.
    if (spec.n_institutions > 1 && i % 7 == 6) {
      const int other = (home + 1) % spec.n_institutions;
      p.affiliation_ids.push_back(institution_id(other));
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  draw.shuffle(order);
  const auto n_sr = static_cast<std::size_t>(std::llround(spec.sr_fraction * n));
  const std::set<int> super(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_sr));

  // The first member of each institution acts as its usual senior author.
  auto pick_last = [&](int lead) {
    const auto& group = members[static_cast<std::size_t>(lead % spec.n_institutions)];
    if (group.size() > 1 && group.front() != lead && draw.chance(0.6)) return group.front();
    return -1;
  };

  std::vector<PublicationRecord> pubs;
  const int n_years = spec.last_year - spec.first_year + 1;
  for (int lead = 0; lead < n; ++lead) {
    const bool is_super = super.contains(lead);
    const int peak = is_super ? draw.uniform(6, 12) : draw.hyperbolic(1, 4);
    const int peak_year = spec.first_year + draw.uniform(0, n_years - 1);

    for (int year = spec.first_year; year <= spec.last_year; ++year) {
      const int count = year == peak_year ? peak : draw.uniform(0, std::min(peak, 4));
      for (int k = 0; k < count; ++k) {
        PublicationRecord r;
        char buf[32];
        std::snprintf(buf, sizeof buf, "P%07zu", pubs.size() + 1);
        r.pub_id = buf;
        r.year = year;
        r.journal = draw.chance(0.03) ? "" : kJournals[draw.hyperbolic(0, kJournalCount - 1)];
        r.citations = draw.hyperbolic(0, 60);

        std::vector<int> team{lead};
        const int extra = draw.chance(0.1) ? 0 : draw.uniform(1, 5);
        const int last = extra > 0 ? pick_last(lead) : -1;
        const auto& group = members[static_cast<std::size_t>(lead % spec.n_institutions)];
        for (int attempt = 0; static_cast<int>(team.size()) < 1 + extra - (last >= 0) &&
                              attempt < 4 * extra + 4;
             ++attempt) {
          const int c = (draw.chance(0.8) && !group.empty())
                            ? group[static_cast<std::size_t>(
                                  draw.uniform(0, static_cast<int>(group.size()) - 1))]
                            : draw.uniform(0, n - 1);
          if (c == last || std::find(team.begin(), team.end(), c) != team.end()) continue;
          team.push_back(c);
        }
        if (last >= 0) team.push_back(last);

        for (int a : team) {
          const auto& p = profiles[static_cast<std::size_t>(a)];
          r.authors.push_back(p.author);
          r.author_names.push_back(p.display_name);
        }
        pubs.push_back(std::move(r));
      }
    }
  }
  return distribute(profiles, pubs);
}

void write_bundles(const std::filesystem::path& dir, const std::vector<AuthorBundle>& bundles) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::StoreError, "cannot create " + dir.string() + ": " + ec.message());
  for (const auto& b : bundles) {
    const auto path = dir / (b.author.str() + ".json");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << serialize_bundle(b);
    if (!out) throw Error(ErrorCode::StoreError, "cannot write " + path.string());
  }
}

}  // namespace pubculture
