#include "pubculture/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "pubculture/corpus.hpp"
#include "pubculture/error.hpp"
#include "pubculture/ingest.hpp"
#include "pubculture/provider.hpp"
#include "pubculture/service.hpp"
#include "pubculture/store.hpp"
#include "pubculture/views.hpp"

namespace pubculture {

using nlohmann::json;

namespace {

struct GlobalOptions {
  std::string data_dir = "data";
  std::string format = "json";
  std::uint64_t seed = 1;
};

struct IngestOptions {
  std::string fixtures = "fixtures";
  std::vector<std::string> ids;
  bool all = false;
  bool expand = false;
  unsigned jobs = 1;
};

struct QueryOptions {
  std::string author;
  std::int64_t cutoff = 0;
  std::string mode = "all";
  std::optional<int> year;
  std::size_t top = views::kDefaultTopJournals;
  std::size_t name_len = views::kDefaultNameLen;
  std::string ids;
  std::string q;
};

struct CorpusOptions {
  std::string out_dir;
  CorpusSpec spec;
};

void emit(std::ostream& out, const GlobalOptions& g, views::CsvView view, const json& payload) {
  if (g.format == "csv") {
    out << views::to_csv(view, payload);
  } else {
    out << views::canonical(payload) << '\n';
  }
}

int cmd_ingest(const GlobalOptions& g, const IngestOptions& o, std::ostream& out,
               std::ostream& err) {
  FixtureProvider provider(o.fixtures);
  std::vector<AuthorId> ids;
  if (o.all) {
    ids = provider.list();
  }
  for (const auto& id : o.ids) ids.emplace_back(id);
  if (ids.empty()) throw Error(ErrorCode::BadRequest, "no authors given (pass ids or --all)");

  auto store = open_store_in(g.data_dir);
  const auto outcomes = ingest_many(ids, provider, *store, o.expand ? 1 : 0, o.jobs);

  json ingested = json::array();
  json failed = json::array();
  for (const auto& oc : outcomes) {
    if (oc.report) {
      ingested.push_back(views::report_json(*oc.report));
    } else {
      failed.push_back({{"author", oc.author.str()}, {"code", oc.error_code}, {"message", oc.error_message}});
      err << "error: " << oc.author.str() << ": " << oc.error_code << ": " << oc.error_message << '\n';
    }
  }
  out << views::canonical(json{{"ingested", ingested}, {"failed", failed}}) << '\n';
  return failed.empty() ? 0 : 1;
}

int cmd_query(const std::string& sub, const GlobalOptions& g, const QueryOptions& o,
              std::ostream& out) {
  auto store = open_store_in(g.data_dir);
  const auto cutoff = Cutoff::of(o.cutoff);
  const AuthorId author(o.author);
  auto need_author = [&] {
    if (author.empty()) throw Error(ErrorCode::BadRequest, "query " + sub + " needs an author id");
  };

  if (sub == "stats") {
    need_author();
    emit(out, g, views::CsvView::Stats, views::stats(*store, author, cutoff));
  } else if (sub == "max-profile") {
    need_author();
    emit(out, g, views::CsvView::MaxProfile, views::max_profile(*store, author));
  } else if (sub == "network") {
    need_author();
    emit(out, g, views::CsvView::Network,
         views::network(*store, author, parse_mode(o.mode), o.year, cutoff));
  } else if (sub == "journals") {
    need_author();
    if (o.top < 1) throw Error(ErrorCode::BadRequest, "top must be >= 1");
    if (o.name_len < 4) throw Error(ErrorCode::BadRequest, "name_len must be >= 4");
    emit(out, g, views::CsvView::Journals, views::journals(*store, author, o.top, o.name_len));
  } else if (sub == "citations") {
    need_author();
    emit(out, g, views::CsvView::Citations, views::citations(*store, author));
  } else if (sub == "institution") {
    emit(out, g, views::CsvView::Institution,
         views::institution(*store, views::split_ids(o.ids), cutoff));
  } else if (sub == "search") {
    emit(out, g, views::CsvView::Search, views::search(*store, o.q));
  }
  return 0;
}

int cmd_gen_corpus(const GlobalOptions& g, CorpusOptions o, std::ostream& out) {
  o.spec.seed = g.seed;
  const auto bundles = generate_corpus(o.spec);
  write_bundles(o.out_dir, bundles);
  std::size_t pubs = 0;
  for (const auto& b : bundles) pubs += b.publications.size();
  out << views::canonical(json{{"out_dir", o.out_dir},
                               {"authors", bundles.size()},
                               {"author_publication_entries", pubs},
                               {"seed", g.seed}})
      << '\n';
  return 0;
}

int cmd_dump(const GlobalOptions& g, const std::string& file, std::ostream& out) {
  auto store = open_store_in(g.data_dir);
  if (file.empty() || file == "-") {
    store->dump(out);
    return 0;
  }
  std::ofstream f(file, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::StoreError, "cannot write " + file);
  store->dump(f);
  return 0;
}

int cmd_load(const GlobalOptions& g, const std::string& file, std::ostream& out) {
  auto store = open_store_in(g.data_dir);
  std::size_t n = 0;
  if (file.empty() || file == "-") {
    n = store->load(std::cin);
  } else {
    std::ifstream f(file, std::ios::binary);
    if (!f) throw Error(ErrorCode::NotFound, "cannot read " + file);
    n = store->load(f);
  }
  out << views::canonical(json{{"loaded", n}}) << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Publication-culture analytics: ingest bundles, query statistics, serve the API",
               "pubculture"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--data-dir", g.data_dir, "Store directory")->envname("DATA_DIR");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", g.seed, "Seed for gen-corpus");

  IngestOptions ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Ingest author bundles from a fixture directory");
  ingest_cmd->add_option("--fixtures", ingest.fixtures, "Bundle directory")->envname("FIXTURE_DIR");
  ingest_cmd->add_option("ids", ingest.ids, "Author ids");
  ingest_cmd->add_flag("--all", ingest.all, "Ingest every bundle in the directory");
  ingest_cmd->add_flag("--expand", ingest.expand, "Also ingest each author's top-30 co-authors");
  ingest_cmd->add_option("--jobs", ingest.jobs, "Parallel workers")->check(CLI::Range(1u, 256u));

  QueryOptions query;
  auto* query_cmd = app.add_subcommand("query", "Query the store");
  query_cmd->require_subcommand(1);
  auto add_author = [&](CLI::App* c) {
    c->add_option("author", query.author, "Author id")->required();
  };
  auto add_cutoff = [&](CLI::App* c) {
    c->add_option("--cutoff", query.cutoff, "Super Researcher cutoff")->check(CLI::NonNegativeNumber);
  };
  auto* q_stats = query_cmd->add_subcommand("stats", "Per-year statistics");
  add_author(q_stats);
  add_cutoff(q_stats);
  auto* q_profile = query_cmd->add_subcommand("max-profile", "Yearly maxima");
  add_author(q_profile);
  auto* q_network = query_cmd->add_subcommand("network", "Co-authorship ego-network");
  add_author(q_network);
  add_cutoff(q_network);
  q_network->add_option("--mode", query.mode, "first|last|all")
      ->check(CLI::IsMember({"first", "last", "all"}));
  q_network->add_option("--year", query.year, "Restrict to one year");
  auto* q_journals = query_cmd->add_subcommand("journals", "Top journals per year");
  add_author(q_journals);
  q_journals->add_option("--top", query.top, "Number of journals");
  q_journals->add_option("--name-len", query.name_len, "Display name length");
  auto* q_citations = query_cmd->add_subcommand("citations", "Citation series");
  add_author(q_citations);
  auto* q_institution = query_cmd->add_subcommand("institution", "Institution summary");
  q_institution->add_option("--ids", query.ids, "Comma-separated institution ids")->required();
  add_cutoff(q_institution);
  auto* q_search = query_cmd->add_subcommand("search", "Search authors by name or id");
  q_search->add_option("q", query.q, "Query")->required();

  CorpusOptions corpus;
  auto* gen_cmd = app.add_subcommand("gen-corpus", "Write a synthetic bundle corpus");
  gen_cmd->add_option("--out", corpus.out_dir, "Output directory")->required();
  gen_cmd->add_option("--institutions", corpus.spec.n_institutions)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--authors", corpus.spec.n_authors)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--first-year", corpus.spec.first_year);
  gen_cmd->add_option("--last-year", corpus.spec.last_year);
  gen_cmd->add_option("--sr-fraction", corpus.spec.sr_fraction)->check(CLI::Range(0.0, 1.0));

  std::string dump_file;
  auto* dump_cmd = app.add_subcommand("dump", "Export derived statistics as JSON lines");
  dump_cmd->add_option("--out", dump_file, "Output file (default stdout)");

  std::string load_file;
  auto* load_cmd = app.add_subcommand("load", "Import a JSON-lines dump");
  load_cmd->add_option("--in", load_file, "Input file (default stdin)");

  ServiceConfig service;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  serve_cmd->add_option("--host", service.host)->envname("HOST");
  serve_cmd->add_option("--port", service.port)->envname("PORT")->check(CLI::Range(0, 65535));
  std::string fixture_dir = "fixtures";
  serve_cmd->add_option("--fixtures", fixture_dir, "Bundle directory for add-author")
      ->envname("FIXTURE_DIR");
  serve_cmd->add_option("--workers", service.job_workers, "Ingest job workers");

  std::vector<std::string> argv_storage{"pubculture"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*ingest_cmd) return cmd_ingest(g, ingest, out, err);
    if (*query_cmd) {
      for (auto* sub : query_cmd->get_subcommands()) return cmd_query(sub->get_name(), g, query, out);
    }
    if (*gen_cmd) return cmd_gen_corpus(g, corpus, out);
    if (*dump_cmd) return cmd_dump(g, dump_file, out);
    if (*load_cmd) return cmd_load(g, load_file, out);
    if (*serve_cmd) {
      service.data_dir = g.data_dir;
      service.fixture_dir = fixture_dir;
      return serve(service);
    }
  } catch (const Error& e) {
    err << views::canonical(views::error_json(e)) << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << views::canonical(views::error_json(Error(ErrorCode::Internal, e.what()))) << '\n';
    return 1;
  }
  return 1;
}

}  // namespace pubculture
