#include "pubculture/service.hpp"

#include <atomic>
#include <csignal>
#include <iostream>

#include <httplib.h>
#include <unistd.h>

#include "pubculture/error.hpp"
#include "pubculture/views.hpp"

namespace pubculture {

using nlohmann::json;

namespace {

constexpr const char* kJson = "application/json; charset=utf-8";

std::optional<std::string> param(const httplib::Request& req, const char* name) {
  if (!req.has_param(name)) return std::nullopt;
  auto v = req.get_param_value(name);
  if (v.empty()) return std::nullopt;
  return v;
}

Cutoff cutoff_param(const httplib::Request& req) {
  const auto v = param(req, "cutoff");
  return v ? Cutoff::of(views::parse_int("cutoff", *v)) : Cutoff{};
}

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(views::canonical(body), kJson);
}

template <typename Handler>
httplib::Server::Handler guarded(Handler handler) {
  return [handler](const httplib::Request& req, httplib::Response& res) {
    try {
      reply(res, 200, handler(req));
    } catch (const Error& e) {
      reply(res, http_status(e.code()), views::error_json(e));
    } catch (const std::exception& e) {
      reply(res, 500, views::error_json(Error(ErrorCode::Internal, e.what())));
    }
  };
}

json job_json(const JobSnapshot& job) {
  json out{{"job_id", job.id}, {"author", job.author.str()}, {"status", status_name(job.status)}};
  if (job.report) out["report"] = views::report_json(*job.report);
  if (job.status == JobStatus::Failed) {
    out["error"] = {{"code", job.error_code}, {"message", job.error_message}};
    out["retryable"] = job.retryable;
  }
  return out;
}

}  // namespace

ApiService::ApiService(Store& store, const RecordProvider& provider, unsigned job_workers)
    : store_(store), jobs_(provider, store, job_workers), server_(std::make_unique<httplib::Server>()) {
  routes();
}

ApiService::~ApiService() {
  stop();
  jobs_.shutdown();
}

void ApiService::routes() {
  auto& s = *server_;

  s.Get("/health", guarded([](const httplib::Request&) { return views::health(); }));

  s.Get("/authors/search", guarded([this](const httplib::Request& req) {
          return views::search(store_, req.get_param_value("q"));
        }));

  s.Get(R"(/authors/([^/]+)/stats)", guarded([this](const httplib::Request& req) {
          return views::stats(store_, AuthorId(req.matches[1]), cutoff_param(req));
        }));

  s.Get(R"(/authors/([^/]+)/max-profile)", guarded([this](const httplib::Request& req) {
          return views::max_profile(store_, AuthorId(req.matches[1]));
        }));

  s.Get(R"(/authors/([^/]+)/network)", guarded([this](const httplib::Request& req) {
          const auto mode = parse_mode(param(req, "mode").value_or("all"));
          std::optional<int> year;
          if (auto y = param(req, "year")) year = static_cast<int>(views::parse_int("year", *y));
          return views::network(store_, AuthorId(req.matches[1]), mode, year, cutoff_param(req));
        }));

  s.Get(R"(/authors/([^/]+)/journals)", guarded([this](const httplib::Request& req) {
          std::size_t top = views::kDefaultTopJournals;
          std::size_t name_len = views::kDefaultNameLen;
          if (auto v = param(req, "top")) {
            const auto n = views::parse_int("top", *v);
            if (n < 1) throw Error(ErrorCode::BadRequest, "top must be >= 1");
            top = static_cast<std::size_t>(n);
          }
          if (auto v = param(req, "name_len")) {
            const auto n = views::parse_int("name_len", *v);
            if (n < 4) throw Error(ErrorCode::BadRequest, "name_len must be >= 4");
            name_len = static_cast<std::size_t>(n);
          }
          return views::journals(store_, AuthorId(req.matches[1]), top, name_len);
        }));

  s.Get(R"(/authors/([^/]+)/citations)", guarded([this](const httplib::Request& req) {
          return views::citations(store_, AuthorId(req.matches[1]));
        }));

  s.Get("/institutions/summary", guarded([this](const httplib::Request& req) {
          return views::institution(store_, views::split_ids(req.get_param_value("ids")),
                                    cutoff_param(req));
        }));

  s.Post("/authors", [this](const httplib::Request& req, httplib::Response& res) {
    try {
      json body;
      try {
        body = json::parse(req.body);
      } catch (const json::parse_error&) {
        throw Error(ErrorCode::BadRequest, "request body must be JSON");
      }
      const auto id = body.find("id");
      if (!body.is_object() || id == body.end() || !id->is_string() ||
          id->get<std::string>().empty()) {
        throw Error(ErrorCode::BadRequest, "body must be {\"id\": \"<author id>\"}");
      }
      const bool retry = body.value("retry", false);
      const auto sub = jobs_.submit(AuthorId(id->get<std::string>()), retry);
      reply(res, sub.created ? 202 : 200, json{{"job_id", sub.job_id}});
    } catch (const Error& e) {
      reply(res, http_status(e.code()), views::error_json(e));
    } catch (const std::exception& e) {
      reply(res, 500, views::error_json(Error(ErrorCode::Internal, e.what())));
    }
  });

  s.Get(R"(/jobs/([^/]+))", guarded([this](const httplib::Request& req) {
          const std::string id = req.matches[1];
          const auto job = jobs_.get(id);
          if (!job) throw Error(ErrorCode::NotFound, "no job " + id);
          return job_json(*job);
        }));
}

int ApiService::bind(const std::string& host, int port) {
  const int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
  if (bound < 0) {
    throw Error(ErrorCode::Unavailable, "cannot bind " + host + ":" + std::to_string(port));
  }
  return bound;
}

void ApiService::listen() { server_->listen_after_bind(); }

int ApiService::start(const std::string& host, int port) {
  const int bound = bind(host, port);
  thread_ = std::thread([this] { listen(); });
  server_->wait_until_ready();
  return bound;
}

void ApiService::stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

int serve(const ServiceConfig& config) {
  // Handle termination signals on a dedicated thread via sigwait.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  auto store = open_store_in(config.data_dir);
  FixtureProvider provider(config.fixture_dir);
  ApiService service(*store, provider, config.job_workers);
  const int port = service.bind(config.host, config.port);
  std::cerr << "pubculture listening on " << config.host << ":" << port << "\n";

  std::atomic<bool> signalled{false};
  std::thread waiter([&service, &signalled, signals] {
    int sig = 0;
    sigwait(&signals, &sig);
    signalled = true;
    service.stop();
  });
  service.listen();
  const bool clean = signalled;
  if (!clean) kill(getpid(), SIGTERM);  // wake the waiter
  waiter.join();
  return clean ? 0 : 1;
}

}  // namespace pubculture
