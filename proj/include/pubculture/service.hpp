#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <thread>

#include "pubculture/jobs.hpp"
#include "pubculture/provider.hpp"
#include "pubculture/store.hpp"

namespace httplib {
class Server;
}

namespace pubculture {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::filesystem::path data_dir = "data";
  std::filesystem::path fixture_dir = "fixtures";
  unsigned job_workers = 2;
};

/// REST facade over the store, analytics and the add-author job queue.
///
///   GET  /health
///   GET  /authors/search?q=
///   GET  /authors/{id}/stats?cutoff=
///   GET  /authors/{id}/max-profile
///   GET  /authors/{id}/network?mode=first|last|all&year=&cutoff=
///   GET  /authors/{id}/journals?top=&name_len=
///   GET  /authors/{id}/citations
///   GET  /institutions/summary?ids=a,b&cutoff=
///   POST /authors {"id": "...", "retry": false} -> {"job_id": "..."}
///   GET  /jobs/{job_id}
class ApiService {
 public:
  ApiService(Store& store, const RecordProvider& provider, unsigned job_workers = 2);
  ~ApiService();

  /// Binds; port 0 picks a free port. Returns the bound port. Throws
  /// Error(Unavailable) when the address cannot be bound.
  int bind(const std::string& host, int port);

  /// Serves on the bound socket until stop(). Blocks.
  void listen();

  /// bind() + listen() on a background thread.
  int start(const std::string& host, int port);

  void stop();

  JobQueue& jobs() { return jobs_; }

 private:
  void routes();

  Store& store_;
  JobQueue jobs_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

/// Opens the store and fixture provider from `config` and serves until
/// SIGINT or SIGTERM. Returns a process exit code.
int serve(const ServiceConfig& config);

}  // namespace pubculture
