#pragma once

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <stop_token>
#include <string>
#include <thread>
#include <vector>

#include "pubculture/ingest.hpp"

namespace pubculture {

enum class JobStatus { Pending, Running, Done, Failed };

std::string_view status_name(JobStatus s);

struct JobSnapshot {
  std::string id;
  AuthorId author;
  JobStatus status = JobStatus::Pending;
  std::optional<IngestReport> report;
  std::string error_code;
  std::string error_message;
  bool retryable = false;
};

/// Background add-author queue. Requests for an author whose job is still
/// pending or running coalesce onto that job.
class JobQueue {
 public:
  JobQueue(const RecordProvider& provider, Store& store, unsigned workers, int expand_depth = 1);
  ~JobQueue();

  JobQueue(const JobQueue&) = delete;
  JobQueue& operator=(const JobQueue&) = delete;

  struct Submission {
    std::string job_id;
    bool created = false;
  };

  /// Returns the in-flight job for the author or enqueues a new one. When the
  /// author's latest job failed with a retryable error, a new job is only
  /// created with `retry` set; otherwise throws Error(Conflict).
  Submission submit(const AuthorId& author, bool retry = false);

  std::optional<JobSnapshot> get(const std::string& job_id) const;

  /// Stops accepting work, lets running jobs finish and joins the workers.
  /// Pending jobs are left pending.
  void shutdown();

 private:
  void run(std::stop_token stop);

  const RecordProvider& provider_;
  Store& store_;
  int expand_depth_;

  mutable std::mutex mutex_;
  std::condition_variable_any cv_;
  std::deque<std::string> queue_;
  std::map<std::string, JobSnapshot> jobs_;
  std::map<AuthorId, std::string> latest_;
  std::uint64_t next_id_ = 1;
  bool accepting_ = true;
  std::vector<std::jthread> workers_;
};

}  // namespace pubculture
