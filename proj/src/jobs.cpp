#include "pubculture/jobs.hpp"

#include <cstdio>

#include "pubculture/error.hpp"

namespace pubculture {

std::string_view status_name(JobStatus s) {
  switch (s) {
    case JobStatus::Pending: return "pending";
    case JobStatus::Running: return "running";
    case JobStatus::Done: return "done";
    case JobStatus::Failed: return "failed";
  }
  return "failed";
}

namespace {

bool retryable(ErrorCode code) {
  return code == ErrorCode::StoreError || code == ErrorCode::Unavailable ||
         code == ErrorCode::Internal;
}

}  // namespace

JobQueue::JobQueue(const RecordProvider& provider, Store& store, unsigned workers,
                   int expand_depth)
    : provider_(provider), store_(store), expand_depth_(expand_depth) {
  if (workers == 0) workers = 1;
  for (unsigned i = 0; i < workers; ++i) {
    workers_.emplace_back([this](std::stop_token st) { run(st); });
  }
}

JobQueue::~JobQueue() { shutdown(); }

void JobQueue::shutdown() {
  {
    std::lock_guard lock(mutex_);
    accepting_ = false;
  }
  for (auto& w : workers_) w.request_stop();
  cv_.notify_all();
  workers_.clear();  // joins
}

JobQueue::Submission JobQueue::submit(const AuthorId& author, bool retry) {
  std::lock_guard lock(mutex_);
  if (!accepting_) throw Error(ErrorCode::Unavailable, "job queue is shutting down");

  if (auto it = latest_.find(author); it != latest_.end()) {
    const auto& job = jobs_.at(it->second);
    if (job.status == JobStatus::Pending || job.status == JobStatus::Running) {
      return {job.id, false};
    }
    if (job.status == JobStatus::Failed && job.retryable && !retry) {
      throw Error(ErrorCode::Conflict, "job " + job.id + " for author " + author.str() +
                                           " failed with a retryable error; resubmit with retry");
    }
  }

  char buf[32];
  std::snprintf(buf, sizeof buf, "job-%06llu", static_cast<unsigned long long>(next_id_++));
  JobSnapshot job;
  job.id = buf;
  job.author = author;
  jobs_.emplace(job.id, job);
  latest_[author] = job.id;
  queue_.push_back(job.id);
  cv_.notify_one();
  return {job.id, true};
}

std::optional<JobSnapshot> JobQueue::get(const std::string& job_id) const {
  std::lock_guard lock(mutex_);
  const auto it = jobs_.find(job_id);
  if (it == jobs_.end()) return std::nullopt;
  return it->second;
}

void JobQueue::run(std::stop_token stop) {
  while (true) {
    std::string id;
    AuthorId author;
    {
      std::unique_lock lock(mutex_);
      if (!cv_.wait(lock, stop, [this] { return !queue_.empty(); }) || stop.stop_requested()) {
        return;
      }
      id = queue_.front();
      queue_.pop_front();
      auto& job = jobs_.at(id);
      job.status = JobStatus::Running;
      author = job.author;
    }

    std::optional<IngestReport> report;
    std::string code, message;
    bool can_retry = false;
    try {
      report = ingest_author(author, provider_, store_, expand_depth_);
    } catch (const Error& e) {
      code = code_name(e.code());
      message = e.what();
      can_retry = retryable(e.code());
    } catch (const std::exception& e) {
      code = "internal";
      message = e.what();
      can_retry = true;
    }

    std::lock_guard lock(mutex_);
    auto& job = jobs_.at(id);
    if (report) {
      job.status = JobStatus::Done;
      job.report = std::move(report);
    } else {
      job.status = JobStatus::Failed;
      job.error_code = std::move(code);
      job.error_message = std::move(message);
      job.retryable = can_retry;
    }
  }
}

}  // namespace pubculture
