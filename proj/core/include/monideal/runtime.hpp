#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>

namespace monideal {

/// Process-wide soft deadline. Long-running loops call poll_deadline(), which
/// throws DeadlineExceeded once the deadline has passed. Callers that report
/// partial evidence catch it at power boundaries.
void set_deadline(std::optional<std::chrono::steady_clock::time_point> deadline);
std::optional<std::chrono::steady_clock::time_point> deadline();
void poll_deadline();

/// Worker count for parallel scans: MONIDEAL_THREADS if set and positive,
/// else the hardware concurrency.
std::size_t default_thread_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers. Exceptions
/// thrown by a body are rethrown on the calling thread (the first by index).
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

/// Restores the previous deadline on scope exit.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(std::optional<std::chrono::steady_clock::time_point> d)
      : saved_(deadline()) {
    set_deadline(d);
  }
  ~ScopedDeadline() { set_deadline(saved_); }
  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> saved_;
};

}  // namespace monideal
