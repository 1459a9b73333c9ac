#include "monideal/runtime.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "monideal/error.hpp"

namespace monideal {

namespace {

// Nanoseconds since the steady-clock epoch; 0 means no deadline.
std::atomic<std::int64_t> g_deadline_ns{0};

}  // namespace

void set_deadline(std::optional<std::chrono::steady_clock::time_point> d) {
  if (!d) {
    g_deadline_ns.store(0);
    return;
  }
  const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                      d->time_since_epoch())
                      .count();
  g_deadline_ns.store(ns == 0 ? 1 : ns);
}

std::optional<std::chrono::steady_clock::time_point> deadline() {
  const auto ns = g_deadline_ns.load();
  if (ns == 0) return std::nullopt;
  return std::chrono::steady_clock::time_point(std::chrono::nanoseconds(ns));
}

void poll_deadline() {
  const auto ns = g_deadline_ns.load(std::memory_order_relaxed);
  if (ns == 0) return;
  const auto now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                       std::chrono::steady_clock::now().time_since_epoch())
                       .count();
  if (now >= ns) throw DeadlineExceeded();
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("MONIDEAL_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      // Unparsable values fall back to the hardware default.
    }
  }
  const auto hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  const auto n = std::min(threads, count);
  pool.reserve(n);
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  pool.clear();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace monideal
