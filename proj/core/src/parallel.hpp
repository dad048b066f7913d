#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "solenoid/errors.hpp"

namespace solenoid::detail {

/// Runs f(i) for i in [0, n) on up to hardware_concurrency threads. The first
/// exception thrown by any task is rethrown after all workers stop.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1U, std::thread::hardware_concurrency()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n && !failed; i = next++) {
          try {
            f(i);
          } catch (...) {
            const std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            failed = true;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

/// Shared intersection counter enforcing the enumeration cap.
class WorkBudget {
 public:
  explicit WorkBudget(std::uint64_t cap) : cap_(cap) {}

  void charge(std::uint64_t n) {
    const std::uint64_t used = used_.fetch_add(n) + n;
    if (used > cap_) {
      throw ResourceLimitError("enumeration exceeded the cap of " + std::to_string(cap_) +
                               " intersections");
    }
  }

  [[nodiscard]] std::uint64_t used() const { return used_.load(); }

 private:
  std::uint64_t cap_;
  std::atomic<std::uint64_t> used_{0};
};

}  // namespace solenoid::detail
