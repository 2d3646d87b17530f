#ifndef ROOTFACE_PARALLEL_HPP
#define ROOTFACE_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rootface {

/// Calls body(worker, begin, end) on contiguous slices of [0, count). The
/// first exception thrown by any worker is rethrown on the caller's thread.
template <typename Body>
void parallel_ranges(std::uint64_t count, unsigned jobs, Body&& body) {
  jobs = std::max(1U, jobs);
  if (jobs == 1 || count < 2) {
    body(0U, std::uint64_t{0}, count);
    return;
  }
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, count));
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (count + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t begin = std::min(count, chunk * w);
    const std::uint64_t end = std::min(count, begin + chunk);
    workers.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace rootface

#endif  // ROOTFACE_PARALLEL_HPP
