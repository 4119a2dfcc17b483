#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>

namespace galois_arrow {

/// Every data-parallel kernel takes one of these. Serial is the reference
/// path; Parallel must produce identical results in identical order.
enum class Execution { Serial, Parallel };

/// Caps OpenMP parallelism for subsequent Parallel kernels (values < 1 are ignored).
void set_thread_cap(int threads);
int thread_cap();
/// Reads GALOIS_ARROW_THREADS; nullopt when unset or not a positive integer.
std::optional<int> thread_cap_from_env();

/// Runs body(i) for i in [0, count). Every iteration must write only to its
/// own output slot. When iterations throw, the exception from the lowest
/// index is rethrown after the loop, in both modes.
template <class Body>
void parallel_for(std::size_t count, Execution exec, Body&& body) {
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr first_error;
  std::size_t first_index = std::numeric_limits<std::size_t>::max();
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(galois_arrow_parallel_for_error)
      {
        if (static_cast<std::size_t>(i) < first_index) {
          first_index = static_cast<std::size_t>(i);
          first_error = std::current_exception();
        }
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace galois_arrow
