#include "galois_arrow/execution.hpp"

#include <omp.h>

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace galois_arrow {

void set_thread_cap(int threads) {
  if (threads >= 1) omp_set_num_threads(threads);
}

int thread_cap() { return omp_get_max_threads(); }

std::optional<int> thread_cap_from_env() {
  const char* raw = std::getenv("GALOIS_ARROW_THREADS");
  if (raw == nullptr) return std::nullopt;
  const std::string_view text(raw);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1) return std::nullopt;
  return value;
}

}  // namespace galois_arrow
