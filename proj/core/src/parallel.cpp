// Copyright 2026 the netimb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netimb/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace netimb {

unsigned hardware_threads() noexcept {
  return std::max(1u, std::thread::hardware_concurrency());
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("NETIMB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 4096) {
      return static_cast<unsigned>(v);
    }
  }
  return hardware_threads();
}

unsigned resolve_thread_count(unsigned requested) {
  return requested == 0 ? default_thread_count() : requested;
}

void parallel_for_blocks(std::size_t count, unsigned threads,
                         std::size_t block_size,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
  if (count == 0) return;
  block_size = std::max<std::size_t>(1, block_size);
  const std::size_t blocks = (count + block_size - 1) / block_size;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(threads, blocks));

  if (workers <= 1) {
    for (std::size_t b = 0; b < count; b += block_size) {
      fn(b, std::min(b + block_size, count));
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto work = [&] {
    for (;;) {
      const std::size_t begin =
          next.fetch_add(block_size, std::memory_order_relaxed);
      if (begin >= count) return;
      try {
        fn(begin, std::min(begin + block_size, count));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace netimb
