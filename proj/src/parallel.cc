// src/parallel.cc

// Copyright 2026  The chaoswave authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "chaoswave/parallel.h"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace chaoswave {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char *env = std::getenv("CHAOSWAVE_THREADS")) {
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)> &fn) {
  if (n == 0) return;
  unsigned t = resolve_threads(threads);
  if (t > n) t = static_cast<unsigned>(n);
  if (t <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  // Static partition into contiguous index ranges, one per worker. Each
  // index is visited exactly once, so results written to preallocated
  // slots do not depend on the thread count.
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  workers.reserve(t);
  std::size_t base = n / t, extra = n % t, begin = 0;
  for (unsigned w = 0; w < t; ++w) {
    std::size_t len = base + (w < extra ? 1 : 0);
    std::size_t end = begin + len;
    workers.emplace_back([&, begin, end]() {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto &w : workers) w.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace chaoswave
