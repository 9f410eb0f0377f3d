// include/chaoswave/parallel.h

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

#ifndef CHAOSWAVE_PARALLEL_H_
#define CHAOSWAVE_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace chaoswave {

// Resolves a thread count: requested > 0 wins, otherwise the
// CHAOSWAVE_THREADS environment variable, otherwise hardware concurrency.
// Always returns >= 1.
unsigned resolve_threads(unsigned requested);

// Runs fn(i) for i in [0, n) on up to `threads` worker threads using a
// static index partition. Each index writes only its own output slot, so
// results are identical regardless of the thread count. The first
// exception thrown by any worker is rethrown on the calling thread.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)> &fn);

}  // namespace chaoswave

#endif  // CHAOSWAVE_PARALLEL_H_
