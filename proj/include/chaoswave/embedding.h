// include/chaoswave/embedding.h

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

#ifndef CHAOSWAVE_EMBEDDING_H_
#define CHAOSWAVE_EMBEDDING_H_

#include <cstdint>
#include <span>
#include <vector>

namespace chaoswave {

/// Time-delay embedding of a scalar chunk: M rows of m-dimensional delay
/// vectors, row j = [x_j, x_{j+tau}, ..., x_{j+(m-1)tau}], M = w - (m-1)tau.
struct DelayEmbedding {
  std::vector<double> vectors;  // row-major, rows() x m
  int m = 0;
  int tau = 0;
  std::size_t source_len = 0;  // original chunk length w

  std::size_t rows() const { return m > 0 ? vectors.size() / m : 0; }
  const double *row(std::size_t j) const { return vectors.data() + j * m; }
  double at(std::size_t j, int c) const { return vectors[j * m + c]; }
};

/// Marks rows whose allowed neighbor set is empty.
inline constexpr std::int32_t kNoNeighbor = -1;

/// Per-row nearest-neighbor indices under a Theiler exclusion window:
/// nu[j] minimizes the Euclidean distance over {j' : |j-j'| > theiler},
/// ties broken by the smallest index; kNoNeighbor where the set is empty.
struct NeighborAssignment {
  std::vector<std::int32_t> nu;
  int theiler = 0;
};

enum class NeighborBackend {
  kBruteForce,  // exact O(M^2) scan, the reference backend
  kKdTree,      // spatial index, agrees with brute force bit-exactly
  kAuto,        // brute force for small M, kd-tree otherwise
};

// Builds the delay embedding of one chunk.
// Throws EmbeddingTooShort if chunk.size() < (m-1)*tau + 1, DomainError on
// m < 1 or tau < 1.
DelayEmbedding delay_embed(std::span<const double> chunk, int m, int tau);

// Nearest neighbor of every row outside the Theiler window w_th = m*tau.
// Both backends produce identical assignments; rows with an empty allowed
// set get kNoNeighbor. Throws AllNeighborsMasked when no row has a
// neighbor at all.
NeighborAssignment theiler_nearest_neighbors(
    const DelayEmbedding &emb, NeighborBackend backend = NeighborBackend::kAuto);

}  // namespace chaoswave

#endif  // CHAOSWAVE_EMBEDDING_H_
