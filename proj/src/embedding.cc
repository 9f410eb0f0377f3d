// src/embedding.cc

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

#include "chaoswave/embedding.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "chaoswave/error.h"

namespace chaoswave {

DelayEmbedding delay_embed(std::span<const double> chunk, int m, int tau) {
  if (m < 1) throw DomainError("delay_embed: m must be a positive integer");
  if (tau < 1) throw DomainError("delay_embed: tau must be a positive integer");
  const std::size_t w = chunk.size();
  const std::size_t reach = static_cast<std::size_t>(m - 1) *
                            static_cast<std::size_t>(tau);
  if (w < reach + 1)
    throw EmbeddingTooShort("delay_embed: chunk length " + std::to_string(w) +
                            " < (m-1)*tau + 1 = " + std::to_string(reach + 1));
  DelayEmbedding emb;
  emb.m = m;
  emb.tau = tau;
  emb.source_len = w;
  const std::size_t M = w - reach;
  emb.vectors.resize(M * static_cast<std::size_t>(m));
  for (std::size_t j = 0; j < M; ++j)
    for (int c = 0; c < m; ++c)
      emb.vectors[j * m + c] = chunk[j + static_cast<std::size_t>(c) * tau];
  return emb;
}

namespace {

// Both backends must call this exact routine so their distances carry
// identical rounding. Terms are accumulated in coordinate order.
inline double dist2(const double *a, const double *b, int m) {
  double acc = 0.0;
  for (int c = 0; c < m; ++c) {
    const double d = a[c] - b[c];
    acc += d * d;
  }
  return acc;
}

// Candidate update shared by both backends: keep the lexicographic minimum
// of (distance, index), which makes the result independent of visit order.
inline void consider(double d2, std::int32_t idx, double *best_d2,
                     std::int32_t *best_idx) {
  if (*best_idx < 0 || d2 < *best_d2 || (d2 == *best_d2 && idx < *best_idx)) {
    *best_d2 = d2;
    *best_idx = idx;
  }
}

inline bool masked(std::int32_t j, std::int32_t cand, std::int32_t theiler) {
  return std::abs(j - cand) <= theiler;
}

void brute_force_assign(const DelayEmbedding &emb, std::int32_t theiler,
                        std::vector<std::int32_t> *nu) {
  const std::int32_t M = static_cast<std::int32_t>(emb.rows());
  const int m = emb.m;
  for (std::int32_t j = 0; j < M; ++j) {
    double best = std::numeric_limits<double>::infinity();
    std::int32_t best_idx = kNoNeighbor;
    const double *yj = emb.row(j);
    for (std::int32_t cand = 0; cand < M; ++cand) {
      if (masked(j, cand, theiler)) continue;
      consider(dist2(yj, emb.row(cand), m), cand, &best, &best_idx);
    }
    (*nu)[j] = best_idx;
  }
}

// k-d tree over the embedded rows. Points live in the leaves only; interior
// nodes split on a cycling axis at the median coordinate. A far subtree is
// skipped only when the squared axis gap strictly exceeds the current best,
// so boundary ties are still visited and the search returns the same
// (distance, index) minimum the brute-force scan finds.
class KdTree {
 public:
  explicit KdTree(const DelayEmbedding &emb)
      : emb_(emb), m_(emb.m) {
    const std::size_t M = emb.rows();
    order_.resize(M);
    for (std::size_t i = 0; i < M; ++i)
      order_[i] = static_cast<std::int32_t>(i);
    root_ = build(0, static_cast<std::int32_t>(M), 0);
  }

  std::int32_t nearest(std::int32_t j, std::int32_t theiler) const {
    double best = std::numeric_limits<double>::infinity();
    std::int32_t best_idx = kNoNeighbor;
    search(root_, emb_.row(j), j, theiler, &best, &best_idx);
    return best_idx;
  }

 private:
  static constexpr std::int32_t kLeafSize = 16;

  struct Node {
    std::int32_t begin = 0, end = 0;   // leaf range into order_
    std::int32_t left = -1, right = -1;
    int axis = -1;
    double split = 0.0;
  };

  std::int32_t build(std::int32_t begin, std::int32_t end, int depth) {
    Node node;
    if (end - begin <= kLeafSize) {
      node.begin = begin;
      node.end = end;
      nodes_.push_back(node);
      return static_cast<std::int32_t>(nodes_.size()) - 1;
    }
    const int axis = depth % m_;
    const std::int32_t mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid,
                     order_.begin() + end,
                     [this, axis](std::int32_t a, std::int32_t b) {
                       return emb_.at(a, axis) < emb_.at(b, axis);
                     });
    node.axis = axis;
    node.split = emb_.at(order_[mid], axis);
    const std::int32_t self = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back(node);
    const std::int32_t left = build(begin, mid, depth + 1);
    const std::int32_t right = build(mid, end, depth + 1);
    nodes_[self].left = left;
    nodes_[self].right = right;
    return self;
  }

  void search(std::int32_t ni, const double *query, std::int32_t j,
              std::int32_t theiler, double *best,
              std::int32_t *best_idx) const {
    const Node &node = nodes_[ni];
    if (node.axis < 0) {
      for (std::int32_t i = node.begin; i < node.end; ++i) {
        const std::int32_t cand = order_[i];
        if (masked(j, cand, theiler)) continue;
        consider(dist2(query, emb_.row(cand), m_), cand, best, best_idx);
      }
      return;
    }
    const double delta = query[node.axis] - node.split;
    const std::int32_t near = delta < 0.0 ? node.left : node.right;
    const std::int32_t far = delta < 0.0 ? node.right : node.left;
    search(near, query, j, theiler, best, best_idx);
    if (*best_idx >= 0 && delta * delta > *best) return;
    search(far, query, j, theiler, best, best_idx);
  }

  const DelayEmbedding &emb_;
  int m_;
  std::vector<std::int32_t> order_;
  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
};

void kd_tree_assign(const DelayEmbedding &emb, std::int32_t theiler,
                    std::vector<std::int32_t> *nu) {
  const std::int32_t M = static_cast<std::int32_t>(emb.rows());
  KdTree tree(emb);
  for (std::int32_t j = 0; j < M; ++j)
    (*nu)[j] = tree.nearest(j, theiler);
}

}  // namespace

NeighborAssignment theiler_nearest_neighbors(const DelayEmbedding &emb,
                                             NeighborBackend backend) {
  const std::size_t M = emb.rows();
  const std::int32_t theiler = emb.m * emb.tau;
  NeighborAssignment out;
  out.theiler = theiler;
  out.nu.assign(M, kNoNeighbor);

  NeighborBackend chosen = backend;
  if (chosen == NeighborBackend::kAuto)
    chosen = M < 128 ? NeighborBackend::kBruteForce : NeighborBackend::kKdTree;
  if (chosen == NeighborBackend::kBruteForce)
    brute_force_assign(emb, theiler, &out.nu);
  else
    kd_tree_assign(emb, theiler, &out.nu);

  bool any = false;
  for (std::int32_t v : out.nu)
    if (v != kNoNeighbor) { any = true; break; }
  if (!any)
    throw AllNeighborsMasked(
        "theiler_nearest_neighbors: every row masked (M = " +
        std::to_string(M) + ", exclusion radius = " + std::to_string(theiler) +
        ")");
  return out;
}

}  // namespace chaoswave
