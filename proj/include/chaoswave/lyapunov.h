// include/chaoswave/lyapunov.h

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

#ifndef CHAOSWAVE_LYAPUNOV_H_
#define CHAOSWAVE_LYAPUNOV_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "chaoswave/embedding.h"

namespace chaoswave {

/// Forward log-divergence curve d_0..d_{K-1}: d_k is the mean natural log of
/// the separation between each row and its nearest neighbor after k steps,
/// with an epsilon floor inside the log. K is the valid horizon
/// M - max_j nu[j] - 1.
struct DivergenceCurve {
  std::vector<double> d;

  std::size_t horizon() const { return d.size(); }
};

enum class FitMode {
  kThroughOrigin,  // lambda = sum(k*d_k) / sum(k^2), the default
  kAffine,         // ordinary least squares d_k ~ slope*k + intercept
};

struct LyapunovOptions {
  int m = 4;
  int tau = 1;
  double epsilon = 1e-8;
  FitMode fit = FitMode::kThroughOrigin;
  NeighborBackend backend = NeighborBackend::kAuto;
  unsigned threads = 1;
};

/// Per-chunk Lyapunov rates for one window size: values[i] is the rate of
/// chunk i (nats per step), 0.0 where the chunk was degenerate (empty
/// horizon or all neighbors masked); degenerate[i] flags those chunks.
struct ExponentMap {
  std::size_t window = 0;
  std::vector<double> values;
  std::vector<std::uint8_t> degenerate;  // 1 = substitute value, not a fit
  std::size_t degenerate_count = 0;
  bool skipped = false;  // window unusable for this signal (warning, no data)
  // parameters used
  int m = 4;
  int tau = 1;
  double epsilon = 1e-8;
  FitMode fit = FitMode::kThroughOrigin;
};

/// One ExponentMap per window, ascending window order.
struct MultiResolutionFeatures {
  std::vector<ExponentMap> maps;
};

/// The window set used throughout unless a caller overrides it.
inline const std::vector<std::size_t> kDefaultWindows = {64, 128, 256, 512,
                                                         1024};

// Computes the log-divergence curve of an embedded chunk given its neighbor
// assignment. The sum at step k runs over rows j <= M-k-1 that have a
// neighbor and divides by the number of terms actually summed; the curve is
// truncated early if no such row remains. Throws AllNeighborsMasked if nn
// has no usable row and EmptyHorizon if the horizon ends up <= 1.
DivergenceCurve divergence_curve(const DelayEmbedding &emb,
                                 const NeighborAssignment &nn, double epsilon);

// Through-origin least-squares rate: sum(k*d_k) / sum(k^2).
// Throws EmptyHorizon if the curve has fewer than 2 points.
double lyapunov_slope(const DivergenceCurve &curve);

// Ordinary least-squares fit d_k ~ slope*k + intercept. Diagnostic variant,
// never the default path. Returns (slope, intercept).
std::pair<double, double> lyapunov_slope_affine(const DivergenceCurve &curve);

// Splits x into floor(T/window) non-overlapping chunks (trailing remainder
// discarded) and runs the full per-chunk pipeline. Degenerate chunks
// contribute 0.0 and are counted. Throws SignalTooShort if T < window,
// EmbeddingTooShort if window cannot support (m, tau).
ExponentMap exponent_map(std::span<const double> x, std::size_t window,
                         const LyapunovOptions &opts = {});

// One exponent map per requested window, output ascending by window.
// Windows the signal cannot support are reported as empty maps with the
// skipped flag instead of failing the batch.
MultiResolutionFeatures multi_resolution_exponent_maps(
    std::span<const double> x, std::vector<std::size_t> windows,
    const LyapunovOptions &opts = {});

}  // namespace chaoswave

#endif  // CHAOSWAVE_LYAPUNOV_H_
