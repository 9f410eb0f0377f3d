// src/lyapunov.cc

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

#include "chaoswave/lyapunov.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "chaoswave/error.h"
#include "chaoswave/parallel.h"

namespace chaoswave {

DivergenceCurve divergence_curve(const DelayEmbedding &emb,
                                 const NeighborAssignment &nn,
                                 double epsilon) {
  if (epsilon < 0.0)
    throw DomainError("divergence_curve: epsilon must be non-negative");
  const std::size_t M = emb.rows();
  const int m = emb.m;

  std::int32_t max_nu = kNoNeighbor;
  for (std::int32_t v : nn.nu) max_nu = std::max(max_nu, v);
  if (max_nu == kNoNeighbor)
    throw AllNeighborsMasked("divergence_curve: no row has a neighbor");

  const std::int64_t horizon =
      static_cast<std::int64_t>(M) - static_cast<std::int64_t>(max_nu) - 1;
  const std::size_t K = horizon > 0 ? static_cast<std::size_t>(horizon) : 0;
  if (K <= 1)
    throw EmptyHorizon("divergence_curve: horizon K = " + std::to_string(K) +
                       " leaves nothing to fit");

  DivergenceCurve curve;
  curve.d.reserve(K);
  for (std::size_t k = 0; k < K; ++k) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t j = 0; j + k < M; ++j) {
      const std::int32_t v = nn.nu[j];
      if (v == kNoNeighbor) continue;
      const double *a = emb.row(j + k);
      const double *b = emb.row(static_cast<std::size_t>(v) + k);
      double acc = 0.0;
      for (int c = 0; c < m; ++c) {
        const double diff = a[c] - b[c];
        acc += diff * diff;
      }
      sum += std::log(std::sqrt(acc) + epsilon);
      ++count;
    }
    // All rows reachable at this k are sentinels: cut the curve here rather
    // than divide by zero. Later k only shrink the reachable set further.
    if (count == 0) break;
    curve.d.push_back(sum / static_cast<double>(count));
  }
  if (curve.d.size() <= 1)
    throw EmptyHorizon("divergence_curve: usable horizon too short to fit");
  return curve;
}

double lyapunov_slope(const DivergenceCurve &curve) {
  const std::size_t K = curve.d.size();
  if (K < 2)
    throw EmptyHorizon("lyapunov_slope: need at least two curve points");
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    const double kk = static_cast<double>(k);
    num += kk * curve.d[k];
    den += kk * kk;
  }
  return num / den;
}

std::pair<double, double> lyapunov_slope_affine(const DivergenceCurve &curve) {
  const std::size_t K = curve.d.size();
  if (K < 2)
    throw EmptyHorizon("lyapunov_slope_affine: need at least two curve points");
  const double n = static_cast<double>(K);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    const double kk = static_cast<double>(k);
    sx += kk;
    sy += curve.d[k];
    sxx += kk * kk;
    sxy += kk * curve.d[k];
  }
  const double denom = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;
  return {slope, intercept};
}

ExponentMap exponent_map(std::span<const double> x, std::size_t window,
                         const LyapunovOptions &opts) {
  if (window == 0) throw DomainError("exponent_map: window must be positive");
  const std::size_t T = x.size();
  if (T < window)
    throw SignalTooShort("exponent_map: signal length " + std::to_string(T) +
                         " < window " + std::to_string(window));
  ExponentMap map;
  map.window = window;
  map.m = opts.m;
  map.tau = opts.tau;
  map.epsilon = opts.epsilon;
  map.fit = opts.fit;
  const std::size_t n_w = T / window;
  map.values.assign(n_w, 0.0);
  map.degenerate.assign(n_w, 0);

  parallel_for(n_w, opts.threads, [&](std::size_t i) {
    const std::span<const double> chunk = x.subspan(i * window, window);
    const DelayEmbedding emb = delay_embed(chunk, opts.m, opts.tau);
    try {
      const NeighborAssignment nn =
          theiler_nearest_neighbors(emb, opts.backend);
      const DivergenceCurve curve = divergence_curve(emb, nn, opts.epsilon);
      map.values[i] = opts.fit == FitMode::kAffine
                          ? lyapunov_slope_affine(curve).first
                          : lyapunov_slope(curve);
    } catch (const AllNeighborsMasked &) {
      map.degenerate[i] = 1;
    } catch (const EmptyHorizon &) {
      map.degenerate[i] = 1;
    }
  });

  for (std::uint8_t flag : map.degenerate) map.degenerate_count += flag;
  return map;
}

MultiResolutionFeatures multi_resolution_exponent_maps(
    std::span<const double> x, std::vector<std::size_t> windows,
    const LyapunovOptions &opts) {
  std::sort(windows.begin(), windows.end());
  windows.erase(std::unique(windows.begin(), windows.end()), windows.end());

  MultiResolutionFeatures features;
  features.maps.reserve(windows.size());
  for (std::size_t w : windows) {
    if (w == 0)
      throw DomainError("multi_resolution_exponent_maps: window 0 requested");
    if (x.size() < w) {
      ExponentMap skipped;
      skipped.window = w;
      skipped.m = opts.m;
      skipped.tau = opts.tau;
      skipped.epsilon = opts.epsilon;
      skipped.fit = opts.fit;
      skipped.skipped = true;
      features.maps.push_back(std::move(skipped));
      continue;
    }
    try {
      features.maps.push_back(exponent_map(x, w, opts));
    } catch (const EmbeddingTooShort &) {
      // Window too small for (m, tau); report it as skipped like a window
      // longer than the signal instead of failing the whole bundle.
      ExponentMap skipped;
      skipped.window = w;
      skipped.m = opts.m;
      skipped.tau = opts.tau;
      skipped.epsilon = opts.epsilon;
      skipped.fit = opts.fit;
      skipped.skipped = true;
      features.maps.push_back(std::move(skipped));
    }
  }
  return features;
}

}  // namespace chaoswave
