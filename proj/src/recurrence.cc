// src/recurrence.cc

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

#include "chaoswave/recurrence.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "chaoswave/error.h"
#include "chaoswave/parallel.h"

namespace chaoswave {

std::vector<double> downsample_stride(std::span<const double> x, int s) {
  if (s < 1) throw DomainError("downsample_stride: stride must be positive");
  if (x.empty()) throw EmptyInput("downsample_stride: empty input");
  const std::size_t stride = static_cast<std::size_t>(s);
  std::vector<double> out;
  out.reserve((x.size() + stride - 1) / stride);
  for (std::size_t i = 0; i < x.size(); i += stride) out.push_back(x[i]);
  return out;
}

std::vector<double> uniform_subsample(std::span<const double> x,
                                      std::size_t cap) {
  if (cap < 1) throw DomainError("uniform_subsample: cap must be positive");
  const std::size_t n = x.size();
  if (n <= cap) return std::vector<double>(x.begin(), x.end());
  std::vector<double> out(cap);
  for (std::size_t p = 0; p < cap; ++p) out[p] = x[p * n / cap];
  return out;
}

std::vector<double> distance_matrix(std::span<const double> x) {
  if (x.empty()) throw EmptyInput("distance_matrix: empty input");
  const std::size_t L = x.size();
  std::vector<double> D(L * L);
  for (std::size_t p = 0; p < L; ++p)
    for (std::size_t q = 0; q < L; ++q)
      D[p * L + q] = std::fabs(x[p] - x[q]);
  return D;
}

RecurrencePlot recurrence_plot(std::span<const double> x, int scale_tag) {
  const std::vector<double> D = distance_matrix(x);
  const std::size_t L = x.size();
  // Threshold is the mean over all L^2 entries, diagonal zeros included,
  // accumulated in row-major storage order.
  double sum = 0.0;
  for (double v : D) sum += v;
  const double eps = sum / static_cast<double>(L * L);

  RecurrencePlot rp;
  rp.scale = scale_tag;
  rp.size = L;
  rp.threshold = eps;
  rp.bits.resize(L * L);
  for (std::size_t i = 0; i < D.size(); ++i) rp.bits[i] = D[i] <= eps ? 1 : 0;
  return rp;
}

MultiScaleRPs multi_scale_rps(std::span<const double> x,
                              std::vector<int> scales, std::size_t cap,
                              unsigned threads) {
  if (x.empty()) throw EmptyInput("multi_scale_rps: empty input");
  if (cap < 1) throw DomainError("multi_scale_rps: cap must be positive");
  std::sort(scales.begin(), scales.end());
  scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
  for (int s : scales)
    if (s < 1) throw DomainError("multi_scale_rps: stride must be positive");

  MultiScaleRPs out;
  out.plots.resize(scales.size());
  parallel_for(scales.size(), threads, [&](std::size_t i) {
    const std::vector<double> coarse = downsample_stride(x, scales[i]);
    const std::vector<double> capped = uniform_subsample(coarse, cap);
    out.plots[i] = recurrence_plot(capped, scales[i]);
  });
  return out;
}

double recurrence_rate(const RecurrencePlot &rp) {
  std::size_t ones = 0;
  for (std::uint8_t b : rp.bits) ones += b;
  return static_cast<double>(ones) /
         static_cast<double>(rp.size * rp.size);
}

}  // namespace chaoswave
