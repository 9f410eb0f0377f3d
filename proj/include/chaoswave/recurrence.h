// include/chaoswave/recurrence.h

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

#ifndef CHAOSWAVE_RECURRENCE_H_
#define CHAOSWAVE_RECURRENCE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace chaoswave {

/// Binary recurrence plot at one stride scale: bits[p*size+q] = 1 iff
/// |x_p - x_q| <= threshold, where threshold is the global mean of the
/// distance matrix (diagonal included). Symmetric with an all-ones diagonal.
struct RecurrencePlot {
  int scale = 1;          // stride s this plot was built at
  std::size_t size = 0;   // side length L
  std::vector<std::uint8_t> bits;  // row-major L x L, values 0/1
  double threshold = 0.0;          // epsilon^(s), amplitude units

  std::uint8_t at(std::size_t p, std::size_t q) const {
    return bits[p * size + q];
  }
};

/// One plot per scale, ascending scale order.
struct MultiScaleRPs {
  std::vector<RecurrencePlot> plots;
};

inline const std::vector<int> kDefaultScales = {1, 2, 4, 8, 16};
inline constexpr std::size_t kDefaultLengthCap = 256;

// Plain strided decimation (x_0, x_s, x_{2s}, ...), no anti-alias filter.
// Output length is ceil(|x|/s). Throws EmptyInput.
std::vector<double> downsample_stride(std::span<const double> x, int s);

// Caps the length at `cap` by picking indices floor(p*|x|/cap) for
// p = 0..cap-1; inputs of length <= cap pass through unchanged.
std::vector<double> uniform_subsample(std::span<const double> x,
                                      std::size_t cap);

// Pairwise absolute amplitude differences, row-major L x L. Throws
// EmptyInput.
std::vector<double> distance_matrix(std::span<const double> x);

// Binarized recurrence plot: threshold = mean of the full distance matrix
// (diagonal zeros included), comparison inclusive (<=).
RecurrencePlot recurrence_plot(std::span<const double> x, int scale_tag);

// Per scale: downsample_stride -> uniform_subsample(cap) -> recurrence_plot.
// Scales are processed in ascending order regardless of input order.
MultiScaleRPs multi_scale_rps(std::span<const double> x,
                              std::vector<int> scales,
                              std::size_t cap = kDefaultLengthCap,
                              unsigned threads = 1);

// Fraction of ones among the L^2 cells, in [1/L, 1].
double recurrence_rate(const RecurrencePlot &rp);

}  // namespace chaoswave

#endif  // CHAOSWAVE_RECURRENCE_H_
