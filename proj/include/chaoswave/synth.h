// include/chaoswave/synth.h

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

#ifndef CHAOSWAVE_SYNTH_H_
#define CHAOSWAVE_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace chaoswave {

// Logistic map iterates x_{k+1} = r x_k (1 - x_k); returns x_1..x_n (x0 is
// not included). Requires 0 < r <= 4 and 0 < x0 < 1 (DomainError).
// With normalize, shifts to zero mean and rescales to unit RMS (a constant
// orbit stays all-zero after the shift).
std::vector<double> logistic_map(double r, double x0, std::size_t n,
                                 bool normalize = false);

// amp * sin(2 pi freq_hz k / sample_rate + phase) for k = 0..n-1.
// freq_hz must lie in (0, sample_rate / 2) (DomainError).
std::vector<double> sine(double freq_hz, int sample_rate, std::size_t n,
                         double amp = 1.0, double phase = 0.0);

// Deterministic white noise, uniform on [-1, 1), from the splitmix64
// generator seeded with `seed`. Same seed, same sequence on every platform.
std::vector<double> white_noise(std::uint64_t seed, std::size_t n);

}  // namespace chaoswave

#endif  // CHAOSWAVE_SYNTH_H_
