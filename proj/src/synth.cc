// src/synth.cc

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

#include "chaoswave/synth.h"

#include <cmath>

#include "chaoswave/error.h"

namespace chaoswave {

std::vector<double> logistic_map(double r, double x0, std::size_t n,
                                 bool normalize) {
  if (!(r > 0.0) || !(r <= 4.0))
    throw DomainError("logistic_map: r must lie in (0, 4]");
  if (!(x0 > 0.0) || !(x0 < 1.0))
    throw DomainError("logistic_map: x0 must lie in (0, 1)");
  std::vector<double> x(n);
  double v = x0;
  for (std::size_t k = 0; k < n; ++k) {
    v = r * v * (1.0 - v);
    x[k] = v;
  }
  if (normalize && n > 0) {
    double mean = 0.0;
    for (double s : x) mean += s;
    mean /= static_cast<double>(n);
    double energy = 0.0;
    for (double &s : x) {
      s -= mean;
      energy += s * s;
    }
    double rms = std::sqrt(energy / static_cast<double>(n));
    if (rms > 0.0)
      for (double &s : x) s /= rms;
  }
  return x;
}

std::vector<double> sine(double freq_hz, int sample_rate, std::size_t n,
                         double amp, double phase) {
  if (sample_rate <= 0) throw DomainError("sine: sample_rate must be > 0");
  if (!(freq_hz > 0.0) || !(freq_hz < 0.5 * sample_rate))
    throw DomainError("sine: freq_hz must lie in (0, sample_rate / 2)");
  std::vector<double> x(n);
  const double w = 2.0 * M_PI * freq_hz / sample_rate;
  for (std::size_t k = 0; k < n; ++k)
    x[k] = amp * std::sin(w * static_cast<double>(k) + phase);
  return x;
}

std::vector<double> white_noise(std::uint64_t seed, std::size_t n) {
  std::vector<double> x(n);
  std::uint64_t state = seed;
  for (std::size_t k = 0; k < n; ++k) {
    // splitmix64 step.
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    double u = static_cast<double>(z >> 11) * 0x1.0p-53;  // [0, 1)
    x[k] = 2.0 * u - 1.0;
  }
  return x;
}

}  // namespace chaoswave
