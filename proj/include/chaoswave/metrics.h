// include/chaoswave/metrics.h

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

#ifndef CHAOSWAVE_METRICS_H_
#define CHAOSWAVE_METRICS_H_

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "chaoswave/signal.h"

namespace chaoswave {

/// One-sided complex STFT: n_frames x (n_fft/2 + 1) coefficients, frame t
/// covering samples [t*hop, t*hop + n_fft) under a periodic Hann window.
struct Spectrogram {
  std::vector<std::complex<double>> coeffs;  // row-major
  std::size_t n_frames = 0;
  std::size_t n_bins = 0;
  int n_fft = 0;
  int hop = 0;
  std::string window = "hann";

  const std::complex<double> *frame(std::size_t t) const {
    return coeffs.data() + t * n_bins;
  }
};

// Short-time Fourier transform with a periodic Hann window. n_fft must be a
// power of two >= 16 and 1 <= hop <= n_fft (DomainError otherwise);
// SignalTooShort if the signal is shorter than one frame.
Spectrogram stft(std::span<const double> x, int n_fft, int hop);

// Log-spectral distance in dB: per frame the RMS over one-sided bins of
// log10(|S_ref|^2 + floor) - log10(|S_est|^2 + floor), averaged over
// frames. Throws LengthMismatch / RateMismatch.
double lsd(const Signal &reference, const Signal &estimate, int n_fft = 2048,
           int hop = 512, double floor = 1e-10);

// Scale-invariant SDR in dB, no mean subtraction: project the estimate on
// the reference, compare target vs residual energies, cap to [-100, 100].
// Throws LengthMismatch / ZeroReference.
double si_sdr(std::span<const double> reference,
              std::span<const double> estimate);

// Same as si_sdr after subtracting each input's mean.
double si_snr(std::span<const double> reference,
              std::span<const double> estimate);

struct MetricsReport {
  double lsd = 0.0;
  double si_sdr = 0.0;
  double si_snr = 0.0;
  int n_fft = 2048;
  int hop = 512;
  double floor = 1e-10;
};

MetricsReport compute_metrics(const Signal &reference, const Signal &estimate,
                              int n_fft = 2048, int hop = 512,
                              double floor = 1e-10);

// Single-line JSON with fixed key order:
// {"lsd": ..., "si_sdr": ..., "si_snr": ..., "n_fft": ..., "hop": ...,
//  "floor": ...}
std::string metrics_report_json(const MetricsReport &report);

}  // namespace chaoswave

#endif  // CHAOSWAVE_METRICS_H_
