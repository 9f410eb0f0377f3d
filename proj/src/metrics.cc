// src/metrics.cc

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

#include "chaoswave/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "chaoswave/error.h"

namespace chaoswave {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 FFT, in place, twiddles taken from one precomputed
// table so every stage indexes exact roots of unity.
void fft_inplace(std::vector<std::complex<double>> &a,
                 const std::vector<std::complex<double>> &twiddle) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, rev = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; rev & bit; bit >>= 1) rev ^= bit;
    rev ^= bit;
    if (i < rev) std::swap(a[i], a[rev]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> w = twiddle[k * stride];
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

void check_pair(const Signal &reference, const Signal &estimate) {
  if (reference.sample_rate != estimate.sample_rate)
    throw RateMismatch("sample rates differ: reference " +
                       std::to_string(reference.sample_rate) +
                       " Hz vs estimate " +
                       std::to_string(estimate.sample_rate) + " Hz");
  if (reference.size() != estimate.size())
    throw LengthMismatch("lengths differ: reference " +
                         std::to_string(reference.size()) + " vs estimate " +
                         std::to_string(estimate.size()));
}

// Shared SI ratio core; si_snr feeds mean-subtracted copies through this.
double scale_invariant_ratio(std::span<const double> reference,
                             std::span<const double> estimate) {
  if (reference.size() != estimate.size())
    throw LengthMismatch("lengths differ: reference " +
                         std::to_string(reference.size()) + " vs estimate " +
                         std::to_string(estimate.size()));
  double rr = 0.0, er = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    rr += reference[i] * reference[i];
    er += estimate[i] * reference[i];
  }
  if (rr == 0.0) throw ZeroReference("reference has zero energy");
  const double alpha = er / rr;
  const double target = alpha * alpha * rr;
  if (target <= 0.0) return -100.0;
  double err = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double d = estimate[i] - alpha * reference[i];
    err += d * d;
  }
  const double db = 10.0 * std::log10(target / (err + 1e-300));
  return std::clamp(db, -100.0, 100.0);
}

std::vector<double> subtract_mean(std::span<const double> x) {
  double mean = 0.0;
  for (double v : x) mean += v;
  if (!x.empty()) mean /= static_cast<double>(x.size());
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - mean;
  return out;
}

}  // namespace

Spectrogram stft(std::span<const double> x, int n_fft, int hop) {
  if (!is_power_of_two(n_fft) || n_fft < 16)
    throw DomainError("stft: n_fft must be a power of two >= 16");
  if (hop < 1 || hop > n_fft)
    throw DomainError("stft: hop must lie in [1, n_fft]");
  if (x.size() < static_cast<std::size_t>(n_fft))
    throw SignalTooShort("stft: signal length " + std::to_string(x.size()) +
                         " < n_fft " + std::to_string(n_fft));

  const std::size_t nf = static_cast<std::size_t>(n_fft);
  std::vector<double> window(nf);
  for (std::size_t k = 0; k < nf; ++k)
    window[k] = 0.5 - 0.5 * std::cos(2.0 * M_PI * static_cast<double>(k) /
                                     static_cast<double>(nf));
  std::vector<std::complex<double>> twiddle(nf / 2);
  for (std::size_t k = 0; k < nf / 2; ++k) {
    const double ang = -2.0 * M_PI * static_cast<double>(k) /
                       static_cast<double>(nf);
    twiddle[k] = {std::cos(ang), std::sin(ang)};
  }

  Spectrogram sg;
  sg.n_fft = n_fft;
  sg.hop = hop;
  sg.n_bins = nf / 2 + 1;
  sg.n_frames = 1 + (x.size() - nf) / static_cast<std::size_t>(hop);
  sg.coeffs.resize(sg.n_frames * sg.n_bins);

  std::vector<std::complex<double>> buf(nf);
  for (std::size_t t = 0; t < sg.n_frames; ++t) {
    const std::size_t start = t * static_cast<std::size_t>(hop);
    for (std::size_t k = 0; k < nf; ++k)
      buf[k] = {x[start + k] * window[k], 0.0};
    fft_inplace(buf, twiddle);
    for (std::size_t b = 0; b < sg.n_bins; ++b)
      sg.coeffs[t * sg.n_bins + b] = buf[b];
  }
  return sg;
}

double lsd(const Signal &reference, const Signal &estimate, int n_fft, int hop,
           double floor) {
  check_pair(reference, estimate);
  const Spectrogram sr = stft(reference.samples, n_fft, hop);
  const Spectrogram se = stft(estimate.samples, n_fft, hop);
  double total = 0.0;
  for (std::size_t t = 0; t < sr.n_frames; ++t) {
    double acc = 0.0;
    for (std::size_t b = 0; b < sr.n_bins; ++b) {
      const double pr = std::norm(sr.coeffs[t * sr.n_bins + b]);
      const double pe = std::norm(se.coeffs[t * se.n_bins + b]);
      const double diff = std::log10(pr + floor) - std::log10(pe + floor);
      acc += diff * diff;
    }
    total += std::sqrt(acc / static_cast<double>(sr.n_bins));
  }
  return total / static_cast<double>(sr.n_frames);
}

double si_sdr(std::span<const double> reference,
              std::span<const double> estimate) {
  return scale_invariant_ratio(reference, estimate);
}

double si_snr(std::span<const double> reference,
              std::span<const double> estimate) {
  const std::vector<double> r = subtract_mean(reference);
  const std::vector<double> e = subtract_mean(estimate);
  return scale_invariant_ratio(r, e);
}

MetricsReport compute_metrics(const Signal &reference, const Signal &estimate,
                              int n_fft, int hop, double floor) {
  check_pair(reference, estimate);
  MetricsReport report;
  report.n_fft = n_fft;
  report.hop = hop;
  report.floor = floor;
  report.lsd = lsd(reference, estimate, n_fft, hop, floor);
  report.si_sdr = si_sdr(reference.samples, estimate.samples);
  report.si_snr = si_snr(reference.samples, estimate.samples);
  return report;
}

std::string metrics_report_json(const MetricsReport &report) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "{\"lsd\": %.9g, \"si_sdr\": %.9g, \"si_snr\": %.9g, "
                "\"n_fft\": %d, \"hop\": %d, \"floor\": %.9g}",
                report.lsd, report.si_sdr, report.si_snr, report.n_fft,
                report.hop, report.floor);
  return std::string(buf);
}

}  // namespace chaoswave
