// src/audio_io.cc

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

#include "chaoswave/audio_io.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "chaoswave/error.h"

namespace chaoswave {

namespace {

constexpr std::uint16_t kFmtPcm = 1;
constexpr std::uint16_t kFmtIeeeFloat = 3;

std::uint32_t read_u32(const unsigned char *p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char *p) {
  return static_cast<std::uint16_t>(p[0] |
                                    (static_cast<std::uint16_t>(p[1]) << 8));
}

void put_u32(std::vector<unsigned char> *out, std::uint32_t v) {
  out->push_back(static_cast<unsigned char>(v & 0xff));
  out->push_back(static_cast<unsigned char>((v >> 8) & 0xff));
  out->push_back(static_cast<unsigned char>((v >> 16) & 0xff));
  out->push_back(static_cast<unsigned char>((v >> 24) & 0xff));
}

void put_u16(std::vector<unsigned char> *out, std::uint16_t v) {
  out->push_back(static_cast<unsigned char>(v & 0xff));
  out->push_back(static_cast<unsigned char>((v >> 8) & 0xff));
}

void put_tag(std::vector<unsigned char> *out, const char *tag) {
  out->insert(out->end(), tag, tag + 4);
}

struct FmtInfo {
  std::uint16_t code = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits = 0;
};

// Modified zeroth-order Bessel function of the first kind, by power series.
double bessel_i0(double x) {
  const double half = 0.5 * x;
  double sum = 1.0, term = 1.0;
  for (int k = 1; k < 1000; ++k) {
    const double f = half / static_cast<double>(k);
    term *= f * f;
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum;
}

double normalized_sinc(double u) {
  if (u == 0.0) return 1.0;
  const double pu = M_PI * u;
  return std::sin(pu) / pu;
}

// Kaiser-windowed sinc low-pass with cutoff at fraction `cutoff` of the
// sampling rate, unit DC gain, odd length.
std::vector<double> design_lowpass(double cutoff, int taps, double beta) {
  if (taps % 2 == 0) ++taps;
  std::vector<double> h(taps);
  const int center = taps / 2;
  const double denom = bessel_i0(beta);
  double sum = 0.0;
  for (int i = 0; i < taps; ++i) {
    const double t = static_cast<double>(i - center);
    const double ideal = 2.0 * cutoff * normalized_sinc(2.0 * cutoff * t);
    const double frac = 2.0 * static_cast<double>(i) /
                            static_cast<double>(taps - 1) -
                        1.0;
    const double win = bessel_i0(beta * std::sqrt(1.0 - frac * frac)) / denom;
    h[i] = ideal * win;
    sum += h[i];
  }
  for (double &v : h) v /= sum;
  return h;
}

std::size_t clamp_index(std::int64_t i, std::size_t n) {
  if (i < 0) return 0;
  if (i >= static_cast<std::int64_t>(n)) return n - 1;
  return static_cast<std::size_t>(i);
}

}  // namespace

std::vector<double> mix_to_mono(
    const std::vector<std::vector<double>> &channels) {
  if (channels.empty()) throw EmptyInput("mix_to_mono: no channels");
  const std::size_t n = channels.front().size();
  for (const auto &ch : channels)
    if (ch.size() != n)
      throw ChannelLengthMismatch(
          "mix_to_mono: channel lengths differ (" + std::to_string(n) +
          " vs " + std::to_string(ch.size()) + ")");
  if (channels.size() == 1) return channels.front();
  std::vector<double> mono(n, 0.0);
  for (const auto &ch : channels)
    for (std::size_t i = 0; i < n; ++i) mono[i] += ch[i];
  const double inv = 1.0 / static_cast<double>(channels.size());
  for (double &v : mono) v *= inv;
  return mono;
}

Signal load_wav(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("load_wav: cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("load_wav: read failure on " + path);

  if (bytes.size() < 12)
    throw FormatError("load_wav: " + path + " too small for a RIFF header");
  if (std::memcmp(bytes.data(), "RIFX", 4) == 0)
    throw FormatError("load_wav: " + path +
                      " is big-endian RIFX, not supported");
  if (std::memcmp(bytes.data(), "RIFF", 4) != 0)
    throw FormatError("load_wav: " + path + " lacks RIFF magic");
  if (std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    throw FormatError("load_wav: " + path + " lacks WAVE form type");

  FmtInfo fmt;
  bool have_fmt = false;
  std::size_t data_off = 0, data_len = 0;
  bool have_data = false;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char *hdr = bytes.data() + pos;
    const std::uint32_t chunk_len = read_u32(hdr + 4);
    const std::size_t body = pos + 8;
    if (body + chunk_len > bytes.size())
      throw FormatError("load_wav: " + path + " has a truncated chunk");
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (chunk_len < 16)
        throw FormatError("load_wav: " + path + " fmt chunk too small");
      const unsigned char *f = bytes.data() + body;
      fmt.code = read_u16(f);
      fmt.channels = read_u16(f + 2);
      fmt.sample_rate = read_u32(f + 4);
      fmt.bits = read_u16(f + 14);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data_off = body;
      data_len = chunk_len;
      have_data = true;
    }
    // Chunks are word aligned; odd sizes carry one pad byte.
    pos = body + chunk_len + (chunk_len & 1);
  }
  if (!have_fmt)
    throw FormatError("load_wav: " + path + " has no fmt chunk");
  if (!have_data)
    throw FormatError("load_wav: " + path + " has no data chunk");
  if (fmt.channels == 0)
    throw FormatError("load_wav: " + path + " declares zero channels");
  if (fmt.sample_rate == 0)
    throw FormatError("load_wav: " + path + " declares zero sample rate");
  if (fmt.code != kFmtPcm && fmt.code != kFmtIeeeFloat)
    throw FormatError("load_wav: " + path + " uses unsupported codec " +
                      std::to_string(fmt.code) +
                      " (only PCM 16-bit and IEEE float 32-bit)");
  if (fmt.code == kFmtPcm && fmt.bits != 16)
    throw FormatError("load_wav: " + path + " is " +
                      std::to_string(fmt.bits) +
                      "-bit PCM, only 16-bit supported");
  if (fmt.code == kFmtIeeeFloat && fmt.bits != 32)
    throw FormatError("load_wav: " + path + " is " +
                      std::to_string(fmt.bits) +
                      "-bit float, only 32-bit supported");

  const std::size_t bytes_per_sample = fmt.code == kFmtPcm ? 2 : 4;
  const std::size_t frame_bytes = bytes_per_sample * fmt.channels;
  const std::size_t n_frames = data_len / frame_bytes;

  std::vector<std::vector<double>> channels(
      fmt.channels, std::vector<double>(n_frames));
  const unsigned char *d = bytes.data() + data_off;
  for (std::size_t fr = 0; fr < n_frames; ++fr) {
    for (std::uint16_t ch = 0; ch < fmt.channels; ++ch) {
      const unsigned char *s = d + fr * frame_bytes + ch * bytes_per_sample;
      if (fmt.code == kFmtPcm) {
        const std::int16_t v =
            static_cast<std::int16_t>(read_u16(s));
        channels[ch][fr] = static_cast<double>(v) / 32768.0;
      } else {
        channels[ch][fr] =
            static_cast<double>(std::bit_cast<float>(read_u32(s)));
      }
    }
  }

  Signal sig;
  sig.sample_rate = static_cast<int>(fmt.sample_rate);
  sig.samples = mix_to_mono(channels);
  return sig;
}

Signal trim_silence(const Signal &sig, double threshold_db, double pad_ms,
                    bool *all_silent) {
  if (all_silent) *all_silent = false;
  if (sig.sample_rate <= 0)
    throw DomainError("trim_silence: sample rate must be positive");
  const std::size_t n = sig.samples.size();
  Signal out;
  out.sample_rate = sig.sample_rate;
  if (n == 0) {
    if (all_silent) *all_silent = true;
    return out;
  }

  const std::size_t win = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::lround(0.02 * sig.sample_rate)));
  const std::size_t hop = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::lround(0.01 * sig.sample_rate)));

  std::vector<double> rms;
  for (std::size_t start = 0; start < n; start += hop) {
    const std::size_t stop = std::min(n, start + win);
    double energy = 0.0;
    for (std::size_t i = start; i < stop; ++i)
      energy += sig.samples[i] * sig.samples[i];
    rms.push_back(std::sqrt(energy / static_cast<double>(stop - start)));
  }

  const double peak = *std::max_element(rms.begin(), rms.end());
  const double gate = peak * std::pow(10.0, threshold_db / 20.0);
  std::size_t first = rms.size(), last = rms.size();
  for (std::size_t f = 0; f < rms.size(); ++f) {
    if (rms[f] > gate) {
      if (first == rms.size()) first = f;
      last = f;
    }
  }
  if (first == rms.size()) {
    if (all_silent) *all_silent = true;
    return out;
  }

  const std::size_t pad = static_cast<std::size_t>(
      std::lround(pad_ms * sig.sample_rate / 1000.0));
  std::size_t begin = first * hop;
  std::size_t end = std::min(n, last * hop + hop);
  begin = begin > pad ? begin - pad : 0;
  end = std::min(n, end + pad);
  out.samples.assign(sig.samples.begin() + begin, sig.samples.begin() + end);
  return out;
}

Signal band_limit(const Signal &sig, int low_rate) {
  if (sig.sample_rate <= 0)
    throw DomainError("band_limit: sample rate must be positive");
  if (low_rate <= 0)
    throw RateError("band_limit: low rate must be positive, got " +
                    std::to_string(low_rate));
  if (low_rate >= sig.sample_rate)
    throw RateError("band_limit: low rate " + std::to_string(low_rate) +
                    " Hz must be below the sample rate " +
                    std::to_string(sig.sample_rate) + " Hz");
  if (sig.sample_rate % low_rate != 0)
    throw RateError("band_limit: " + std::to_string(sig.sample_rate) +
                    " Hz is not an integer multiple of " +
                    std::to_string(low_rate) + " Hz");

  const int q = sig.sample_rate / low_rate;
  const std::size_t n = sig.samples.size();
  Signal out;
  out.sample_rate = sig.sample_rate;
  if (n == 0) return out;

  const std::vector<double> h = design_lowpass(0.5 / q, 64 * q, 8.6);
  const int taps = static_cast<int>(h.size());
  const int center = taps / 2;
  const std::vector<double> &x = sig.samples;

  // Anti-alias low-pass evaluated only at the kept (decimated) instants;
  // edges are handled by replicating the boundary samples.
  const std::size_t low_n = (n + static_cast<std::size_t>(q) - 1) / q;
  std::vector<double> low(low_n);
  for (std::size_t j = 0; j < low_n; ++j) {
    const std::int64_t at = static_cast<std::int64_t>(j) * q;
    double acc = 0.0;
    for (int i = 0; i < taps; ++i)
      acc += h[i] * x[clamp_index(at + i - center, n)];
    low[j] = acc;
  }

  // Windowed-sinc interpolation back to the original rate. The zero-stuffed
  // low-rate stream keeps one in q samples, so the kernel gain is scaled
  // by q to restore unit passband gain.
  out.samples.resize(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const std::int64_t pos = static_cast<std::int64_t>(idx);
    // Smallest j with 0 <= pos + center - j*q <= taps-1.
    const std::int64_t bound = pos + center - (taps - 1);
    std::int64_t j_lo = bound / q - 2;
    while (j_lo * q < bound) ++j_lo;
    double acc = 0.0;
    for (std::int64_t j = j_lo; j * q <= pos + center; ++j) {
      const std::int64_t tap = pos + center - j * q;
      acc += h[static_cast<std::size_t>(tap)] *
             low[clamp_index(j, low_n)];
    }
    out.samples[idx] = static_cast<double>(q) * acc;
  }
  return out;
}

WavWriteStats write_wav(const Signal &sig, const std::string &path,
                        WavFormat format) {
  if (sig.sample_rate <= 0)
    throw DomainError("write_wav: sample rate must be positive");
  WavWriteStats stats;

  const std::uint16_t code =
      format == WavFormat::kPcm16 ? kFmtPcm : kFmtIeeeFloat;
  const std::uint16_t bits = format == WavFormat::kPcm16 ? 16 : 32;
  const std::uint16_t block = static_cast<std::uint16_t>(bits / 8);
  const std::uint32_t data_len =
      static_cast<std::uint32_t>(sig.samples.size() * block);

  std::vector<unsigned char> bytes;
  bytes.reserve(44 + data_len);
  put_tag(&bytes, "RIFF");
  put_u32(&bytes, 36 + data_len);
  put_tag(&bytes, "WAVE");
  put_tag(&bytes, "fmt ");
  put_u32(&bytes, 16);
  put_u16(&bytes, code);
  put_u16(&bytes, 1);  // mono
  put_u32(&bytes, static_cast<std::uint32_t>(sig.sample_rate));
  put_u32(&bytes, static_cast<std::uint32_t>(sig.sample_rate) * block);
  put_u16(&bytes, block);
  put_u16(&bytes, bits);
  put_tag(&bytes, "data");
  put_u32(&bytes, data_len);

  if (format == WavFormat::kPcm16) {
    for (double v : sig.samples) {
      double scaled = v * 32768.0;
      if (!(scaled <= 32767.0)) {  // also catches NaN
        scaled = 32767.0;
        ++stats.clipped;
      } else if (scaled < -32768.0) {
        scaled = -32768.0;
        ++stats.clipped;
      }
      const std::int16_t q = static_cast<std::int16_t>(std::lround(scaled));
      put_u16(&bytes, static_cast<std::uint16_t>(q));
    }
  } else {
    for (double v : sig.samples)
      put_u32(&bytes, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
  }

  std::ofstream outf(path, std::ios::binary | std::ios::trunc);
  if (!outf) throw IoError("write_wav: cannot open " + path);
  outf.write(reinterpret_cast<const char *>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
  outf.flush();
  if (!outf) throw IoError("write_wav: write failure on " + path);
  return stats;
}

}  // namespace chaoswave
