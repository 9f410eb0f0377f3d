// include/chaoswave/audio_io.h

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

#ifndef CHAOSWAVE_AUDIO_IO_H_
#define CHAOSWAVE_AUDIO_IO_H_

#include <cstddef>
#include <string>
#include <vector>

#include "chaoswave/signal.h"

namespace chaoswave {

enum class WavFormat {
  kPcm16,    // fmt code 1, 16-bit integer
  kFloat32,  // fmt code 3, IEEE float
};

// Reads a RIFF/WAVE file (PCM16 or float32, any channel count, extra chunks
// skipped). int16 samples are scaled by 1/32768; multi-channel input is
// collapsed with mix_to_mono. Throws IoError on unreadable files and
// FormatError on anything that is not a supported WAV.
Signal load_wav(const std::string &path);

// Arithmetic mean across channels per frame. Throws ChannelLengthMismatch
// if the channels differ in length, EmptyInput on zero channels.
std::vector<double> mix_to_mono(
    const std::vector<std::vector<double>> &channels);

// Removes leading/trailing silence. Activity is short-window RMS (20 ms
// windows, 10 ms hop) above the loudest window by threshold_db (negative);
// the active span is expanded by pad_ms on each side and clamped to the
// signal. All-silent input yields an empty Signal and sets *all_silent.
Signal trim_silence(const Signal &sig, double threshold_db = -40.0,
                    double pad_ms = 100.0, bool *all_silent = nullptr);

// Simulates band-limited audio: anti-alias low-pass, decimation to
// low_rate, then Kaiser-windowed sinc interpolation back up. The output has
// the same sample rate and the same length as the input. Requires
// sample_rate to be an integer multiple of low_rate; throws RateError
// otherwise or when low_rate >= sample_rate.
Signal band_limit(const Signal &sig, int low_rate);

struct WavWriteStats {
  std::size_t clipped = 0;  // samples saturated during pcm16 quantization
};

// Writes a mono WAV file. pcm16 saturates out-of-range samples and reports
// the count. Throws IoError.
WavWriteStats write_wav(const Signal &sig, const std::string &path,
                        WavFormat format = WavFormat::kPcm16);

}  // namespace chaoswave

#endif  // CHAOSWAVE_AUDIO_IO_H_
