// tools/chaoswave.cc

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

// Batch front-end: synthesize test signals, extract Lyapunov exponent maps
// and recurrence plots from WAV files, and score file pairs with objective
// metrics. Exit codes: 0 success, 2 usage or parameter error, 3 I/O or
// format error, 4 input degenerate (nothing to analyze), 5 length or rate
// mismatch between a metrics pair.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chaoswave/audio_io.h"
#include "chaoswave/error.h"
#include "chaoswave/lyapunov.h"
#include "chaoswave/metrics.h"
#include "chaoswave/recurrence.h"
#include "chaoswave/signal.h"
#include "chaoswave/synth.h"

namespace fs = std::filesystem;
using chaoswave::Signal;
using ordered_json = nlohmann::ordered_json;

namespace {

struct ExtractConfig {
  std::string input;
  std::string out_dir;
  std::vector<std::size_t> windows = chaoswave::kDefaultWindows;
  std::vector<int> scales = chaoswave::kDefaultScales;
  std::size_t cap = chaoswave::kDefaultLengthCap;
  int embed_dim = 4;
  int delay = 1;
  double epsilon = 1e-8;
  bool affine_fit = false;
  bool trim = false;
  double trim_db = -40.0;
  double trim_pad_ms = 100.0;
  int band_limit_hz = 0;
  unsigned threads = 0;
};

struct MetricsConfig {
  std::string reference;
  std::string estimate;
  std::string align;
  int n_fft = 2048;
  int hop = 512;
  double floor = 1e-10;
};

struct SynthConfig {
  std::string kind;
  std::string out;
  int rate = 16000;
  std::size_t n = 0;
  double dur = 0.0;
  double r = 4.0;
  double x0 = 0.3;
  bool normalize = false;
  double freq = 440.0;
  double amp = 1.0;
  double phase = 0.0;
  std::uint64_t seed = 42;
  std::string format = "float32";
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return std::string(buf);
}

void write_file_atomic(const fs::path &final_path, const std::string &data) {
  fs::path tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw chaoswave::IoError("cannot open " + tmp.string() +
                               " for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out)
      throw chaoswave::IoError("write failure on " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, final_path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw chaoswave::IoError("cannot move " + tmp.string() + " to " +
                             final_path.string() + ": " + ec.message());
  }
}

void require_readable(const std::string &path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw chaoswave::IoError("cannot open " + path);
}

std::string lyapunov_csv(const chaoswave::MultiResolutionFeatures &features) {
  std::string csv = "window,chunk_index,lambda\n";
  for (const auto &map : features.maps) {
    for (std::size_t i = 0; i < map.values.size(); ++i) {
      csv += std::to_string(map.window);
      csv += ',';
      csv += std::to_string(i);
      csv += ',';
      csv += format_double(map.values[i]);
      csv += '\n';
    }
  }
  return csv;
}

std::string rp_pgm(const chaoswave::RecurrencePlot &rp) {
  std::string pgm = "P5\n" + std::to_string(rp.size) + " " +
                    std::to_string(rp.size) + "\n255\n";
  pgm.reserve(pgm.size() + rp.bits.size());
  for (std::uint8_t b : rp.bits)
    pgm.push_back(b ? static_cast<char>(static_cast<unsigned char>(255))
                    : '\0');
  return pgm;
}

int cmd_extract(const ExtractConfig &cfg) {
  require_readable(cfg.input);
  fs::path out_dir(cfg.out_dir);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec && !fs::is_directory(out_dir))
    throw chaoswave::IoError("cannot create output directory " +
                             out_dir.string() + ": " + ec.message());

  Signal sig = chaoswave::load_wav(cfg.input);
  bool all_silent = false;
  if (cfg.trim)
    sig = chaoswave::trim_silence(sig, cfg.trim_db, cfg.trim_pad_ms,
                                  &all_silent);
  if (cfg.band_limit_hz > 0 && !sig.samples.empty())
    sig = chaoswave::band_limit(sig, cfg.band_limit_hz);

  if (sig.samples.empty()) {
    std::cerr << "chaoswave: nothing to analyze after preprocessing (input "
              << (all_silent ? "is all silence" : "is empty") << ")\n";
    return 4;
  }

  chaoswave::LyapunovOptions opts;
  opts.m = cfg.embed_dim;
  opts.tau = cfg.delay;
  opts.epsilon = cfg.epsilon;
  opts.fit = cfg.affine_fit ? chaoswave::FitMode::kAffine
                            : chaoswave::FitMode::kThroughOrigin;
  opts.threads = cfg.threads;

  const chaoswave::MultiResolutionFeatures features =
      chaoswave::multi_resolution_exponent_maps(sig.samples, cfg.windows,
                                                opts);
  const chaoswave::MultiScaleRPs rps =
      chaoswave::multi_scale_rps(sig.samples, cfg.scales, cfg.cap,
                                 cfg.threads);

  const std::string stem = fs::path(cfg.input).stem().string();

  std::size_t degenerate_total = 0, skipped_windows = 0;
  ordered_json window_meta = ordered_json::array();
  for (const auto &map : features.maps) {
    ordered_json entry;
    entry["window"] = map.window;
    entry["chunks"] = map.values.size();
    entry["degenerate_chunks"] = map.degenerate_count;
    entry["skipped"] = map.skipped;
    window_meta.push_back(entry);
    degenerate_total += map.degenerate_count;
    if (map.skipped) ++skipped_windows;
  }
  ordered_json scale_meta = ordered_json::array();
  for (const auto &rp : rps.plots) {
    ordered_json entry;
    entry["scale"] = rp.scale;
    entry["size"] = rp.size;
    entry["threshold"] = rp.threshold;
    scale_meta.push_back(entry);
  }

  ordered_json meta;
  meta["input"] = cfg.input;
  meta["sample_rate"] = sig.sample_rate;
  meta["samples_analyzed"] = sig.samples.size();
  meta["trim_silence"] = cfg.trim;
  meta["trim_threshold_db"] = cfg.trim_db;
  meta["trim_pad_ms"] = cfg.trim_pad_ms;
  if (cfg.band_limit_hz > 0)
    meta["band_limit_hz"] = cfg.band_limit_hz;
  else
    meta["band_limit_hz"] = nullptr;
  meta["embed_dim"] = cfg.embed_dim;
  meta["delay"] = cfg.delay;
  meta["epsilon"] = cfg.epsilon;
  meta["fit"] = cfg.affine_fit ? "affine" : "through_origin";
  meta["windows"] = cfg.windows;
  meta["scales"] = cfg.scales;
  meta["cap"] = cfg.cap;
  meta["lyapunov"] = window_meta;
  meta["recurrence"] = scale_meta;
  meta["warnings"]["all_silent"] = all_silent;
  meta["warnings"]["degenerate_chunks_total"] = degenerate_total;
  meta["warnings"]["skipped_windows"] = skipped_windows;

  write_file_atomic(out_dir / (stem + "_lyap.csv"), lyapunov_csv(features));
  for (const auto &rp : rps.plots)
    write_file_atomic(
        out_dir / (stem + "_rp_s" + std::to_string(rp.scale) + ".pgm"),
        rp_pgm(rp));
  write_file_atomic(out_dir / (stem + "_meta.json"), meta.dump(2) + "\n");
  return 0;
}

int cmd_metrics(const MetricsConfig &cfg) {
  require_readable(cfg.reference);
  require_readable(cfg.estimate);
  Signal ref = chaoswave::load_wav(cfg.reference);
  Signal est = chaoswave::load_wav(cfg.estimate);
  if (ref.sample_rate != est.sample_rate)
    throw chaoswave::RateMismatch(
        "sample rates differ: reference " + std::to_string(ref.sample_rate) +
        " Hz vs estimate " + std::to_string(est.sample_rate) + " Hz");
  if (ref.size() != est.size()) {
    if (cfg.align == "truncate") {
      const std::size_t n = std::min(ref.size(), est.size());
      ref.samples.resize(n);
      est.samples.resize(n);
    } else {
      throw chaoswave::LengthMismatch(
          "lengths differ: reference " + std::to_string(ref.size()) +
          " vs estimate " + std::to_string(est.size()) +
          " (use --align truncate)");
    }
  }
  const chaoswave::MetricsReport report =
      chaoswave::compute_metrics(ref, est, cfg.n_fft, cfg.hop, cfg.floor);
  std::cout << chaoswave::metrics_report_json(report) << "\n";
  return 0;
}

int cmd_synth(const SynthConfig &cfg) {
  std::size_t n = cfg.n;
  if (n == 0 && cfg.dur > 0.0)
    n = static_cast<std::size_t>(std::llround(cfg.dur * cfg.rate));
  if (n == 0)
    throw chaoswave::DomainError("synth: need --n or --dur to size the output");

  Signal sig;
  sig.sample_rate = cfg.rate;
  if (cfg.kind == "logistic") {
    sig.samples = chaoswave::logistic_map(cfg.r, cfg.x0, n, cfg.normalize);
  } else if (cfg.kind == "sine") {
    sig.samples = chaoswave::sine(cfg.freq, cfg.rate, n, cfg.amp, cfg.phase);
  } else {
    sig.samples = chaoswave::white_noise(cfg.seed, n);
  }

  const fs::path out(cfg.out);
  if (!out.parent_path().empty()) {
    std::error_code ec;
    fs::create_directories(out.parent_path(), ec);
    if (ec && !fs::is_directory(out.parent_path()))
      throw chaoswave::IoError("cannot create directory " +
                               out.parent_path().string() + ": " +
                               ec.message());
  }
  fs::path tmp = out;
  tmp += ".tmp";
  const chaoswave::WavFormat format = cfg.format == "pcm16"
                                          ? chaoswave::WavFormat::kPcm16
                                          : chaoswave::WavFormat::kFloat32;
  const chaoswave::WavWriteStats stats =
      chaoswave::write_wav(sig, tmp.string(), format);
  std::error_code ec;
  fs::rename(tmp, out, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw chaoswave::IoError("cannot move " + tmp.string() + " to " +
                             out.string() + ": " + ec.message());
  }
  if (stats.clipped > 0)
    std::cerr << "chaoswave: warning: " << stats.clipped
              << " samples clipped while writing " << cfg.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"chaos-informed speech feature extraction"};
  app.require_subcommand(1);

  ExtractConfig ext;
  CLI::App *cmd_ext =
      app.add_subcommand("extract", "extract exponent maps and recurrence "
                                    "plots from a WAV file");
  cmd_ext->add_option("--input", ext.input, "input WAV file")->required();
  cmd_ext->add_option("--out", ext.out_dir, "output directory")->required();
  cmd_ext->add_option("--windows", ext.windows,
                      "comma separated window lengths")
      ->delimiter(',');
  cmd_ext->add_option("--scales", ext.scales,
                      "comma separated downsampling strides")
      ->delimiter(',');
  cmd_ext->add_option("--cap", ext.cap, "recurrence plot side length cap");
  cmd_ext->add_option("--embed-dim", ext.embed_dim, "embedding dimension m");
  cmd_ext->add_option("--delay", ext.delay, "embedding delay tau in samples");
  cmd_ext->add_option("--epsilon", ext.epsilon,
                      "stability floor inside the divergence log");
  cmd_ext->add_flag("--affine-fit", ext.affine_fit,
                    "fit slope and intercept instead of the through-origin "
                    "slope (diagnostic)");
  cmd_ext->add_flag("--trim-silence", ext.trim,
                    "trim leading and trailing silence before analysis");
  cmd_ext->add_option("--trim-db", ext.trim_db,
                      "silence threshold in dB below peak RMS");
  cmd_ext->add_option("--trim-pad-ms", ext.trim_pad_ms,
                      "padding kept around the active span in ms");
  cmd_ext->add_option("--band-limit", ext.band_limit_hz,
                      "simulate band-limited audio at this rate in Hz");
  cmd_ext->add_option("--threads", ext.threads,
                      "worker threads (0 = CHAOSWAVE_THREADS or hardware)");

  MetricsConfig met;
  CLI::App *cmd_met = app.add_subcommand(
      "metrics", "score an estimate WAV against a reference WAV");
  cmd_met->add_option("--reference", met.reference, "reference WAV")
      ->required();
  cmd_met->add_option("--estimate", met.estimate, "estimate WAV")->required();
  cmd_met->add_option("--align", met.align,
                      "length mismatch policy: truncate")
      ->check(CLI::IsMember({"truncate"}));
  cmd_met->add_option("--n-fft", met.n_fft, "FFT size");
  cmd_met->add_option("--hop", met.hop, "hop size in samples");
  cmd_met->add_option("--floor", met.floor, "power floor inside the log");

  SynthConfig syn;
  CLI::App *cmd_syn =
      app.add_subcommand("synth", "write a deterministic test signal as WAV");
  cmd_syn->add_option("--kind", syn.kind, "logistic | sine | noise")
      ->required()
      ->check(CLI::IsMember({"logistic", "sine", "noise"}));
  cmd_syn->add_option("--out", syn.out, "output WAV path")->required();
  cmd_syn->add_option("--rate", syn.rate, "sample rate in Hz");
  cmd_syn->add_option("--n", syn.n, "sample count");
  cmd_syn->add_option("--dur", syn.dur, "duration in seconds");
  cmd_syn->add_option("--r", syn.r, "logistic growth parameter");
  cmd_syn->add_option("--x0", syn.x0, "logistic initial state");
  cmd_syn->add_flag("--normalize", syn.normalize,
                    "recentre logistic output to zero mean, unit RMS");
  cmd_syn->add_option("--freq", syn.freq, "sine frequency in Hz");
  cmd_syn->add_option("--amp", syn.amp, "sine amplitude");
  cmd_syn->add_option("--phase", syn.phase, "sine phase in radians");
  cmd_syn->add_option("--seed", syn.seed, "noise generator seed");
  cmd_syn->add_option("--format", syn.format, "pcm16 | float32")
      ->check(CLI::IsMember({"pcm16", "float32"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_ext->parsed()) return cmd_extract(ext);
    if (cmd_met->parsed()) return cmd_metrics(met);
    return cmd_synth(syn);
  } catch (const chaoswave::IoError &e) {
    std::cerr << "chaoswave: " << e.what() << "\n";
    return 3;
  } catch (const chaoswave::FormatError &e) {
    std::cerr << "chaoswave: " << e.what() << "\n";
    return 3;
  } catch (const chaoswave::LengthMismatch &e) {
    std::cerr << "chaoswave: " << e.what() << "\n";
    return 5;
  } catch (const chaoswave::RateMismatch &e) {
    std::cerr << "chaoswave: " << e.what() << "\n";
    return 5;
  } catch (const chaoswave::Error &e) {
    // Remaining library errors signal unusable parameters or inputs.
    std::cerr << "chaoswave: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "chaoswave: unexpected error: " << e.what() << "\n";
    return 1;
  }
}
