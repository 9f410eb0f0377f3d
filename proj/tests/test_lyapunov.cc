// tests/test_lyapunov.cc

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

#include <cmath>
#include <vector>

#include "doctest.h"

#include "chaoswave/error.h"
#include "chaoswave/synth.h"
#include "test_util.h"

using namespace chaoswave;

namespace {

// Smallest gap between the best and second-best allowed distance over all
// rows; used to screen scaling tests away from floating-point ties.
double tie_margin(const DelayEmbedding &emb) {
  const std::int32_t M = static_cast<std::int32_t>(emb.rows());
  const std::int32_t wth = emb.m * emb.tau;
  double margin = 1e300;
  for (std::int32_t j = 0; j < M; ++j) {
    double best = 1e300, second = 1e300;
    for (std::int32_t c = 0; c < M; ++c) {
      if (std::abs(j - c) <= wth) continue;
      double d2 = 0.0;
      for (int k = 0; k < emb.m; ++k) {
        const double d = emb.at(j, k) - emb.at(c, k);
        d2 += d * d;
      }
      if (d2 < best) {
        second = best;
        best = d2;
      } else if (d2 < second) {
        second = d2;
      }
    }
    if (second < 1e300) margin = std::min(margin, second - best);
  }
  return margin;
}

}  // namespace

TEST_CASE("constant chunks give a flat curve at the log floor") {
  const std::vector<double> x(16, 0.7);
  const DelayEmbedding emb = delay_embed(x, 2, 1);
  const NeighborAssignment nn = theiler_nearest_neighbors(emb);
  const DivergenceCurve curve = divergence_curve(emb, nn, 1e-8);
  // M = 15 and the largest assigned neighbor index is 5, so K = 9.
  REQUIRE(curve.horizon() == 9);
  for (double d : curve.d)
    CHECK(d == doctest::Approx(std::log(1e-8)).epsilon(1e-14));

  const double expected = std::log(1e-8) * 36.0 / 204.0;
  CHECK(lyapunov_slope(curve) == doctest::Approx(expected).epsilon(1e-12));
  const auto [slope, intercept] = lyapunov_slope_affine(curve);
  CHECK(slope == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(intercept == doctest::Approx(std::log(1e-8)).epsilon(1e-12));
}

TEST_CASE("a neighbor at the last row leaves no horizon") {
  const std::vector<double> x = {0, 0.1, 0.2, 1.0, 0.11, 0.21};
  const DelayEmbedding emb = delay_embed(x, 2, 1);
  const NeighborAssignment nn = theiler_nearest_neighbors(emb);
  CHECK_THROWS_AS(divergence_curve(emb, nn, 0.0), EmptyHorizon);
}

TEST_CASE("divergence_curve rejects an all-sentinel assignment") {
  const std::vector<double> x = white_noise(3, 64);
  const DelayEmbedding emb = delay_embed(x, 2, 1);
  NeighborAssignment nn;
  nn.theiler = 2;
  nn.nu.assign(emb.rows(), kNoNeighbor);
  CHECK_THROWS_AS(divergence_curve(emb, nn, 1e-8), AllNeighborsMasked);
}

TEST_CASE("divergence_curve rejects a negative floor") {
  const std::vector<double> x = white_noise(4, 64);
  const DelayEmbedding emb = delay_embed(x, 2, 1);
  const NeighborAssignment nn = theiler_nearest_neighbors(emb);
  CHECK_THROWS_AS(divergence_curve(emb, nn, -1.0), DomainError);
}

TEST_CASE("through-origin slope follows the closed form") {
  DivergenceCurve curve;
  curve.d = {0, 1, 2};
  CHECK(lyapunov_slope(curve) == 1.0);
  curve.d = {5, 5, 5};
  CHECK(lyapunov_slope(curve) == 3.0);
  curve.d = {0, 0, 0};
  CHECK(lyapunov_slope(curve) == 0.0);
  curve.d = {1};
  CHECK_THROWS_AS(lyapunov_slope(curve), EmptyHorizon);
  curve.d.clear();
  CHECK_THROWS_AS(lyapunov_slope(curve), EmptyHorizon);
}

TEST_CASE("slope recovers the coefficient of an exact linear curve") {
  for (double c : {-2.0, 0.0, 0.5, 3.0}) {
    DivergenceCurve curve;
    for (int k = 0; k < 40; ++k)
      curve.d.push_back(c * static_cast<double>(k));
    const double got = lyapunov_slope(curve);
    if (c == 0.0)
      CHECK(std::fabs(got) <= 1e-12);
    else
      CHECK(std::fabs(got - c) <= 1e-12 * std::fabs(c));
  }
}

TEST_CASE("affine fit recovers slope and intercept of an exact affine curve") {
  DivergenceCurve curve;
  const double a = -0.75, c = 2.5;
  curve.d = {c, c + a, c + 2 * a};
  const auto [slope, intercept] = lyapunov_slope_affine(curve);
  CHECK(slope == doctest::Approx(a).epsilon(1e-12));
  CHECK(intercept == doctest::Approx(c).epsilon(1e-12));

  curve.d = {5, 5, 5};
  const auto [s2, i2] = lyapunov_slope_affine(curve);
  CHECK(s2 == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(i2 == doctest::Approx(5.0).epsilon(1e-12));

  curve.d = {1};
  CHECK_THROWS_AS(lyapunov_slope_affine(curve), EmptyHorizon);
}

TEST_CASE("slope is linear in the curve") {
  testutil::Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t K = 2 + rng.below(60);
    DivergenceCurve curve, shifted;
    const double a = 0.25 + rng.uniform() * 3.0;
    const double b = rng.uniform() * 4.0 - 2.0;
    double sk = 0.0, skk = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      const double d = rng.uniform() * 10.0 - 5.0;
      curve.d.push_back(d);
      shifted.d.push_back(a * d + b);
      sk += static_cast<double>(k);
      skk += static_cast<double>(k) * static_cast<double>(k);
    }
    const double expected = a * lyapunov_slope(curve) + b * sk / skk;
    CHECK(lyapunov_slope(shifted) ==
          doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("scaling the chunk shifts the rate by log(alpha) * sum(k)/sum(k^2)") {
  testutil::Rng rng(555);
  int done = 0, attempts = 0;
  while (done < 10 && attempts < 200) {
    ++attempts;
    std::vector<double> x = white_noise(rng.next(), 256);
    const DelayEmbedding emb = delay_embed(x, 4, 1);
    if (tie_margin(emb) < 1e-6) continue;

    double base;
    std::size_t K;
    try {
      const NeighborAssignment nn = theiler_nearest_neighbors(emb);
      const DivergenceCurve curve = divergence_curve(emb, nn, 1e-12);
      base = lyapunov_slope(curve);
      K = curve.d.size();
    } catch (const EmptyHorizon &) {
      continue;
    }
    double sk = 0.0, skk = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      sk += static_cast<double>(k);
      skk += static_cast<double>(k) * static_cast<double>(k);
    }

    for (double alpha : {0.5, 2.0, 8.0}) {
      std::vector<double> scaled(x);
      for (double &v : scaled) v *= alpha;
      const DelayEmbedding semb = delay_embed(scaled, 4, 1);
      const NeighborAssignment snn = theiler_nearest_neighbors(semb);
      const NeighborAssignment nn = theiler_nearest_neighbors(emb);
      CHECK(snn.nu == nn.nu);
      const double got =
          lyapunov_slope(divergence_curve(semb, snn, 1e-12));
      const double expected = base + std::log(alpha) * sk / skk;
      CHECK(std::fabs(got - expected) <= 1e-3);
    }
    ++done;
  }
  CHECK(done == 10);
}

TEST_CASE("exponent_map chunks the signal and floors the remainder") {
  LyapunovOptions opts;
  CHECK(exponent_map(white_noise(1, 2100), 1024, opts).values.size() == 2);
  CHECK(exponent_map(white_noise(2, 16384), 1024, opts).values.size() == 16);
  CHECK(exponent_map(white_noise(3, 16384), 64, opts).values.size() == 256);
  CHECK_THROWS_AS(exponent_map(white_noise(4, 63), 64, opts),
                  SignalTooShort);
  CHECK_THROWS_AS(exponent_map(white_noise(5, 64), 0, opts), DomainError);

  testutil::Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t w = 16 + rng.below(200);
    const std::size_t T = w + rng.below(4000);
    CHECK(exponent_map(white_noise(rng.next(), T), w, opts).values.size() ==
          T / w);
  }
}

TEST_CASE("a constant signal yields the floored-curve rate on every chunk") {
  const std::vector<double> x(64, 0.3);
  LyapunovOptions opts;
  opts.m = 2;
  opts.tau = 1;
  const ExponentMap map = exponent_map(x, 16, opts);
  REQUIRE(map.values.size() == 4);
  CHECK(map.degenerate_count == 0);
  const double expected = std::log(1e-8) * 36.0 / 204.0;
  for (double v : map.values)
    CHECK(v == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("degenerate chunks carry the substitute value and are flagged") {
  // A 440 Hz tone at this window size leaves several chunks without a
  // usable horizon.
  const std::vector<double> x = sine(440.0, 16000, 16384);
  LyapunovOptions opts;
  const ExponentMap map = exponent_map(x, 1024, opts);
  REQUIRE(map.values.size() == 16);
  CHECK(map.degenerate_count > 0);
  CHECK(map.degenerate_count < map.values.size());
  std::size_t flagged = 0;
  for (std::size_t i = 0; i < map.values.size(); ++i) {
    if (map.degenerate[i]) {
      CHECK(map.values[i] == 0.0);
      ++flagged;
    }
  }
  CHECK(flagged == map.degenerate_count);
}

TEST_CASE("multi-resolution bundle covers each window in ascending order") {
  const std::vector<double> x = white_noise(9, 16384);
  const MultiResolutionFeatures features =
      multi_resolution_exponent_maps(x, kDefaultWindows);
  REQUIRE(features.maps.size() == 5);
  const std::size_t lengths[5] = {256, 128, 64, 32, 16};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(features.maps[i].window == kDefaultWindows[i]);
    CHECK(features.maps[i].values.size() == lengths[i]);
    CHECK_FALSE(features.maps[i].skipped);
  }
}

TEST_CASE("windows longer than the signal are reported, not computed") {
  const std::vector<double> x = white_noise(10, 100);
  const MultiResolutionFeatures features =
      multi_resolution_exponent_maps(x, kDefaultWindows);
  REQUIRE(features.maps.size() == 5);
  CHECK(features.maps[0].window == 64);
  CHECK(features.maps[0].values.size() == 1);
  CHECK_FALSE(features.maps[0].skipped);
  for (std::size_t i = 1; i < 5; ++i) {
    CHECK(features.maps[i].skipped);
    CHECK(features.maps[i].values.empty());
  }
}

TEST_CASE("window order and duplicates are normalized") {
  const std::vector<double> x = white_noise(12, 4096);
  const MultiResolutionFeatures features = multi_resolution_exponent_maps(
      x, std::vector<std::size_t>{512, 64, 512, 128});
  REQUIRE(features.maps.size() == 3);
  CHECK(features.maps[0].window == 64);
  CHECK(features.maps[1].window == 128);
  CHECK(features.maps[2].window == 512);
}

TEST_CASE("windows too small for the embedding are skipped with a flag") {
  const std::vector<double> x = white_noise(13, 256);
  LyapunovOptions opts;  // m=4, tau=1 needs at least 4 samples per chunk
  const MultiResolutionFeatures features = multi_resolution_exponent_maps(
      x, std::vector<std::size_t>{2, 64}, opts);
  REQUIRE(features.maps.size() == 2);
  CHECK(features.maps[0].window == 2);
  CHECK(features.maps[0].skipped);
  CHECK_FALSE(features.maps[1].skipped);
}

TEST_CASE("exponent maps are identical across thread counts") {
  const std::vector<double> x = white_noise(21, 8192);
  LyapunovOptions one, many;
  one.threads = 1;
  many.threads = 8;
  const ExponentMap a = exponent_map(x, 256, one);
  const ExponentMap b = exponent_map(x, 256, many);
  CHECK(a.values == b.values);
  CHECK(a.degenerate == b.degenerate);
}
